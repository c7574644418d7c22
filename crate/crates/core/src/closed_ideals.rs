//! Ideals `I_P = {X ∈ ℒ^ω : P | X}` for reciprocal `P`, their centralizer
//! closures `Z(I_P)` and the even-multiplicity test for closedness.

use std::fmt;

use thiserror::Error;

use crate::loop_algebra::{FixedLoopElement, LoopElement};
use crate::poly::{
    crt_solve, is_reciprocal, laurent_divisible, multiplicity_at, poly_lcm, Laurent, PolyError,
    Polynomial, Sign,
};
use crate::scalar::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{0} is not a reciprocal polynomial")]
    NotReciprocal(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

type P = Polynomial<Rational>;

/// A monic reciprocal `P = (t-1)^L (t+1)^K P*` with `P*(±1) ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReciprocalIdeal {
    p: P,
    sign: Sign,
    l: u32,
    k: u32,
    p_star: P,
}

impl ReciprocalIdeal {
    pub fn new(p: P) -> Result<Self, IdealError> {
        let sign = is_reciprocal(&p)?.ok_or_else(|| IdealError::NotReciprocal(p.to_string()))?;
        let one = Rational::one();
        let l = multiplicity_at(&p, &one)?;
        let k = multiplicity_at(&p, &-one.clone())?;
        let factor = &P::linear_root(one.clone()).pow(l) * &P::linear_root(-one).pow(k);
        let p_star = p.exact_div(&factor)?.expect("multiplicities divide");
        Ok(ReciprocalIdeal { p, sign, l, k, p_star })
    }

    pub fn polynomial(&self) -> &P {
        &self.p
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Multiplicity at `t = 1`.
    pub fn mult_at_one(&self) -> u32 {
        self.l
    }

    /// Multiplicity at `t = -1`.
    pub fn mult_at_minus_one(&self) -> u32 {
        self.k
    }

    pub fn p_star(&self) -> &P {
        &self.p_star
    }

    pub fn degree(&self) -> u32 {
        self.p.degree().unwrap()
    }
}

impl fmt::Display for ReciprocalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({})", self.p)
    }
}

/// One failed divisibility condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityFailure {
    /// `"e"`, `"f"` or `"h"`.
    pub component: &'static str,
    pub divisor: String,
    pub value: String,
}

impl fmt::Display for DivisibilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} does not divide the {}-component {}", self.divisor, self.component, self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub failures: Vec<DivisibilityFailure>,
}

fn check(
    failures: &mut Vec<DivisibilityFailure>,
    component: &'static str,
    x: &Laurent<Rational>,
    d: &P,
) {
    if !laurent_divisible(x, d).expect("divisor is nonzero") {
        failures.push(DivisibilityFailure { component, divisor: d.to_string(), value: x.to_string() });
    }
}

fn verdict(failures: Vec<DivisibilityFailure>) -> Verdict {
    Verdict { member: failures.is_empty(), failures }
}

/// Membership in `I_P` with the failing conditions.
pub fn membership(ideal: &ReciprocalIdeal, x: &FixedLoopElement) -> Verdict {
    let mut failures = Vec::new();
    check(&mut failures, "e", &x.as_loop().p, &ideal.p);
    check(&mut failures, "h", &x.as_loop().r, &ideal.p);
    verdict(failures)
}

/// `X ∈ I_P`. For reciprocal `P` the `f`-condition follows from the `e`-one.
pub fn ideal_contains(ideal: &ReciprocalIdeal, x: &FixedLoopElement) -> bool {
    membership(ideal, x).member
}

/// Membership for any nonzero `P`: all three components divisible.
pub fn general_membership(p: &P, x: &LoopElement<Rational>) -> Result<Verdict, IdealError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    let mut failures = Vec::new();
    check(&mut failures, "e", &x.p, p);
    check(&mut failures, "f", &x.q, p);
    check(&mut failures, "h", &x.r, p);
    Ok(verdict(failures))
}

/// `P̃ = (t-1)^{2⌊L/2⌋} (t+1)^{2⌊K/2⌋} P*`.
pub fn tilde_p(ideal: &ReciprocalIdeal) -> P {
    let one = Rational::one();
    let a = P::linear_root(one.clone()).pow(2 * (ideal.l / 2));
    let b = P::linear_root(-one).pow(2 * (ideal.k / 2));
    &(&a * &b) * &ideal.p_star
}

/// Membership in `Z(I_P)` with the failing conditions.
pub fn z_membership(ideal: &ReciprocalIdeal, x: &FixedLoopElement) -> Verdict {
    let mut failures = Vec::new();
    check(&mut failures, "e", &x.as_loop().p, &tilde_p(ideal));
    check(&mut failures, "h", &x.as_loop().r, &ideal.p);
    verdict(failures)
}

/// `X ∈ Z(I_P)`: `P̃ | p` and `P | r`.
pub fn z_contains(ideal: &ReciprocalIdeal, x: &FixedLoopElement) -> bool {
    z_membership(ideal, x).member
}

/// `Z(I_P) = I_P` exactly when both multiplicities at `±1` are even.
pub fn is_closed(ideal: &ReciprocalIdeal) -> bool {
    ideal.l % 2 == 0 && ideal.k % 2 == 0
}

/// `I_P ∩ I_Q = I_{lcm(P,Q)}`.
pub fn intersect(a: &ReciprocalIdeal, b: &ReciprocalIdeal) -> ReciprocalIdeal {
    let lcm = poly_lcm(&a.p, &b.p).expect("nonzero inputs");
    ReciprocalIdeal::new(lcm).expect("lcm of reciprocal polynomials is reciprocal")
}

/// `X - Y ∈ I_P`.
pub fn equiv_mod(ideal: &ReciprocalIdeal, x: &FixedLoopElement, y: &FixedLoopElement) -> bool {
    let diff = FixedLoopElement::new(x.as_loop() - y.as_loop()).expect("difference of fixed elements");
    ideal_contains(ideal, &diff)
}

/// Builds `X ∈ ℒ^ω` with `X ≡ X_j (mod I_{P_j})` for pairwise coprime `P_j`.
///
/// With `N` clearing all negative exponents, `p̃ ≡ t^N p_j` and `q̃ ≡ t^N r_j`
/// modulo `P_j`; then `p = p̃/t^N` and `r = ½(q̃/t^N - t^N q̃(t⁻¹))`.
pub fn crt_lift(targets: &[(FixedLoopElement, ReciprocalIdeal)]) -> Result<FixedLoopElement, IdealError> {
    if let [(x, _)] = targets {
        return Ok(x.clone());
    }
    let n = targets
        .iter()
        .flat_map(|(x, _)| [x.as_loop().p.min_exp(), x.as_loop().r.min_exp()])
        .flatten()
        .map(|e| -e)
        .max()
        .unwrap_or(0)
        .max(0);
    let lift = |l: &Laurent<Rational>| P::from_laurent(l.shift(n)).expect("shifted into k[t]");
    let moduli: Vec<P> = targets.iter().map(|(_, i)| i.p.clone()).collect();
    let p_res: Vec<P> = targets.iter().map(|(x, _)| lift(&x.as_loop().p)).collect();
    let r_res: Vec<P> = targets.iter().map(|(x, _)| lift(&x.as_loop().r)).collect();
    let p_tilde = crt_solve(&p_res, &moduli)?;
    let q_tilde = crt_solve(&r_res, &moduli)?;
    let p = p_tilde.as_laurent().shift(-n);
    let q_over = q_tilde.as_laurent().shift(-n);
    let r = (&q_over - &q_over.substitute_inverse()).scale(&Rational::new(1, 2).unwrap());
    let q = p.substitute_inverse();
    Ok(FixedLoopElement::new(LoopElement::new(p, q, r)).expect("construction is ω-fixed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_algebra::{basis_b, basis_c};

    fn pp(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
    }

    fn ideal(c: &[i64]) -> ReciprocalIdeal {
        ReciprocalIdeal::new(pp(c)).unwrap()
    }

    fn tm1() -> P {
        pp(&[-1, 1])
    }
    fn tp1() -> P {
        pp(&[1, 1])
    }

    #[test]
    fn construction() {
        let i = ReciprocalIdeal::new(&tm1().pow(3) * &tp1().pow(2)).unwrap();
        assert_eq!((i.mult_at_one(), i.mult_at_minus_one()), (3, 2));
        assert_eq!(i.p_star(), &P::one());
        assert!(matches!(ReciprocalIdeal::new(pp(&[0, 1, 1])), Err(IdealError::NotReciprocal(_))));
    }

    #[test]
    fn membership_examples() {
        assert!(ideal_contains(&ideal(&[-1, 1]), &basis_c(1)));
        let sq = ReciprocalIdeal::new(tm1().pow(2)).unwrap();
        let v = membership(&sq, &basis_c(1));
        assert!(!v.member);
        assert_eq!(v.failures.len(), 1);
        assert_eq!(v.failures[0].component, "h");
        assert!(ideal_contains(&ideal(&[1, 3, 1]), &FixedLoopElement::zero()));
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde_p(&ideal(&[-1, 1])), P::one());
        assert_eq!(tilde_p(&ReciprocalIdeal::new(tm1().pow(2)).unwrap()), tm1().pow(2));
        assert_eq!(tilde_p(&ideal(&[1, 3, 1])), pp(&[1, 3, 1]));
    }

    #[test]
    fn z_examples() {
        assert!(z_contains(&ideal(&[-1, 1]), &basis_b(0)));
        assert!(!z_contains(&ReciprocalIdeal::new(tm1().pow(2)).unwrap(), &basis_c(1)));
    }

    #[test]
    fn closedness_examples() {
        assert!(!is_closed(&ideal(&[-1, 1])));
        assert!(is_closed(&ReciprocalIdeal::new(&tm1().pow(2) * &tp1().pow(2)).unwrap()));
        assert!(is_closed(&ideal(&[1, 3, 1])));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(intersect(&ideal(&[-1, 1]), &ideal(&[1, 1])).polynomial(), &pp(&[-1, 0, 1]));
        let p = ideal(&[1, 3, 1]);
        assert_eq!(intersect(&p, &p), p);
        let a = ReciprocalIdeal::new(tm1().pow(2)).unwrap();
        let b = ReciprocalIdeal::new(&tm1() * &tp1()).unwrap();
        assert_eq!(intersect(&a, &b).polynomial(), &(&tm1().pow(2) * &tp1()));
    }

    #[test]
    fn equiv_examples() {
        let x = basis_b(3);
        assert!(equiv_mod(&ideal(&[1, 3, 1]), &x, &x));
        assert!(equiv_mod(&ideal(&[-1, 1]), &basis_c(1), &FixedLoopElement::zero()));
        let sq = ReciprocalIdeal::new(tm1().pow(2)).unwrap();
        assert!(!equiv_mod(&sq, &basis_c(1), &FixedLoopElement::zero()));
    }

    #[test]
    fn crt_examples() {
        let q = ideal(&[1, 3, 1]);
        let sq = ReciprocalIdeal::new(tm1().pow(2)).unwrap();
        let zero = FixedLoopElement::zero();
        let x = crt_lift(&[(basis_b(0), q.clone()), (zero.clone(), sq.clone())]).unwrap();
        assert!(equiv_mod(&q, &x, &basis_b(0)));
        assert!(ideal_contains(&sq, &x));
        assert_eq!(crt_lift(&[(basis_b(2), q.clone())]).unwrap(), basis_b(2));
        assert!(crt_lift(&[(zero.clone(), q.clone()), (zero.clone(), sq.clone())]).unwrap().is_zero());
        let b = ReciprocalIdeal::new(&tm1() * &tp1()).unwrap();
        assert!(matches!(
            crt_lift(&[(zero.clone(), sq), (zero, b)]),
            Err(IdealError::Poly(PolyError::NotCoprime(_)))
        ));
    }
}
