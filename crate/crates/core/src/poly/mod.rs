//! Polynomial rings: `k[t]`, `k[t,t⁻¹]` and the three-point ring
//! `k[t,t⁻¹,(1-t)⁻¹]`, plus the number-theoretic helpers the ideal
//! machinery relies on.

mod laurent;
mod polynomial;
mod three_point;

pub use laurent::Laurent;
pub use polynomial::{crt_solve, is_reciprocal, multiplicity_at, poly_gcd, poly_lcm, Polynomial, Sign};
pub use three_point::ThreePointFraction;

use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("negative exponent {0} in a polynomial")]
    NegativeExponent(i64),
    #[error("moduli are not coprime: common factor {0}")]
    NotCoprime(String),
    #[error("{0} residues but {1} moduli")]
    LengthMismatch(usize, usize),
    #[error("not antisymmetric: coefficients at t^{0} and t^{1} do not cancel")]
    NotAntisymmetric(i64, i64),
}

/// `p(t) ↦ p(t⁻¹)`.
pub fn substitute_inverse<F: Field>(p: &Laurent<F>) -> Laurent<F> {
    p.substitute_inverse()
}

/// Writes an antisymmetric `r` (with `r(t) + r(t⁻¹) = 0`) as
/// `r₊(t) - r₊(t⁻¹)` with `r₊ ∈ t·k[t]`, returning `r₊`.
pub fn antisym_decompose<F: Field>(r: &Laurent<F>) -> Result<Polynomial<F>, PolyError> {
    for (e, c) in r.terms() {
        if e == 0 || (c.clone() + r.coeff(-e)) != F::zero() {
            return Err(PolyError::NotAntisymmetric(e, -e));
        }
    }
    let positive = Laurent::from_terms(r.terms().filter(|(e, _)| *e > 0).map(|(e, c)| (e, c.clone())));
    Polynomial::from_laurent(positive)
}

/// Whether `x ∈ P(t)·k[t,t⁻¹]`.
///
/// Powers of `t` are units in the Laurent ring, so any `t`-power factor of
/// `P` is dropped and `x` is shifted into `k[t]` before reducing.
pub fn laurent_divisible<F: Field>(x: &Laurent<F>, p: &Polynomial<F>) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if x.is_zero() {
        return Ok(true);
    }
    let (p_core, _) = p.strip_t_power();
    let shift = -x.min_exp().unwrap();
    let x_poly = Polynomial::from_laurent(x.shift(shift))?;
    Ok(x_poly.rem(&p_core)?.is_zero())
}

/// Exact quotient `x / P` in `k[t,t⁻¹]`, when `P` divides `x` there.
pub fn laurent_exact_div<F: Field>(
    x: &Laurent<F>,
    p: &Polynomial<F>,
) -> Result<Option<Laurent<F>>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if x.is_zero() {
        return Ok(Some(Laurent::zero()));
    }
    let (p_core, k) = p.strip_t_power();
    let shift = -x.min_exp().unwrap();
    let x_poly = Polynomial::from_laurent(x.shift(shift))?;
    Ok(x_poly
        .exact_div(&p_core)?
        .map(|q| q.into_laurent().shift(-shift - k as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type L = Laurent<Rational>;
    type P = Polynomial<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn lp(terms: &[(i64, i64)]) -> L {
        L::from_terms(terms.iter().map(|&(e, c)| (e, q(c))))
    }

    fn pp(coeffs: &[i64]) -> P {
        P::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn substitute_inverse_examples() {
        assert_eq!(substitute_inverse(&lp(&[(1, 1), (-1, -1)])), lp(&[(-1, 1), (1, -1)]));
        assert_eq!(substitute_inverse(&L::zero()), L::zero());
        assert_eq!(substitute_inverse(&lp(&[(3, 2), (0, 5)])), lp(&[(-3, 2), (0, 5)]));
    }

    #[test]
    fn antisym_examples() {
        assert_eq!(antisym_decompose(&lp(&[(1, 1), (-1, -1)])).unwrap(), pp(&[0, 1]));
        assert_eq!(antisym_decompose(&L::zero()).unwrap(), P::zero());
        let r = lp(&[(3, 2), (1, -1), (-1, 1), (-3, -2)]);
        let plus = antisym_decompose(&r).unwrap();
        assert_eq!(plus, pp(&[0, -1, 0, 2]));
        // oracle: r₊(t) - r₊(t⁻¹) reproduces the input
        let back = plus.as_laurent() - &plus.as_laurent().substitute_inverse();
        assert_eq!(back, r);
    }

    #[test]
    fn antisym_rejects_symmetric_input() {
        let err = antisym_decompose(&lp(&[(1, 1), (-1, 1)])).unwrap_err();
        assert!(matches!(err, PolyError::NotAntisymmetric(_, _)));
        assert!(antisym_decompose(&lp(&[(0, 3)])).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(is_reciprocal(&pp(&[1, 1])).unwrap(), Some(Sign::Plus));
        assert_eq!(is_reciprocal(&pp(&[-1, 1])).unwrap(), Some(Sign::Minus));
        assert_eq!(is_reciprocal(&pp(&[1, 3, 1])).unwrap(), Some(Sign::Plus));
        assert_eq!(is_reciprocal(&pp(&[-1, 0, 1])).unwrap(), Some(Sign::Minus));
        assert_eq!(is_reciprocal(&pp(&[0, 1, 1])).unwrap(), None);
        assert_eq!(is_reciprocal(&pp(&[1, 2])), Err(PolyError::NotMonic));
        assert_eq!(is_reciprocal(&P::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn multiplicity_examples() {
        let tm1 = pp(&[-1, 1]);
        let tp1 = pp(&[1, 1]);
        let p = &(&tm1 * &tm1) * &tp1;
        assert_eq!(multiplicity_at(&p, &q(1)).unwrap(), 2);
        assert_eq!(multiplicity_at(&pp(&[1, 3, 1]), &q(1)).unwrap(), 0);
        let p = &tm1.pow(3) * &tp1.pow(2);
        assert_eq!(multiplicity_at(&p, &q(-1)).unwrap(), 2);
        assert_eq!(multiplicity_at(&P::zero(), &q(1)), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn gcd_lcm_examples() {
        let tm1 = pp(&[-1, 1]);
        let tp1 = pp(&[1, 1]);
        assert_eq!(poly_gcd(&tm1, &tp1).unwrap(), P::one());
        assert_eq!(poly_lcm(&tm1, &tp1).unwrap(), pp(&[-1, 0, 1]));
        let a = tm1.pow(2);
        let b = &tm1 * &tp1;
        assert_eq!(poly_gcd(&a, &b).unwrap(), tm1);
        assert_eq!(poly_lcm(&a, &b).unwrap(), &tm1.pow(2) * &tp1);
        let p = pp(&[2, 6, 2]);
        assert_eq!(poly_gcd(&p, &p).unwrap(), pp(&[1, 3, 1]));
        assert_eq!(poly_gcd(&P::zero(), &P::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn crt_examples() {
        let tm1 = pp(&[-1, 1]);
        let tp1 = pp(&[1, 1]);
        // (t+1)/2: equals 1 at t = 1 and 0 at t = -1
        let x = crt_solve(&[P::one(), P::zero()], &[tm1.clone(), tp1.clone()]).unwrap();
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(x, P::from_coeffs(vec![half.clone(), half]));
        let r = pp(&[3, 0, 1]);
        assert_eq!(crt_solve(&[r.clone()], &[tm1.clone()]).unwrap(), r.rem(&tm1).unwrap());
        assert_eq!(
            crt_solve(&[P::zero(), P::zero()], &[tm1.clone(), tp1]).unwrap(),
            P::zero()
        );
        let err = crt_solve(&[P::one(), P::zero()], &[tm1.clone(), tm1.pow(2)]).unwrap_err();
        assert_eq!(err, PolyError::NotCoprime("t - 1".into()));
    }

    #[test]
    fn laurent_divisibility_examples() {
        let tm1 = pp(&[-1, 1]);
        assert!(laurent_divisible(&lp(&[(1, 1), (0, -2), (-1, 1)]), &tm1).unwrap());
        assert!(!laurent_divisible(&lp(&[(1, 1)]), &tm1).unwrap());
        assert!(laurent_divisible(&L::zero(), &tm1).unwrap());
        // t-power factors of P are units
        assert!(laurent_divisible(&lp(&[(-3, 1)]), &pp(&[0, 0, 1])).unwrap());
        assert_eq!(laurent_divisible(&L::one(), &P::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn laurent_exact_division() {
        let tm1 = pp(&[-1, 1]);
        let x = lp(&[(1, 1), (0, -2), (-1, 1)]);
        let quo = laurent_exact_div(&x, &tm1).unwrap().unwrap();
        assert_eq!(&quo * tm1.as_laurent(), x);
        assert_eq!(laurent_exact_div(&lp(&[(1, 1)]), &tm1).unwrap(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(lp(&[(1, 1), (-1, -1)]).to_string(), "t - t^-1");
        assert_eq!(lp(&[(3, 2), (0, 5)]).to_string(), "2*t^3 + 5");
        assert_eq!(lp(&[(2, -1), (0, 1)]).to_string(), "-t^2 + 1");
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(L::monomial(-half, 1).to_string(), "-1/2*t");
        assert_eq!(L::zero().to_string(), "0");
    }
}
