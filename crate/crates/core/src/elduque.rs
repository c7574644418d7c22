//! Ideals of the Onsager algebra in the v-realization.
//!
//! Every ideal `I` with `J_I = q(t)k[t] ≠ 0` sits between `𝒪Jt(t-1)` and
//! `𝒪J`, so it is determined by its image `S` in the six-dimensional space
//! `𝒪J/𝒪Jt(t-1)` with basis
//!
//! ```text
//! w_0 t, w_1 t, w_2 t, w_0 (t-1), w_1 (t-1), w_2 (t-1)        (w_i = v_i q)
//! ```
//!
//! Coordinates come from `s = s₂·t(t-1) + αt + β(t-1)` with `α = s(1)`,
//! `β = -s(0)`.

use std::fmt;

use thiserror::Error;

use crate::linalg::{nullspace, unit, Subspace};
use crate::poly::{poly_gcd, PolyError, Polynomial};
use crate::scalar::{Field, Rational};
use crate::tetrahedron::{v_bracket, VElement};

type P = Polynomial<Rational>;

pub const RESIDUAL_DIM: usize = 6;

/// Names of the residual basis vectors, in coordinate order.
pub const RESIDUAL_BASIS: [&str; RESIDUAL_DIM] =
    ["w_0*t", "w_1*t", "w_2*t", "w_0*(t-1)", "w_1*(t-1)", "w_2*(t-1)"];

pub type ResidualVector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElduqueError {
    #[error("generator polynomial must be monic and nonzero, got {0}")]
    BadGenerator(String),
    #[error("flags need ε + δ ≠ 0 and ε' + δ' ≠ 0")]
    BadFlags,
    #[error("η must be nonzero")]
    ZeroEta,
    #[error("all generators are zero")]
    AllZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `(ε, δ, γ)` on the `t` side and `(ε', δ', γ')` on the `(t-1)` side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flags {
    pub eps: bool,
    pub delta: bool,
    pub gamma: bool,
    pub eps2: bool,
    pub delta2: bool,
    pub gamma2: bool,
}

impl Flags {
    pub fn new(bits: [u8; 6]) -> Result<Self, ElduqueError> {
        let b = bits.map(|x| x != 0);
        let f = Flags { eps: b[0], delta: b[1], gamma: b[2], eps2: b[3], delta2: b[4], gamma2: b[5] };
        if !(f.eps || f.delta) || !(f.eps2 || f.delta2) {
            return Err(ElduqueError::BadFlags);
        }
        Ok(f)
    }

    pub fn bits(&self) -> [u8; 6] {
        [self.eps, self.delta, self.gamma, self.eps2, self.delta2, self.gamma2].map(u8::from)
    }

    /// `γ` only matters through `εδγ` (and likewise on the other side), so
    /// it is cleared when `εδ = 0`.
    pub fn canonical(&self) -> Self {
        Flags {
            gamma: self.gamma && self.eps && self.delta,
            gamma2: self.gamma2 && self.eps2 && self.delta2,
            ..*self
        }
    }
}

impl fmt::Display for Flags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.bits();
        write!(f, "{},{},{},{},{},{}", b[0], b[1], b[2], b[3], b[4], b[5])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecKind {
    Flags(Flags),
    Eta(Rational),
}

/// `I = 𝒪Jt(t-1) ⊕ S` with `J = q(t)k[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub q: P,
    pub kind: SpecKind,
}

fn check_q(q: &P) -> Result<(), ElduqueError> {
    if q.is_monic() {
        Ok(())
    } else {
        Err(ElduqueError::BadGenerator(q.to_string()))
    }
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn vec6(xs: [i64; 6]) -> ResidualVector {
    xs.iter().map(|&x| r(x)).collect()
}

impl IdealSpec {
    pub fn flags(q: P, flags: Flags) -> Result<Self, ElduqueError> {
        check_q(&q)?;
        Ok(IdealSpec { q, kind: SpecKind::Flags(flags.canonical()) })
    }

    pub fn eta(q: P, eta: Rational) -> Result<Self, ElduqueError> {
        check_q(&q)?;
        if eta.is_zero() {
            return Err(ElduqueError::ZeroEta);
        }
        Ok(IdealSpec { q, kind: SpecKind::Eta(eta) })
    }

    /// The subspace `S` of the residual space.
    pub fn subspace(&self) -> Subspace<Rational> {
        match &self.kind {
            SpecKind::Flags(f) => {
                let mut lines = Vec::new();
                if f.eps {
                    lines.push(vec6([1, 1, 0, 0, 0, 0]));
                }
                if f.delta {
                    lines.push(vec6([1, -1, 0, 0, 0, 0]));
                }
                if f.eps && f.delta && f.gamma {
                    lines.push(vec6([0, 0, 1, 0, 0, 0]));
                }
                if f.eps2 {
                    lines.push(vec6([0, 0, 0, 1, 0, 1]));
                }
                if f.delta2 {
                    lines.push(vec6([0, 0, 0, 1, 0, -1]));
                }
                if f.eps2 && f.delta2 && f.gamma2 {
                    lines.push(vec6([0, 0, 0, 0, 1, 0]));
                }
                Subspace::span(RESIDUAL_DIM, lines)
            }
            SpecKind::Eta(eta) => {
                let mut mixed = vec6([0, 0, 1, 0, 0, 0]);
                mixed[4] = eta.clone();
                Subspace::span(
                    RESIDUAL_DIM,
                    [
                        vec6([1, 0, 0, 0, 0, 0]),
                        vec6([0, 1, 0, 0, 0, 0]),
                        vec6([0, 0, 0, 1, 0, 0]),
                        vec6([0, 0, 0, 0, 0, 1]),
                        mixed,
                    ],
                )
            }
        }
    }

    /// Which closed family this ideal belongs to, read off from its flags:
    /// `(i)` both sides `±`, `(ii)` `t` side full, `(iii)` `(t-1)` side full,
    /// `(iv)` both full. `None` for every other spec.
    pub fn closed_family(&self) -> Option<&'static str> {
        let SpecKind::Flags(f) = &self.kind else {
            return None;
        };
        let side = |e: bool, d: bool, g: bool| match (e, d, g) {
            (true, false, _) | (false, true, _) => Some(false),
            (true, true, true) => Some(true),
            _ => None,
        };
        match (side(f.eps, f.delta, f.gamma)?, side(f.eps2, f.delta2, f.gamma2)?) {
            (false, false) => Some("i"),
            (true, false) => Some("ii"),
            (false, true) => Some("iii"),
            (true, true) => Some("iv"),
        }
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SpecKind::Flags(fl) => write!(f, "q={} flags={}", self.q, fl),
            SpecKind::Eta(eta) => write!(f, "q={} eta={}", self.q, eta),
        }
    }
}

/// The one-parameter family `S_η`, `η ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaFamily {
    pub q: P,
}

impl EtaFamily {
    pub fn instance(&self, eta: Rational) -> Result<IdealSpec, ElduqueError> {
        IdealSpec::eta(self.q.clone(), eta)
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub flag_specs: Vec<IdealSpec>,
    pub eta_family: EtaFamily,
}

/// Canonical `(ε, δ, γ)` choices for one side.
const SIDES: [[u8; 3]; 4] = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 1, 1]];

/// All ideals with `J_I = q(t)k[t]`: the 16 canonical flag specs (four
/// choices per side) and the `η`-family.
pub fn enumerate_ideals(q: &P) -> Result<Enumeration, ElduqueError> {
    check_q(q)?;
    let mut flag_specs = Vec::new();
    for a in SIDES {
        for b in SIDES {
            let flags = Flags::new([a[0], a[1], a[2], b[0], b[1], b[2]])?;
            flag_specs.push(IdealSpec::flags(q.clone(), flags)?);
        }
    }
    Ok(Enumeration { flag_specs, eta_family: EtaFamily { q: q.clone() } })
}

/// Residual coordinates of `v`, or `None` when `q` does not divide every
/// component.
pub fn residual_of(v: &VElement, q: &P) -> Option<ResidualVector> {
    let zero = Rational::zero();
    let one = Rational::one();
    let mut alphas = Vec::with_capacity(3);
    let mut betas = Vec::with_capacity(3);
    for comp in v.components() {
        let s = comp.exact_div(q).ok()??;
        alphas.push(s.eval(&one));
        betas.push(-s.eval(&zero));
    }
    alphas.extend(betas);
    Some(alphas)
}

/// A representative of a residual vector: `Σ αᵢ w_i t + βᵢ w_i (t-1)`.
pub fn residual_representative(s: &[Rational], q: &P) -> VElement {
    let t = P::t();
    let tm1 = P::linear_root(Rational::one());
    let comp = |i: usize| &(&t.scale(&s[i]) + &tm1.scale(&s[i + 3])) * q;
    VElement::new(comp(0), comp(1), comp(2))
}

pub fn ideal_contains(spec: &IdealSpec, v: &VElement) -> bool {
    residual_of(v, &spec.q).is_some_and(|s| spec.subspace().contains(&s))
}

/// The six elements `v_i t`, `v_i (t-1)` spanning `𝒪` modulo `𝒪t(t-1)`.
fn complement_elements() -> Vec<VElement> {
    let tm1 = P::linear_root(Rational::one());
    let mut out: Vec<VElement> = (0..3).map(|i| VElement::basis(i, 1)).collect();
    out.extend((0..3).map(|i| VElement::basis(i, 0).mul_poly(&tm1)));
    out
}

/// Matrices of `s ↦ residual([s, y])` for the six complement elements `y`;
/// `actions[j][row][col]`.
fn action_matrices(q: &P) -> Vec<Vec<Vec<Rational>>> {
    let reps: Vec<VElement> =
        (0..RESIDUAL_DIM).map(|i| residual_representative(&unit(RESIDUAL_DIM, i), q)).collect();
    complement_elements()
        .iter()
        .map(|y| {
            let cols: Vec<ResidualVector> = reps
                .iter()
                .map(|x| residual_of(&v_bracket(x, y), q).expect("[𝒪J, 𝒪] ⊆ 𝒪J"))
                .collect();
            (0..RESIDUAL_DIM).map(|row| cols.iter().map(|c| c[row].clone()).collect()).collect()
        })
        .collect()
}

/// Linear functionals vanishing exactly on `s`.
fn annihilator(s: &Subspace<Rational>) -> Vec<Vec<Rational>> {
    nullspace(s.basis(), s.ambient_dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZClosure {
    pub subspace: Subspace<Rational>,
    /// Residual vectors completing a basis of `S` to one of `Z(I)`.
    pub added: Vec<ResidualVector>,
}

impl ZClosure {
    pub fn added_names(&self) -> Vec<String> {
        self.added.iter().map(|v| residual_name(v)).collect()
    }
}

/// Writes a residual vector in the `w_i` basis, e.g. `w_0*t - w_1*t`.
pub fn residual_name(v: &[Rational]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(RESIDUAL_BASIS) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        let sep = match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        out.push_str(sep);
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `Z(I) = {x : [x, 𝒪] ⊆ I}` as a residual subspace.
///
/// `Z(I) ⊆ Z(𝒪J) = 𝒪J` and `[𝒪J, 𝒪t(t-1)] ⊆ 𝒪Jt(t-1)`, so only the six
/// brackets with `v_i t`, `v_i (t-1)` matter and the answer is the common
/// preimage of `S` under those six linear maps.
pub fn z_closure(spec: &IdealSpec) -> ZClosure {
    let s = spec.subspace();
    let ann = annihilator(&s);
    let mut rows = Vec::new();
    for a in action_matrices(&spec.q) {
        for n in &ann {
            rows.push(
                (0..RESIDUAL_DIM)
                    .map(|col| {
                        (0..RESIDUAL_DIM).fold(Rational::zero(), |acc, row| {
                            acc + n[row].clone() * a[row][col].clone()
                        })
                    })
                    .collect(),
            );
        }
    }
    let z = if rows.is_empty() {
        Subspace::full(RESIDUAL_DIM)
    } else {
        Subspace::span(RESIDUAL_DIM, nullspace(&rows, RESIDUAL_DIM))
    };
    let mut span = s.clone();
    let mut added = Vec::new();
    for v in z.basis() {
        if !span.contains(v) {
            span = span.sum(&Subspace::span(RESIDUAL_DIM, [v.clone()]));
            added.push(v.clone());
        }
    }
    ZClosure { subspace: z, added }
}

/// Whether `Z(I) = I`.
pub fn is_closed(spec: &IdealSpec) -> bool {
    z_closure(spec).subspace == spec.subspace()
}

/// The descriptions `𝒪Jt ⊕ k(w_0 ± w_2)` (family ii) and
/// `𝒪J(t-1) ⊕ k(w_0 ± w_1)` (family iii), as residual subspaces.
pub fn alternate_form(spec: &IdealSpec) -> Option<Subspace<Rational>> {
    let SpecKind::Flags(f) = &spec.kind else {
        return None;
    };
    let sign = |plus: bool| if plus { r(1) } else { r(-1) };
    let w = |coeffs: [Rational; 3]| {
        let v = VElement::new(
            spec.q.scale(&coeffs[0]),
            spec.q.scale(&coeffs[1]),
            spec.q.scale(&coeffs[2]),
        );
        residual_of(&v, &spec.q).unwrap()
    };
    let t_mult = |i: usize| residual_of(&VElement::basis(i, 1).mul_poly(&spec.q), &spec.q).unwrap();
    let tm1 = P::linear_root(Rational::one());
    let tm1_mult = |i: usize| residual_of(&VElement::basis(i, 0).mul_poly(&(&tm1 * &spec.q)), &spec.q).unwrap();
    match spec.closed_family()? {
        "ii" => {
            let mut vs: Vec<ResidualVector> = (0..3).map(t_mult).collect();
            vs.push(w([r(1), r(0), sign(f.eps2)]));
            Some(Subspace::span(RESIDUAL_DIM, vs))
        }
        "iii" => {
            let mut vs: Vec<ResidualVector> = (0..3).map(tm1_mult).collect();
            vs.push(w([r(1), sign(f.eps), r(0)]));
            Some(Subspace::span(RESIDUAL_DIM, vs))
        }
        _ => None,
    }
}

/// Monic gcd of all components of all generators.
pub fn j_from_generators(gens: &[VElement]) -> Result<P, ElduqueError> {
    let mut g = P::zero();
    for v in gens {
        for comp in v.components() {
            if !comp.is_zero() {
                g = if g.is_zero() { comp.monic()? } else { poly_gcd(&g, comp)? };
            }
        }
    }
    if g.is_zero() {
        return Err(ElduqueError::AllZero);
    }
    Ok(g)
}

/// `B = 𝒪/𝒪t(t-1)` on the basis `v̄_0 t, v̄_1 t, v̄_2 t, v̄_0(t-1), v̄_1(t-1), v̄_2(t-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientB {
    /// `structure[i][j]` = coordinates of `[b_i, b_j]`.
    pub structure: Vec<Vec<Vec<Rational>>>,
}

pub fn quotient_b() -> QuotientB {
    let one = P::one();
    let basis: Vec<VElement> =
        (0..RESIDUAL_DIM).map(|i| residual_representative(&unit(RESIDUAL_DIM, i), &one)).collect();
    let structure = basis
        .iter()
        .map(|x| basis.iter().map(|y| residual_of(&v_bracket(x, y), &one).unwrap()).collect())
        .collect();
    QuotientB { structure }
}

impl QuotientB {
    pub fn dim(&self) -> usize {
        self.structure.len()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for (k, s) in self.structure[i][j].iter().enumerate() {
                    out[k] = out[k].clone() + c.clone() * s.clone();
                }
            }
        }
        out
    }

    /// `[U, V]`.
    pub fn bracket_spaces(&self, u: &Subspace<Rational>, v: &Subspace<Rational>) -> Subspace<Rational> {
        let mut vs = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                vs.push(self.bracket(a, b));
            }
        }
        Subspace::span(self.dim(), vs)
    }

    /// `B, [B,B], [[B,B],[B,B]], …` up to zero or stabilization.
    pub fn derived_series(&self) -> Vec<Subspace<Rational>> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_spaces(last, last);
            let done = next.dim() == 0 || next == *last;
            if next != *last {
                series.push(next);
            }
            if done {
                return series;
            }
        }
    }

    /// `B, [B,B], [B,[B,B]], …` up to zero or stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace<Rational>> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_spaces(&full, last);
            let done = next.dim() == 0 || next == *last;
            if next != *last {
                series.push(next);
            }
            if done {
                return series;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| r(x)).collect())
    }

    fn flags(bits: [u8; 6]) -> Flags {
        Flags::new(bits).unwrap()
    }

    #[test]
    fn residual_examples() {
        let q = poly(&[1, 3, 1]);
        let v = VElement::new(&q * &P::t(), P::zero(), P::zero());
        assert_eq!(residual_of(&v, &q).unwrap(), vec6([1, 0, 0, 0, 0, 0]));
        let v = VElement::new(&q * &poly(&[0, -1, 1]), P::zero(), P::zero());
        assert_eq!(residual_of(&v, &q).unwrap(), vec6([0; 6]));
        let v = VElement::new(&q * &poly(&[0, -1, 2]), P::zero(), P::zero());
        assert_eq!(residual_of(&v, &q).unwrap(), vec6([1, 0, 0, 0, 0, 0]));
        assert!(residual_of(&VElement::basis(0, 1), &q).is_none());
    }

    #[test]
    fn membership_examples() {
        let q = poly(&[1, 3, 1]);
        let full = IdealSpec::flags(q.clone(), flags([1, 1, 1, 1, 1, 1])).unwrap();
        let qt = &q * &P::t();
        assert!(ideal_contains(&full, &VElement::new(qt.clone(), qt.clone(), P::zero())));
        let eta = IdealSpec::eta(q.clone(), r(1)).unwrap();
        let v = VElement::new(P::zero(), &q * &poly(&[-1, 1]), qt.clone());
        assert!(ideal_contains(&eta, &v));
        let bulk = &q * &poly(&[0, -1, 1]);
        let spec = IdealSpec::flags(q.clone(), flags([1, 0, 0, 1, 0, 0])).unwrap();
        let v = VElement::new(&bulk * &poly(&[3, 1]), bulk.clone(), &bulk * &poly(&[0, 0, 5]));
        assert!(ideal_contains(&spec, &v));
    }

    #[test]
    fn flag_validation() {
        assert_eq!(Flags::new([0, 0, 1, 1, 0, 0]), Err(ElduqueError::BadFlags));
        assert_eq!(flags([1, 0, 1, 0, 1, 1]).canonical(), flags([1, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn enumeration_shape() {
        let e = enumerate_ideals(&P::one()).unwrap();
        assert_eq!(e.flag_specs.len(), 16);
        assert!(e.flag_specs.iter().any(|s| s.kind == SpecKind::Flags(flags([1, 1, 1, 1, 1, 1]))));
    }

    #[test]
    fn z_closure_examples() {
        let q = P::one();
        let eta = IdealSpec::eta(q.clone(), r(2)).unwrap();
        let z = z_closure(&eta);
        assert!(z.subspace.contains(&vec6([0, 0, 1, 0, 0, 0])));
        assert!(!is_closed(&eta));
        let full = IdealSpec::flags(q.clone(), flags([1, 1, 1, 1, 1, 1])).unwrap();
        assert!(z_closure(&full).added.is_empty());
        let case_i = IdealSpec::flags(q, flags([1, 0, 0, 1, 0, 0])).unwrap();
        assert!(is_closed(&case_i));
    }

    #[test]
    fn gamma_zero_cases_not_closed() {
        let q = P::one();
        assert!(!is_closed(&IdealSpec::flags(q.clone(), flags([1, 1, 0, 1, 0, 0])).unwrap()));
        assert!(!is_closed(&IdealSpec::flags(q, flags([1, 0, 0, 1, 1, 0])).unwrap()));
    }

    #[test]
    fn j_examples() {
        let tt1 = poly(&[0, -1, 1]);
        assert_eq!(j_from_generators(&[VElement::new(tt1.clone(), P::zero(), P::zero())]).unwrap(), tt1);
        assert_eq!(j_from_generators(&[VElement::basis(0, 0)]).unwrap(), P::one());
        let q = poly(&[1, 3, 1]);
        let gens = [VElement::new(q.clone(), P::zero(), P::zero()), VElement::new(P::zero(), q.clone(), P::zero())];
        assert_eq!(j_from_generators(&gens).unwrap(), q);
        assert_eq!(j_from_generators(&[VElement::zero()]), Err(ElduqueError::AllZero));
    }

    #[test]
    fn b_series() {
        let b = quotient_b();
        let d = b.derived_series();
        assert_eq!(d.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![6, 4, 0]);
        let expected = Subspace::span(6, [0, 1, 3, 5].map(|i| unit(6, i)));
        assert_eq!(d[1], expected);
        let l = b.lower_central_series();
        assert_eq!(l.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![6, 4]);
        assert_eq!(l[1], d[1]);
    }
}
