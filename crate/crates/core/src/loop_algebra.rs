//! `sl₂ ⊗ k[t,t⁻¹]` in the Chevalley basis `e, f, h`, its involutions and
//! the fixed subalgebra `ℒ^ω ≅ 𝒪`.
//!
//! ```text
//! [e,f] = h    [h,e] = 2e    [h,f] = -2f
//! ```

use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::display::write_ring_combination;
use crate::lie::LieAlgebra;
use crate::onsager::OnsagerElement;
use crate::poly::{antisym_decompose, Laurent};
use crate::scalar::{Field, GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("element is not fixed by the Chevalley involution: {0}")]
    NotFixed(String),
}

/// `p(t)e + q(t)f + r(t)h`.
#[derive(Clone, PartialEq, Eq)]
pub struct LoopElement<F: Field = Rational> {
    pub p: Laurent<F>,
    pub q: Laurent<F>,
    pub r: Laurent<F>,
}

impl<F: Field> LoopElement<F> {
    pub fn new(p: Laurent<F>, q: Laurent<F>, r: Laurent<F>) -> Self {
        LoopElement { p, q, r }
    }

    pub fn zero() -> Self {
        Self::new(Laurent::zero(), Laurent::zero(), Laurent::zero())
    }

    /// `t^k ⊗ e`.
    pub fn e(k: i64) -> Self {
        Self::new(Laurent::t_pow(k), Laurent::zero(), Laurent::zero())
    }

    /// `t^k ⊗ f`.
    pub fn f(k: i64) -> Self {
        Self::new(Laurent::zero(), Laurent::t_pow(k), Laurent::zero())
    }

    /// `t^k ⊗ h`.
    pub fn h(k: i64) -> Self {
        Self::new(Laurent::zero(), Laurent::zero(), Laurent::t_pow(k))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero() && self.r.is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.p.scale(c), self.q.scale(c), self.r.scale(c))
    }

    /// Multiplication by a ring element.
    pub fn mul_poly(&self, s: &Laurent<F>) -> Self {
        Self::new(s * &self.p, s * &self.q, s * &self.r)
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let two = F::from_i64(2);
        let (p1, q1, r1) = (&self.p, &self.q, &self.r);
        let (p2, q2, r2) = (&other.p, &other.q, &other.r);
        LoopElement {
            p: (&(r1 * p2) - &(p1 * r2)).scale(&two),
            q: (&(q1 * r2) - &(r1 * q2)).scale(&two),
            r: &(p1 * q2) - &(q1 * p2),
        }
    }

    /// ω: `ē = f, f̄ = e, h̄ = -h` combined with `t ↦ t⁻¹`.
    pub fn chevalley(&self) -> Self {
        Self::new(
            self.q.substitute_inverse(),
            self.p.substitute_inverse(),
            -self.r.substitute_inverse(),
        )
    }

    /// σ: `ẽ = -f, f̃ = -e, h̃ = -h` combined with `t ↦ t⁻¹`.
    pub fn sigma(&self) -> Self {
        Self::new(
            -self.q.substitute_inverse(),
            -self.p.substitute_inverse(),
            -self.r.substitute_inverse(),
        )
    }

    /// Whether ω fixes the element: `q(t) = p(t⁻¹)` and `r(t) + r(t⁻¹) = 0`.
    pub fn is_fixed(&self) -> bool {
        self.q == self.p.substitute_inverse() && (&self.r + &self.r.substitute_inverse()).is_zero()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LoopElement<G> {
        LoopElement::new(self.p.map(&f), self.q.map(&f), self.r.map(&f))
    }
}

impl LoopElement<Rational> {
    pub fn to_gaussian(&self) -> LoopElement<GaussianRational> {
        self.map(|c| GaussianRational::from(c.clone()))
    }
}

impl LoopElement<GaussianRational> {
    /// τ: conjugation by `A = diag(i, 1)` composed with `t ↦ t⁻¹`,
    /// so `e ↦ i·e`, `f ↦ -i·f`, `h ↦ h`.
    pub fn tau(&self) -> Self {
        let i = GaussianRational::i();
        Self::new(
            self.p.substitute_inverse().scale(&i),
            self.q.substitute_inverse().scale(&-i),
            self.r.substitute_inverse(),
        )
    }

    /// Conjugation by `A⁻¹ = diag(-i, 1)` composed with `t ↦ t⁻¹`.
    pub fn tau_inverse(&self) -> Self {
        let i = GaussianRational::i();
        Self::new(
            self.p.substitute_inverse().scale(&-i.clone()),
            self.q.substitute_inverse().scale(&i),
            self.r.substitute_inverse(),
        )
    }
}

impl<F: Field> LieAlgebra for LoopElement<F> {
    fn zero() -> Self {
        LoopElement::zero()
    }
    fn is_zero(&self) -> bool {
        LoopElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: &Rational) -> Self {
        LoopElement::scale(self, &F::from_rational(c.clone()))
    }
    fn bracket(&self, other: &Self) -> Self {
        LoopElement::bracket(self, other)
    }
}

impl<'a, F: Field> Add<&'a LoopElement<F>> for &'a LoopElement<F> {
    type Output = LoopElement<F>;
    fn add(self, rhs: &'a LoopElement<F>) -> LoopElement<F> {
        LoopElement::new(&self.p + &rhs.p, &self.q + &rhs.q, &self.r + &rhs.r)
    }
}

impl<'a, F: Field> Sub<&'a LoopElement<F>> for &'a LoopElement<F> {
    type Output = LoopElement<F>;
    fn sub(self, rhs: &'a LoopElement<F>) -> LoopElement<F> {
        LoopElement::new(&self.p - &rhs.p, &self.q - &rhs.q, &self.r - &rhs.r)
    }
}

impl<F: Field> Add for LoopElement<F> {
    type Output = LoopElement<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Field> Sub for LoopElement<F> {
    type Output = LoopElement<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Field> Neg for LoopElement<F> {
    type Output = LoopElement<F>;
    fn neg(self) -> Self {
        LoopElement::new(-self.p, -self.q, -self.r)
    }
}

impl<F: Field> fmt::Display for LoopElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ring_combination(f, &[(&self.p, "e"), (&self.q, "f"), (&self.r, "h")])
    }
}

impl<F: Field> fmt::Debug for LoopElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopElement({self})")
    }
}

/// An element of `ℒ^ω`, validated at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FixedLoopElement(LoopElement<Rational>);

impl FixedLoopElement {
    pub fn new(x: LoopElement<Rational>) -> Result<Self, LoopError> {
        if x.is_fixed() {
            Ok(FixedLoopElement(x))
        } else {
            Err(LoopError::NotFixed(x.to_string()))
        }
    }

    pub fn zero() -> Self {
        FixedLoopElement(LoopElement::zero())
    }

    pub fn as_loop(&self) -> &LoopElement<Rational> {
        &self.0
    }

    pub fn into_loop(self) -> LoopElement<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn bracket(&self, other: &Self) -> Self {
        FixedLoopElement::new(self.0.bracket(&other.0)).expect("ℒ^ω is a subalgebra")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FixedLoopElement(self.0.scale(c))
    }
}

impl LieAlgebra for FixedLoopElement {
    fn zero() -> Self {
        FixedLoopElement::zero()
    }
    fn is_zero(&self) -> bool {
        FixedLoopElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        FixedLoopElement(&self.0 + &other.0)
    }
    fn scale(&self, c: &Rational) -> Self {
        FixedLoopElement::scale(self, c)
    }
    fn bracket(&self, other: &Self) -> Self {
        FixedLoopElement::bracket(self, other)
    }
}

impl fmt::Display for FixedLoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for FixedLoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FixedLoopElement({})", self.0)
    }
}

/// `b_m = t^m e + t^{-m} f`.
pub fn basis_b(m: i64) -> FixedLoopElement {
    FixedLoopElement(LoopElement::new(Laurent::t_pow(m), Laurent::t_pow(-m), Laurent::zero()))
}

/// `c_l = (t^l - t^{-l}) h`; `c_0 = 0` and `c_{-l} = -c_l`.
pub fn basis_c(l: i64) -> FixedLoopElement {
    let r = &Laurent::t_pow(l) - &Laurent::t_pow(-l);
    FixedLoopElement(LoopElement::new(Laurent::zero(), Laurent::zero(), r))
}

/// γ: `A_m ↦ b_m`, `G_l ↦ ½c_l`.
pub fn to_loop(x: &OnsagerElement) -> FixedLoopElement {
    let half = Rational::new(1, 2).unwrap();
    let mut p = Laurent::zero();
    let mut r = Laurent::zero();
    for (m, c) in x.a_terms() {
        p.add_term(m, c.clone());
    }
    for (l, c) in x.g_terms() {
        let c = c.clone() * half.clone();
        r.add_term(l, c.clone());
        r.add_term(-l, -c);
    }
    let q = p.substitute_inverse();
    FixedLoopElement(LoopElement::new(p, q, r))
}

/// γ⁻¹. A fixed element is `Σ p_m b_m + Σ_{l>0} r_l c_l`, read off from
/// `p` and the positive part of `r`.
pub fn from_loop(x: &FixedLoopElement) -> OnsagerElement {
    let two = Rational::from(2);
    let mut out = OnsagerElement::zero();
    for (m, c) in x.0.p.terms() {
        out.add_a(m, c.clone());
    }
    let r_plus = antisym_decompose(&x.0.r).expect("fixed elements have antisymmetric h-part");
    for (l, c) in r_plus.as_laurent().terms() {
        out.add_g(l, c.clone() * two.clone());
    }
    out
}

/// γ⁻¹ for an unchecked loop element.
pub fn try_from_loop(x: &LoopElement<Rational>) -> Result<OnsagerElement, LoopError> {
    Ok(from_loop(&FixedLoopElement::new(x.clone())?))
}
