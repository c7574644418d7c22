//! The Onsager algebra on its basis `{A_m : m ∈ ℤ} ∪ {G_l : l ≥ 1}` with
//!
//! ```text
//! [A_l, A_m] = 2 G_{l-m}      [G_l, A_m] = A_{m+l} - A_{m-l}      [G_l, G_m] = 0
//! ```
//!
//! where `G_0 = 0` and `G_{-l} = -G_l`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::lie::{GeneratedBasis, LieAlgebra};
use crate::poly::Polynomial;
use crate::scalar::{Field, Rational};

/// A basis symbol `A_m` or `G_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisSymbol {
    A(i64),
    G(i64),
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::A(m) => write!(f, "A_{m}"),
            BasisSymbol::G(l) => write!(f, "G_{l}"),
        }
    }
}

/// A finite rational combination of basis symbols. `G` indices are kept
/// strictly positive so equal elements have equal representations.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OnsagerElement {
    a: BTreeMap<i64, Rational>,
    g: BTreeMap<i64, Rational>,
}

fn add_into(map: &mut BTreeMap<i64, Rational>, k: i64, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(k).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&k);
    }
}

impl OnsagerElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `A_m`.
    pub fn a(m: i64) -> Self {
        let mut x = Self::zero();
        x.add_a(m, Rational::one());
        x
    }

    /// `G_l`, normalized.
    pub fn g(l: i64) -> Self {
        let mut x = Self::zero();
        x.add_g(l, Rational::one());
        x
    }

    pub fn basis(s: BasisSymbol) -> Self {
        match s {
            BasisSymbol::A(m) => Self::a(m),
            BasisSymbol::G(l) => Self::g(l),
        }
    }

    pub fn add_a(&mut self, m: i64, c: Rational) {
        add_into(&mut self.a, m, c);
    }

    pub fn add_g(&mut self, l: i64, c: Rational) {
        match l {
            0 => {}
            l if l < 0 => add_into(&mut self.g, -l, -c),
            l => add_into(&mut self.g, l, c),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisSymbol, Rational)>>(terms: I) -> Self {
        let mut x = Self::zero();
        for (s, c) in terms {
            match s {
                BasisSymbol::A(m) => x.add_a(m, c),
                BasisSymbol::G(l) => x.add_g(l, c),
            }
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_empty() && self.g.is_empty()
    }

    pub fn coeff_a(&self, m: i64) -> Rational {
        self.a.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `G_l` for `l ≥ 1`.
    pub fn coeff_g(&self, l: i64) -> Rational {
        self.g.get(&l).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn a_terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.a.iter().map(|(k, c)| (*k, c))
    }

    pub fn g_terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.g.iter().map(|(k, c)| (*k, c))
    }

    /// Terms in print order: `A` by ascending index, then `G`.
    pub fn terms(&self) -> impl Iterator<Item = (BasisSymbol, &Rational)> {
        self.a_terms()
            .map(|(m, c)| (BasisSymbol::A(m), c))
            .chain(self.g_terms().map(|(l, c)| (BasisSymbol::G(l), c)))
    }

    /// Largest absolute index occurring.
    pub fn max_index(&self) -> i64 {
        self.a.keys().map(|m| m.abs()).chain(self.g.keys().copied()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(s, x)| (s, x.clone() * c.clone())))
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let two = Rational::from(2);
        let mut out = Self::zero();
        for (l, c1) in &self.a {
            for (m, c2) in &other.a {
                out.add_g(l - m, two.clone() * c1.clone() * c2.clone());
            }
            for (k, c2) in &other.g {
                // [A_l, G_k] = -(A_{l+k} - A_{l-k})
                let c = c1.clone() * c2.clone();
                out.add_a(l + k, -c.clone());
                out.add_a(l - k, c);
            }
        }
        for (k, c1) in &self.g {
            for (m, c2) in &other.a {
                let c = c1.clone() * c2.clone();
                out.add_a(m + k, c.clone());
                out.add_a(m - k, -c);
            }
        }
        out
    }
}

impl LieAlgebra for OnsagerElement {
    fn zero() -> Self {
        OnsagerElement::zero()
    }
    fn is_zero(&self) -> bool {
        OnsagerElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: &Rational) -> Self {
        OnsagerElement::scale(self, c)
    }
    fn bracket(&self, other: &Self) -> Self {
        OnsagerElement::bracket(self, other)
    }
}

impl<'a> Add<&'a OnsagerElement> for &'a OnsagerElement {
    type Output = OnsagerElement;
    fn add(self, rhs: &'a OnsagerElement) -> OnsagerElement {
        let mut out = self.clone();
        for (s, c) in rhs.terms() {
            match s {
                BasisSymbol::A(m) => out.add_a(m, c.clone()),
                BasisSymbol::G(l) => out.add_g(l, c.clone()),
            }
        }
        out
    }
}

impl<'a> Sub<&'a OnsagerElement> for &'a OnsagerElement {
    type Output = OnsagerElement;
    fn sub(self, rhs: &'a OnsagerElement) -> OnsagerElement {
        self + &(-rhs)
    }
}

impl Add for OnsagerElement {
    type Output = OnsagerElement;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for OnsagerElement {
    type Output = OnsagerElement;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Neg for &OnsagerElement {
    type Output = OnsagerElement;
    fn neg(self) -> OnsagerElement {
        self.scale(&-Rational::one())
    }
}

impl Neg for OnsagerElement {
    type Output = OnsagerElement;
    fn neg(self) -> OnsagerElement {
        -&self
    }
}

/// Writes a `coefficient * symbol` sum, e.g. `-A_-1 + A_1 + 1/2*G_3`.
pub(crate) fn write_linear_combination<'a, C, S, I>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
) -> fmt::Result
where
    C: Field + 'a,
    S: fmt::Display,
    I: IntoIterator<Item = (S, &'a C)>,
{
    let mut first = true;
    for (sym, c) in terms {
        let negative = c.prints_negative();
        let mag = if negative { -c.clone() } else { c.clone() };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        if mag.is_one() {
            write!(f, "{sym}")?;
        } else {
            write!(f, "{mag}*{sym}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for OnsagerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms())
    }
}

impl fmt::Debug for OnsagerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OnsagerElement({self})")
    }
}

/// The pair `(g_l, h_l)` with `A_{m+l} = g_l(ad G_1)(A_m) + h_l(ad G_1)(A_{m+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftPolynomialPair {
    pub g: Polynomial<Rational>,
    pub h: Polynomial<Rational>,
    pub level: u32,
}

/// `g_0 = 1, h_0 = 0, g_1 = 0, h_1 = 1`, and `p_l = x·p_{l-1} + p_{l-2}`.
pub fn shift_polynomials(l: u32) -> ShiftPolynomialPair {
    let x = Polynomial::t();
    let (mut g_prev, mut g) = (Polynomial::one(), Polynomial::zero());
    let (mut h_prev, mut h) = (Polynomial::zero(), Polynomial::one());
    if l == 0 {
        return ShiftPolynomialPair { g: g_prev, h: h_prev, level: 0 };
    }
    for _ in 1..l {
        let g_next = &(&x * &g) + &g_prev;
        let h_next = &(&x * &h) + &h_prev;
        g_prev = std::mem::replace(&mut g, g_next);
        h_prev = std::mem::replace(&mut h, h_next);
    }
    ShiftPolynomialPair { g, h, level: l }
}

/// `p(ad_x)(y) = Σ p_k ad_x^k (y)`.
pub fn apply_polynomial_ad<L: LieAlgebra>(p: &Polynomial<Rational>, x: &L, y: &L) -> L {
    let mut acc = L::zero();
    let mut power = y.clone();
    for c in p.coeffs() {
        if !c.is_zero() {
            acc = acc.add(&power.scale(&c));
        }
        power = x.bracket(&power);
    }
    acc
}

/// Right-hand side of the shift identity for `A_{m+l}`.
pub fn apply_shift(m: i64, l: u32) -> OnsagerElement {
    let pair = shift_polynomials(l);
    let g1 = OnsagerElement::g(1);
    &apply_polynomial_ad(&pair.g, &g1, &OnsagerElement::a(m))
        + &apply_polynomial_ad(&pair.h, &g1, &OnsagerElement::a(m + 1))
}

/// Regenerates `G_n`, `A_n`, `A_{-n}` for `1 ≤ n ≤ max_n` as iterated
/// brackets of `A_0` and `A_1`.
pub fn reconstruct_basis(max_n: usize) -> BTreeMap<BasisSymbol, OnsagerElement> {
    let basis = GeneratedBasis::by_induction(&OnsagerElement::a(0), &OnsagerElement::a(1), max_n);
    let n = max_n.max(1) as i64;
    let mut out = BTreeMap::new();
    for m in -n..=n {
        out.insert(BasisSymbol::A(m), basis.a(m).unwrap().clone());
    }
    for l in 1..=n {
        out.insert(BasisSymbol::G(l), basis.g(l).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{check_dolan_grady, jacobi_defect};

    fn a(m: i64) -> OnsagerElement {
        OnsagerElement::a(m)
    }
    fn g(l: i64) -> OnsagerElement {
        OnsagerElement::g(l)
    }

    #[test]
    fn structure_constants() {
        assert_eq!(a(1).bracket(&a(0)), g(1).scale(&Rational::from(2)));
        assert_eq!(g(1).bracket(&a(0)), &a(1) - &a(-1));
        assert!(g(2).bracket(&g(5)).is_zero());
        assert!(a(3).bracket(&a(3)).is_zero());
    }

    #[test]
    fn g_normalization() {
        assert!(g(0).is_zero());
        assert_eq!(g(-3), -g(3));
    }

    #[test]
    fn display() {
        assert_eq!(a(1).bracket(&a(0)).to_string(), "2*G_1");
        assert_eq!(g(1).bracket(&a(0)).to_string(), "-A_-1 + A_1");
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(g(3).scale(&half).to_string(), "1/2*G_3");
        assert_eq!(OnsagerElement::zero().to_string(), "0");
    }

    #[test]
    fn jacobi_examples() {
        assert!(jacobi_defect(&a(2), &a(1), &a(0)).is_zero());
        assert!(jacobi_defect(&a(5), &g(2), &g(3)).is_zero());
    }

    #[test]
    fn dolan_grady_examples() {
        assert!(check_dolan_grady(&a(0), &a(1)).holds());
        assert!(check_dolan_grady(&a(0), &OnsagerElement::zero()).holds());
        // by hand: [A_0,A_5] = -2G_5, then 2(A_5 - A_-5), then -8G_5 = 4[A_0,A_5]
        let lhs = a(0).ad_pow(3, &a(5));
        assert_eq!(lhs, g(5).scale(&Rational::from(-8)));
        let r = check_dolan_grady(&a(0), &a(5));
        assert!(r.dg1_holds && r.dg2_holds);
        // ad(G_1)^3 A_0 = A_3 - 3A_1 + 3A_-1 - A_-3, while 4[G_1,A_0] = 4A_1 - 4A_-1
        let r = check_dolan_grady(&g(1), &a(0));
        assert!(!r.dg1_holds);
        let expected = OnsagerElement::from_terms([
            (BasisSymbol::A(3), Rational::from(1)),
            (BasisSymbol::A(1), Rational::from(-7)),
            (BasisSymbol::A(-1), Rational::from(7)),
            (BasisSymbol::A(-3), Rational::from(-1)),
        ]);
        assert_eq!(r.dg1_defect, expected);
    }

    #[test]
    fn shift_polynomial_values() {
        let x = Polynomial::<Rational>::t();
        assert_eq!(shift_polynomials(0).g, Polynomial::one());
        assert_eq!(shift_polynomials(0).h, Polynomial::zero());
        assert_eq!(shift_polynomials(2).g, Polynomial::one());
        assert_eq!(shift_polynomials(2).h, x);
        assert_eq!(shift_polynomials(3).g, x);
        assert_eq!(shift_polynomials(3).h, &x.pow(2) + &Polynomial::one());
    }

    #[test]
    fn shift_identity_level_three() {
        for m in -3..=3 {
            // A_{m+3} = ad(A_m) + (ad² + 1)(A_{m+1}) computed by hand
            let g1 = g(1);
            let manual = g1.bracket(&a(m)) + g1.ad_pow(2, &a(m + 1)) + a(m + 1);
            assert_eq!(manual, a(m + 3));
            assert_eq!(apply_shift(m, 3), a(m + 3));
        }
    }

    #[test]
    fn reconstruction_small() {
        let b = reconstruct_basis(2);
        assert_eq!(b[&BasisSymbol::G(1)], g(1));
        assert_eq!(b[&BasisSymbol::A(-1)], a(-1));
        assert_eq!(a(1).bracket(&a(-1)), g(2).scale(&Rational::from(2)));
        assert_eq!(b[&BasisSymbol::G(2)], g(2));
    }
}
