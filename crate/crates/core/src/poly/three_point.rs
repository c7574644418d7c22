use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Laurent, Polynomial};
use crate::scalar::{Field, Rational};

/// An element `num / (t^a (1-t)^b)` of `k[t, t⁻¹, (1-t)⁻¹]`.
///
/// Canonical form: `t ∤ num` unless `a = 0`, and `(1-t) ∤ num` unless
/// `b = 0`. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreePointFraction {
    num: Polynomial<Rational>,
    a: u32,
    b: u32,
}

fn one_minus_t() -> Polynomial<Rational> {
    Polynomial::from_coeffs(vec![Rational::one(), -Rational::one()])
}

impl ThreePointFraction {
    pub fn new(num: Polynomial<Rational>, a: u32, b: u32) -> Self {
        let mut f = ThreePointFraction { num, a, b };
        f.canonicalize();
        f
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial<Rational>) -> Self {
        ThreePointFraction { num: p, a: 0, b: 0 }
    }

    pub fn from_laurent(p: &Laurent<Rational>) -> Self {
        let a = p.min_exp().map_or(0, |e| (-e).max(0)) as u32;
        let num = Polynomial::from_laurent(p.shift(a as i64)).expect("shifted into k[t]");
        Self::new(num, a, 0)
    }

    /// `t`.
    pub fn t() -> Self {
        Self::from_poly(Polynomial::t())
    }

    /// `t' = 1 - t⁻¹`.
    pub fn t_prime() -> Self {
        Self::new(Polynomial::from_coeffs(vec![-Rational::one(), Rational::one()]), 1, 0)
    }

    /// `t'' = (1-t)⁻¹`.
    pub fn t_double_prime() -> Self {
        Self::new(Polynomial::one(), 0, 1)
    }

    pub fn numerator(&self) -> &Polynomial<Rational> {
        &self.num
    }

    /// Exponent of `t` in the denominator.
    pub fn t_power(&self) -> u32 {
        self.a
    }

    /// Exponent of `(1-t)` in the denominator.
    pub fn one_minus_t_power(&self) -> u32 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.a = 0;
            self.b = 0;
            return;
        }
        while self.a > 0 && self.num.coeff(0).is_zero() {
            self.num = Polynomial::from_laurent(self.num.as_laurent().shift(-1)).unwrap();
            self.a -= 1;
        }
        let omt = one_minus_t();
        while self.b > 0 {
            match self.num.exact_div(&omt).unwrap() {
                Some(q) => {
                    self.num = q;
                    self.b -= 1;
                }
                None => break,
            }
        }
    }

    /// The value as an element of `k[t]`, if it lies there.
    pub fn to_polynomial(&self) -> Option<Polynomial<Rational>> {
        (self.a == 0 && self.b == 0).then(|| self.num.clone())
    }

    /// The value as an element of `k[t, t⁻¹]`, if it lies there.
    pub fn to_laurent(&self) -> Option<Laurent<Rational>> {
        (self.b == 0).then(|| self.num.as_laurent().shift(-(self.a as i64)))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.to_polynomial().filter(|p| p.is_constant()).map(|p| p.coeff(0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.a, self.b)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit `c·t^i·(1-t)^j`; `None` for non-units.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (rest, i) = self.num.strip_t_power();
        let mut rest = rest;
        let mut j = 0u32;
        let omt = one_minus_t();
        while let Some(q) = rest.exact_div(&omt).unwrap() {
            rest = q;
            j += 1;
        }
        if !rest.is_constant() {
            return None;
        }
        let c_inv = rest.coeff(0).inverse()?;
        let num = &(&Polynomial::constant(c_inv) * &Polynomial::t().pow(self.a)) * &omt.pow(self.b);
        Some(Self::new(num, i, j))
    }

    /// Numerator over the common denominator `t^a (1-t)^b`, for `a ≥ self.a`, `b ≥ self.b`.
    pub fn numerator_over(&self, a: u32, b: u32) -> Polynomial<Rational> {
        assert!(a >= self.a && b >= self.b, "denominator too small");
        &self.num.shift(a - self.a) * &one_minus_t().pow(b - self.b)
    }
}

impl<'a> Add<&'a ThreePointFraction> for &'a ThreePointFraction {
    type Output = ThreePointFraction;
    fn add(self, rhs: &'a ThreePointFraction) -> ThreePointFraction {
        let a = self.a.max(rhs.a);
        let b = self.b.max(rhs.b);
        ThreePointFraction::new(&self.numerator_over(a, b) + &rhs.numerator_over(a, b), a, b)
    }
}

impl<'a> Sub<&'a ThreePointFraction> for &'a ThreePointFraction {
    type Output = ThreePointFraction;
    fn sub(self, rhs: &'a ThreePointFraction) -> ThreePointFraction {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a ThreePointFraction> for &'a ThreePointFraction {
    type Output = ThreePointFraction;
    fn mul(self, rhs: &'a ThreePointFraction) -> ThreePointFraction {
        ThreePointFraction::new(&self.num * &rhs.num, self.a + rhs.a, self.b + rhs.b)
    }
}

impl Add for ThreePointFraction {
    type Output = ThreePointFraction;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for ThreePointFraction {
    type Output = ThreePointFraction;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for ThreePointFraction {
    type Output = ThreePointFraction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for ThreePointFraction {
    type Output = ThreePointFraction;
    fn neg(self) -> Self {
        ThreePointFraction { num: -self.num, a: self.a, b: self.b }
    }
}

impl From<Polynomial<Rational>> for ThreePointFraction {
    fn from(p: Polynomial<Rational>) -> Self {
        Self::from_poly(p)
    }
}

/// Laurent-representable values print as Laurent polynomials; the rest as
/// `(num)*t^-a*t''^b`, which the expression parser reads back.
impl fmt::Display for ThreePointFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        // (1-t)^-b = t''^b
        let head = self.num.as_laurent().shift(-(self.a as i64));
        if head.num_terms() == 1 && head.coeff(0).is_one() {
            write!(f, "t''")?;
        } else {
            write!(f, "({head})*t''")?;
        }
        if self.b > 1 {
            write!(f, "^{}", self.b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ThreePointFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (t^{} (1-t)^{})", self.num, self.a, self.b)
    }
}
