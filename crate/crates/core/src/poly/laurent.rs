use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Field;

/// A Laurent polynomial in `t` over `F`, stored sparsely.
///
/// No zero coefficient is ever stored, so the empty map is the zero
/// polynomial and structural equality is value equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent<F: Field> {
    terms: BTreeMap<i64, F>,
}

impl<F: Field> Laurent<F> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: F, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(F::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, F)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Coefficients `coeffs[k]` of `t^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<F>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (low + k as i64, c)))
    }

    pub fn add_term(&mut self, exp: i64, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> F {
        self.terms.get(&exp).cloned().unwrap_or_else(F::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &F)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `p(t) ↦ p(t⁻¹)`.
    pub fn substitute_inverse(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at a nonzero point (any point when no negative exponents occur).
    pub fn eval(&self, x: &F) -> Option<F> {
        let mut acc = F::zero();
        for (e, c) in self.terms() {
            let power = if e >= 0 {
                pow_field(x, e as u64)
            } else {
                pow_field(&x.inverse()?, (-e) as u64)
            };
            acc = acc + c.clone() * power;
        }
        Some(acc)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Laurent<G> {
        Laurent::from_terms(self.terms().map(|(e, c)| (e, f(c))))
    }
}

pub(crate) fn pow_field<F: Field>(x: &F, n: u64) -> F {
    let mut acc = F::one();
    for _ in 0..n {
        acc = acc * x.clone();
    }
    acc
}

impl<F: Field> Default for Laurent<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, F: Field> Add<&'a Laurent<F>> for &'a Laurent<F> {
    type Output = Laurent<F>;
    fn add(self, rhs: &'a Laurent<F>) -> Laurent<F> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a Laurent<F>> for &'a Laurent<F> {
    type Output = Laurent<F>;
    fn sub(self, rhs: &'a Laurent<F>) -> Laurent<F> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a Laurent<F>> for &'a Laurent<F> {
    type Output = Laurent<F>;
    fn mul(self, rhs: &'a Laurent<F>) -> Laurent<F> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Field> Add for Laurent<F> {
    type Output = Laurent<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Field> Sub for Laurent<F> {
    type Output = Laurent<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Field> Mul for Laurent<F> {
    type Output = Laurent<F>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Field> Neg for Laurent<F> {
    type Output = Laurent<F>;
    fn neg(self) -> Self {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<F: Field> Neg for &Laurent<F> {
    type Output = Laurent<F>;
    fn neg(self) -> Laurent<F> {
        -self.clone()
    }
}

/// Writes `c*t^e` without a sign; `c` must already be non-negative in print.
fn write_monomial<F: Field>(f: &mut fmt::Formatter<'_>, c: &F, e: i64) -> fmt::Result {
    let t_part = match e {
        0 => None,
        1 => Some("t".to_string()),
        _ => Some(format!("t^{e}")),
    };
    match t_part {
        None => write!(f, "{c}"),
        Some(tp) if c.is_one() => write!(f, "{tp}"),
        Some(tp) => write!(f, "{c}*{tp}"),
    }
}

/// Prints in descending exponent order, e.g. `2*t^3 - t + 5 - t^-2`.
impl<F: Field> fmt::Display for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.prints_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, &magnitude, e)?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}
