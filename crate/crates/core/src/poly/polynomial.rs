use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::Laurent;
use super::PolyError;
use crate::scalar::Field;

/// An element of `F[t]`: a [`Laurent`] polynomial with no negative exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field>(Laurent<F>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial(Laurent::zero())
    }

    pub fn one() -> Self {
        Polynomial(Laurent::one())
    }

    pub fn constant(c: F) -> Self {
        Polynomial(Laurent::constant(c))
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, exp: u32) -> Self {
        Polynomial(Laurent::monomial(c, exp as i64))
    }

    /// `t - c`.
    pub fn linear_root(c: F) -> Self {
        Polynomial(Laurent::from_terms([(1, F::one()), (0, -c)]))
    }

    /// Coefficients in ascending order: `coeffs[k]` multiplies `t^k`.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        Polynomial(Laurent::from_coeffs(0, coeffs))
    }

    pub fn from_laurent(p: Laurent<F>) -> Result<Self, PolyError> {
        match p.min_exp() {
            Some(e) if e < 0 => Err(PolyError::NegativeExponent(e)),
            _ => Ok(Polynomial(p)),
        }
    }

    pub fn as_laurent(&self) -> &Laurent<F> {
        &self.0
    }

    pub fn into_laurent(self) -> Laurent<F> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn coeff(&self, k: u32) -> F {
        self.0.coeff(k as i64)
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<u32> {
        self.0.max_exp().map(|e| e as u32)
    }

    pub fn leading_coeff(&self) -> Option<F> {
        self.0.max_exp().map(|e| self.0.coeff(e))
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    pub fn monic(&self) -> Result<Self, PolyError> {
        let lc = self.leading_coeff().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.scale(&lc.inverse().expect("leading coefficient is nonzero")))
    }

    pub fn scale(&self, c: &F) -> Self {
        Polynomial(self.0.scale(c))
    }

    pub fn shift(&self, k: u32) -> Self {
        Polynomial(self.0.shift(k as i64))
    }

    pub fn pow(&self, n: u32) -> Self {
        Polynomial(self.0.pow(n))
    }

    pub fn eval(&self, x: &F) -> F {
        self.0.eval(x).expect("polynomial evaluation is total")
    }

    /// Dense coefficient vector, ascending; empty for zero.
    pub fn coeffs(&self) -> Vec<F> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff(k)).collect(),
        }
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dd = d.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lc_inv = d.leading_coeff().unwrap().inverse().unwrap();
        let mut rem = self.coeffs();
        let mut quot = vec![F::zero(); rem.len().saturating_sub(dd as usize)];
        let dcoeffs = d.coeffs();
        while rem.len() > dd as usize {
            let top = rem.len() - 1;
            let c = rem[top].clone() * lc_inv.clone();
            let shift = top - dd as usize;
            if !c.is_zero() {
                for (k, dc) in dcoeffs.iter().enumerate() {
                    rem[shift + k] = rem[shift + k].clone() - c.clone() * dc.clone();
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, PolyError> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn divides(&self, other: &Self) -> Result<bool, PolyError> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>, PolyError> {
        let (q, r) = self.div_rem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd together with Bézout cofactors: `s·a + t·b = g`.
    pub fn extended_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.leading_coeff().unwrap().inverse().unwrap();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// `p(t) ↦ t^deg(p) · p(t⁻¹)`, the coefficient reversal.
    pub fn reversed(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Polynomial(self.0.substitute_inverse().shift(d as i64)),
        }
    }

    /// Removes the largest power of `t` dividing `self`; returns it with the exponent.
    pub fn strip_t_power(&self) -> (Self, u32) {
        match self.0.min_exp() {
            None => (self.clone(), 0),
            Some(k) => (Polynomial(self.0.shift(-k)), k as u32),
        }
    }
}

/// Monic gcd. Errors only when both inputs are zero.
pub fn poly_gcd<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
    Ok(Polynomial::extended_gcd(a, b)?.0)
}

/// Monic lcm; `gcd · lcm` equals the monic normalization of `a·b`.
pub fn poly_lcm<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
    let g = poly_gcd(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Polynomial::zero());
    }
    let prod = a * b;
    prod.exact_div(&g)?
        .expect("gcd divides the product")
        .monic()
}

/// Largest `k` with `(t - c)^k | p`.
pub fn multiplicity_at<F: Field>(p: &Polynomial<F>, c: &F) -> Result<u32, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let root = Polynomial::linear_root(c.clone());
    let mut k = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.exact_div(&root)? {
        cur = q;
        k += 1;
    }
    Ok(k)
}

/// Sign `s` with `P(t) = s·t^d·P(t⁻¹)`, or `None` when `P` is not reciprocal.
pub fn is_reciprocal<F: Field>(p: &Polynomial<F>) -> Result<Option<Sign>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let rev = p.reversed();
    if rev == *p {
        Ok(Some(Sign::Plus))
    } else if rev == -p.clone() {
        Ok(Some(Sign::Minus))
    } else {
        Ok(None)
    }
}

/// Solves `x ≡ residues[j] (mod moduli[j])` for pairwise coprime moduli.
///
/// The result is reduced modulo the product of the moduli.
pub fn crt_solve<F: Field>(
    residues: &[Polynomial<F>],
    moduli: &[Polynomial<F>],
) -> Result<Polynomial<F>, PolyError> {
    if residues.len() != moduli.len() {
        return Err(PolyError::LengthMismatch(residues.len(), moduli.len()));
    }
    if moduli.iter().any(Polynomial::is_zero) {
        return Err(PolyError::ZeroPolynomial);
    }
    for (i, a) in moduli.iter().enumerate() {
        for b in &moduli[i + 1..] {
            let g = poly_gcd(a, b)?;
            if !g.is_constant() {
                return Err(PolyError::NotCoprime(g.to_string()));
            }
        }
    }
    let mut x = Polynomial::zero();
    let mut modulus = Polynomial::one();
    for (r, m) in residues.iter().zip(moduli) {
        // x' = x + modulus·k with k ≡ (r - x)·modulus⁻¹ (mod m)
        let (_, inv, _) = Polynomial::extended_gcd(&modulus, m)?;
        let k = (&(r - &x) * &inv).rem(m)?;
        x = &x + &(&modulus * &k);
        modulus = &modulus * m;
        x = x.rem(&modulus)?;
    }
    Ok(x)
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident) => {
        impl<'a, F: Field> $tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                Polynomial((&self.0).$method(&rhs.0))
            }
        }
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                Polynomial((&self.0).$method(&rhs.0))
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Self {
        Polynomial(-self.0)
    }
}

impl<F: Field> From<Polynomial<F>> for Laurent<F> {
    fn from(p: Polynomial<F>) -> Self {
        p.0
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.0)
    }
}
