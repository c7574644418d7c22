// Test-side oracles: a 2x2 matrix model of sl2 over Laurent polynomials and
// over numbers, a rank routine, and window bases.
#![allow(dead_code)]

use onsager::loop_algebra::LoopElement;
use onsager::poly::{Laurent, Polynomial, ThreePointFraction};
use onsager::scalar::{Field, Rational};
use onsager::tetrahedron::ThreePointElement;

pub type Q = Rational;
pub type L = Laurent<Rational>;
pub type P = Polynomial<Rational>;

pub fn q(n: i64) -> Q {
    Q::from(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d).unwrap()
}

pub fn poly(c: &[i64]) -> P {
    P::from_coeffs(c.iter().map(|&x| q(x)).collect())
}

pub fn tp(n: i64) -> L {
    L::t_pow(n)
}

/// `[[a, b], [c, d]]`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<T>(pub [[T; 2]; 2]);

pub trait Ring: Clone + PartialEq {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Ring for L {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for Q {
    fn add(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn sub(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn mul(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }
}

impl<T: Ring> Mat<T> {
    pub fn mul(&self, o: &Self) -> Self {
        let a = &self.0;
        let b = &o.0;
        let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        Mat([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, o: &Self) -> Self {
        let s = |i: usize, j: usize| self.0[i][j].sub(&o.0[i][j]);
        Mat([[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]])
    }

    pub fn add(&self, o: &Self) -> Self {
        let s = |i: usize, j: usize| self.0[i][j].add(&o.0[i][j]);
        Mat([[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]])
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
}

/// `p e + q f + r h` as `[[r, p], [q, -r]]`.
pub fn loop_to_mat(x: &LoopElement<Rational>) -> Mat<L> {
    Mat([[x.r.clone(), x.p.clone()], [x.q.clone(), -x.r.clone()]])
}

pub fn mat_to_loop(m: &Mat<L>) -> LoopElement<Rational> {
    assert_eq!(m.0[0][0], -m.0[1][1].clone(), "not traceless");
    LoopElement::new(m.0[0][1].clone(), m.0[1][0].clone(), m.0[0][0].clone())
}

/// Loop bracket computed as a matrix commutator.
pub fn mat_bracket(x: &LoopElement<Rational>, y: &LoopElement<Rational>) -> LoopElement<Rational> {
    mat_to_loop(&loop_to_mat(x).commutator(&loop_to_mat(y)))
}

/// `b_m = t^m e + t^-m f`
pub fn b(m: i64) -> LoopElement<Rational> {
    LoopElement::new(tp(m), tp(-m), L::zero())
}

/// `c_l = (t^l - t^-l) h`
pub fn c(l: i64) -> LoopElement<Rational> {
    LoopElement::new(L::zero(), L::zero(), &tp(l) - &tp(-l))
}

pub fn lin<T: Clone>(terms: &[(Q, T)], zero: T, add: impl Fn(&T, &T) -> T, scale: impl Fn(&T, &Q) -> T) -> T {
    terms.iter().fold(zero, |acc, (c, x)| add(&acc, &scale(x, c)))
}

// Equitable basis as numeric matrices.
pub fn eq_x() -> Mat<Q> {
    Mat([[q(-1), q(2)], [q(0), q(1)]])
}
pub fn eq_y() -> Mat<Q> {
    Mat([[q(-1), q(0)], [q(-2), q(1)]])
}
pub fn eq_z() -> Mat<Q> {
    Mat([[q(1), q(0)], [q(0), q(-1)]])
}

pub fn scale_mat(m: &Mat<Q>, s: &Q) -> Mat<Q> {
    let e = |i: usize, j: usize| m.0[i][j].clone() * s.clone();
    Mat([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
}

pub fn zero_mat() -> Mat<Q> {
    Mat([[q(0), q(0)], [q(0), q(0)]])
}

/// Value of a three-point fraction at `t0 ∉ {0, 1}`.
pub fn eval_tpf(f: &ThreePointFraction, t0: &Q) -> Q {
    let num = f.numerator().eval(t0);
    let one_minus = Q::one() - t0.clone();
    let mut den = Q::one();
    for _ in 0..f.t_power() {
        den = den * t0.clone();
    }
    for _ in 0..f.one_minus_t_power() {
        den = den * one_minus.clone();
    }
    num * den.inverse().unwrap()
}

/// A three-point element as a numeric matrix at `t0`.
pub fn eval_tp(x: &ThreePointElement, t0: &Q) -> Mat<Q> {
    scale_mat(&eq_x(), &eval_tpf(&x.cx, t0))
        .add(&scale_mat(&eq_y(), &eval_tpf(&x.cy, t0)))
        .add(&scale_mat(&eq_z(), &eval_tpf(&x.cz, t0)))
}

/// Sample points away from 0 and 1.
pub fn sample_points() -> Vec<Q> {
    vec![q(2), q(-1), frac(1, 3), frac(-5, 2), q(7)]
}

/// Rank by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = rows[r][col].inverse().unwrap();
        let pivot_row: Vec<Q> = rows[r].iter().map(|x| x.clone() * inv.clone()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

/// Kernels of two condition matrices on the same domain coincide.
pub fn same_kernel(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let ra = rank(a.to_vec());
    let rb = rank(b.to_vec());
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    ra == rb && rank(both) == ra
}

/// `ker a ⊆ ker b`.
pub fn kernel_within(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    rank(both) == rank(a.to_vec())
}

/// Turns per-column condition vectors (one column per domain basis element)
/// into condition rows.
pub fn columns_to_rows(cols: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = cols.first().map_or(0, Vec::len);
    (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

pub fn apply(rows: &[Vec<Q>], x: &[Q]) -> bool {
    rows.iter().all(|r| r.iter().zip(x).fold(Q::zero(), |acc, (a, b)| acc + a.clone() * b.clone()).is_zero())
}

/// Coefficients of the remainder of `t^shift · l` modulo `p`, padded to `deg p`.
pub fn laurent_rem(l: &L, p: &P, shift: i64) -> Vec<Q> {
    let shifted = P::from_laurent(l.shift(shift)).expect("shift clears negative exponents");
    let r = shifted.rem(p).unwrap();
    let d = p.degree().unwrap();
    (0..d).map(|k| r.coeff(k)).collect()
}
