//! The [`LieAlgebra`] abstraction shared by every realization, and the
//! generic checks built on it: Jacobi defects, Dolan–Grady relations and
//! regeneration of the `A_m`, `G_l` basis from two generators.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::scalar::{Field, Rational};

/// A Lie algebra over ℚ (or an extension of it) with an exact bracket.
pub trait LieAlgebra: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn bracket(&self, other: &Self) -> Self;

    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `ad_self^n (other)`.
    fn ad_pow(&self, n: usize, other: &Self) -> Self {
        let mut acc = other.clone();
        for _ in 0..n {
            acc = self.bracket(&acc);
        }
        acc
    }
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn jacobi_defect<L: LieAlgebra>(x: &L, y: &L, z: &L) -> L {
    x.bracket(&y.bracket(z))
        .add(&y.bracket(&z.bracket(x)))
        .add(&z.bracket(&x.bracket(y)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DgReport<L> {
    pub dg1_holds: bool,
    pub dg2_holds: bool,
    /// `[a,[a,[a,b]]] - 4[a,b]`
    pub dg1_defect: L,
    /// `[b,[b,[b,a]]] - 4[b,a]`
    pub dg2_defect: L,
}

impl<L> DgReport<L> {
    pub fn holds(&self) -> bool {
        self.dg1_holds && self.dg2_holds
    }
}

fn dg_defect<L: LieAlgebra>(a: &L, b: &L) -> L {
    let ab = a.bracket(b);
    a.ad_pow(2, &ab).sub(&ab.scale(&Rational::from(4)))
}

/// Checks both Dolan–Grady relations for the pair `(a, b)`.
pub fn check_dolan_grady<L: LieAlgebra>(a: &L, b: &L) -> DgReport<L> {
    let d1 = dg_defect(a, b);
    let d2 = dg_defect(b, a);
    DgReport { dg1_holds: d1.is_zero(), dg2_holds: d2.is_zero(), dg1_defect: d1, dg2_defect: d2 }
}

/// Images of `A_m` (`|m| ≤ n`) and `G_l` (`1 ≤ l ≤ n`) built from two
/// generators standing for `A_0` and `A_1`.
#[derive(Clone, Debug)]
pub struct GeneratedBasis<L> {
    a: BTreeMap<i64, L>,
    g: BTreeMap<i64, L>,
    n: i64,
}

impl<L: LieAlgebra> GeneratedBasis<L> {
    /// Recursive definition: `G_1 = ½[A_1,A_0]`,
    /// `A_{m+1} = A_{m-1} + [G_1,A_m]` (and its downward form),
    /// `G_m = ½[A_m,A_0]`.
    pub fn by_recursion(a0: &L, a1: &L, n: usize) -> Self {
        let n = n.max(1) as i64;
        let half = Rational::new(1, 2).unwrap();
        let mut a = BTreeMap::new();
        a.insert(0, a0.clone());
        a.insert(1, a1.clone());
        let g1 = a1.bracket(a0).scale(&half);
        for m in 1..n {
            let next = a[&(m - 1)].add(&g1.bracket(&a[&m]));
            a.insert(m + 1, next);
        }
        for m in (-n + 1..=0).rev() {
            let prev = a[&(m + 1)].sub(&g1.bracket(&a[&m]));
            a.insert(m - 1, prev);
        }
        let g = (1..=n).map(|m| (m, a[&m].bracket(a0).scale(&half))).collect();
        GeneratedBasis { a, g, n }
    }

    /// Inductive generation: `G_1 = ½[A_1,A_0]`, `A_{-1} = A_1 - [G_1,A_0]`,
    /// then for `k ≥ 2`: `G_k = ½[A_{k-1},A_{-1}]`, `A_k = [G_1,A_{k-1}] + A_{k-2}`,
    /// `A_{-k} = A_k - [G_k,A_0]`.
    pub fn by_induction(a0: &L, a1: &L, n: usize) -> Self {
        let n = n.max(1) as i64;
        let half = Rational::new(1, 2).unwrap();
        let mut a = BTreeMap::new();
        let mut g = BTreeMap::new();
        a.insert(0, a0.clone());
        a.insert(1, a1.clone());
        let g1 = a1.bracket(a0).scale(&half);
        a.insert(-1, a1.sub(&g1.bracket(a0)));
        g.insert(1, g1.clone());
        for k in 2..=n {
            let gk = a[&(k - 1)].bracket(&a[&-1]).scale(&half);
            let ak = g1.bracket(&a[&(k - 1)]).add(&a[&(k - 2)]);
            let a_neg = ak.sub(&gk.bracket(a0));
            g.insert(k, gk);
            a.insert(k, ak);
            a.insert(-k, a_neg);
        }
        GeneratedBasis { a, g, n }
    }

    pub fn max_index(&self) -> i64 {
        self.n
    }

    /// Image of `A_m`; `None` outside the generated window.
    pub fn a(&self, m: i64) -> Option<&L> {
        self.a.get(&m)
    }

    /// Image of `G_l` with `G_0 = 0`, `G_{-l} = -G_l`; `None` outside the window.
    pub fn g(&self, l: i64) -> Option<L> {
        match l {
            0 => Some(L::zero()),
            l if l < 0 => self.g.get(&-l).map(L::neg),
            l => self.g.get(&l).cloned(),
        }
    }

    pub fn a_images(&self) -> impl Iterator<Item = (i64, &L)> {
        self.a.iter().map(|(k, v)| (*k, v))
    }

    pub fn g_images(&self) -> impl Iterator<Item = (i64, &L)> {
        self.g.iter().map(|(k, v)| (*k, v))
    }
}
