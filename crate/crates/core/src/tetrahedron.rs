//! The three-point loop algebra `sl₂ ⊗ k[t, t⁻¹, (1-t)⁻¹]` in the equitable
//! basis
//!
//! ```text
//! x = 2e - h    y = -2f - h    z = h        [x,y] = 2(x+y)  [y,z] = 2(y+z)  [z,x] = 2(z+x)
//! ```
//!
//! together with the images `ψ(X_ij)` of the tetrahedron generators, Elduque's
//! elements `u_i`, the free `k[t]`-module `v_0 k[t] ⊕ v_1 k[t] ⊕ v_2 k[t]` and
//! the embedding φ of the Onsager algebra.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::display::write_ring_combination;
use crate::lie::{GeneratedBasis, LieAlgebra};
use crate::linalg;
use crate::loop_algebra::LoopElement;
use crate::onsager::OnsagerElement;
use crate::poly::{Polynomial, ThreePointFraction};
use crate::scalar::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TetraError {
    #[error("generator indices must be distinct elements of {{0,1,2,3}}, got ({0},{1})")]
    BadGenerator(u8, u8),
    #[error("not in the v-module: {coordinate}-coordinate is {value}")]
    NotInModule { coordinate: &'static str, value: String },
    #[error("element has coefficients outside k[t, t⁻¹]: {0}")]
    NotLaurent(String),
    #[error("element is not in the image of φ: {0}")]
    NotInImage(String),
}

type TPF = ThreePointFraction;

fn c(n: i64) -> TPF {
    TPF::constant(Rational::from(n))
}

fn t() -> TPF {
    TPF::t()
}

fn t_minus_one() -> TPF {
    &t() - &c(1)
}

/// `αx + βy + γz` with coefficients in the three-point ring.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreePointElement {
    pub cx: TPF,
    pub cy: TPF,
    pub cz: TPF,
}

impl ThreePointElement {
    pub fn new(cx: TPF, cy: TPF, cz: TPF) -> Self {
        ThreePointElement { cx, cy, cz }
    }

    pub fn zero() -> Self {
        Self::new(TPF::zero(), TPF::zero(), TPF::zero())
    }

    pub fn x() -> Self {
        Self::new(c(1), TPF::zero(), TPF::zero())
    }

    pub fn y() -> Self {
        Self::new(TPF::zero(), c(1), TPF::zero())
    }

    pub fn z() -> Self {
        Self::new(TPF::zero(), TPF::zero(), c(1))
    }

    pub fn is_zero(&self) -> bool {
        self.cx.is_zero() && self.cy.is_zero() && self.cz.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.cx.scale(s), self.cy.scale(s), self.cz.scale(s))
    }

    /// Multiplication by a ring element.
    pub fn mul_ring(&self, s: &TPF) -> Self {
        Self::new(s * &self.cx, s * &self.cy, s * &self.cz)
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let (a1, b1, c1) = (&self.cx, &self.cy, &self.cz);
        let (a2, b2, c2) = (&other.cx, &other.cy, &other.cz);
        let xy = &(a1 * b2) - &(b1 * a2);
        let yz = &(b1 * c2) - &(c1 * b2);
        let zx = &(c1 * a2) - &(a1 * c2);
        let two = Rational::from(2);
        Self::new(
            (&xy + &zx).scale(&two),
            (&xy + &yz).scale(&two),
            (&yz + &zx).scale(&two),
        )
    }

    /// From `p e + q f + r h`: `e = (x+z)/2`, `f = -(y+z)/2`, `h = z`.
    pub fn from_loop(l: &LoopElement<Rational>) -> Self {
        let half = Rational::new(1, 2).unwrap();
        let p = TPF::from_laurent(&l.p);
        let q = TPF::from_laurent(&l.q);
        let r = TPF::from_laurent(&l.r);
        Self::new(
            p.scale(&half),
            q.scale(&-half.clone()),
            &(&p - &q).scale(&half) + &r,
        )
    }

    /// The `(e, f, h)` coefficients: `e: 2α`, `f: -2β`, `h: γ - α - β`.
    pub fn chevalley_coords(&self) -> (TPF, TPF, TPF) {
        (
            self.cx.scale(&Rational::from(2)),
            self.cy.scale(&Rational::from(-2)),
            &(&self.cz - &self.cx) - &self.cy,
        )
    }

    pub fn to_loop(&self) -> Result<LoopElement<Rational>, TetraError> {
        let (p, q, r) = self.chevalley_coords();
        let err = || TetraError::NotLaurent(self.to_string());
        Ok(LoopElement::new(
            p.to_laurent().ok_or_else(err)?,
            q.to_laurent().ok_or_else(err)?,
            r.to_laurent().ok_or_else(err)?,
        ))
    }

    /// Coordinates `(c0, c1, c2)` with `self = c0 u_0 + c1 u_1 + c2 u_2`.
    ///
    /// The `u_i` have constant determinant `1/16`, so the inverse is
    /// `c0 = 2γ - 2β(t-1)/t`, `c1 = 2α + 2γ/(t-1)`, `c2 = 2β - 2tα`.
    pub fn u_coords(&self) -> (TPF, TPF, TPF) {
        let (al, be, ga) = (&self.cx, &self.cy, &self.cz);
        let two = Rational::from(2);
        let t_prime = TPF::t_prime();
        let inv_t_minus_one = TPF::t_double_prime().scale(&-Rational::one());
        (
            (ga - &(be * &t_prime)).scale(&two),
            (al + &(ga * &inv_t_minus_one)).scale(&two),
            (be - &(&t() * al)).scale(&two),
        )
    }

    pub fn from_u_coords(c0: &TPF, c1: &TPF, c2: &TPF) -> Self {
        let (u0, u1, u2) = u_elements();
        &(&u0.mul_ring(c0) + &u1.mul_ring(c1)) + &u2.mul_ring(c2)
    }
}

impl LieAlgebra for ThreePointElement {
    fn zero() -> Self {
        ThreePointElement::zero()
    }
    fn is_zero(&self) -> bool {
        ThreePointElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, s: &Rational) -> Self {
        ThreePointElement::scale(self, s)
    }
    fn bracket(&self, other: &Self) -> Self {
        ThreePointElement::bracket(self, other)
    }
}

impl<'a> Add<&'a ThreePointElement> for &'a ThreePointElement {
    type Output = ThreePointElement;
    fn add(self, rhs: &'a ThreePointElement) -> ThreePointElement {
        ThreePointElement::new(&self.cx + &rhs.cx, &self.cy + &rhs.cy, &self.cz + &rhs.cz)
    }
}

impl<'a> Sub<&'a ThreePointElement> for &'a ThreePointElement {
    type Output = ThreePointElement;
    fn sub(self, rhs: &'a ThreePointElement) -> ThreePointElement {
        ThreePointElement::new(&self.cx - &rhs.cx, &self.cy - &rhs.cy, &self.cz - &rhs.cz)
    }
}

impl Add for ThreePointElement {
    type Output = ThreePointElement;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for ThreePointElement {
    type Output = ThreePointElement;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Neg for ThreePointElement {
    type Output = ThreePointElement;
    fn neg(self) -> Self {
        ThreePointElement::new(-self.cx, -self.cy, -self.cz)
    }
}

impl fmt::Display for ThreePointElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ring_combination(f, &[(&self.cx, "x"), (&self.cy, "y"), (&self.cz, "z")])
    }
}

impl fmt::Debug for ThreePointElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThreePointElement({self})")
    }
}

/// `ψ(X_ij)`; reversed index pairs give the negatives.
pub fn psi_generator(i: u8, j: u8) -> Result<ThreePointElement, TetraError> {
    if i == j || i > 3 || j > 3 {
        return Err(TetraError::BadGenerator(i, j));
    }
    let x = ThreePointElement::x;
    let y = ThreePointElement::y;
    let z = ThreePointElement::z;
    let tp = TPF::t_prime();
    let tpp = TPF::t_double_prime();
    let image = |a: u8, b: u8| -> Option<ThreePointElement> {
        Some(match (a, b) {
            (1, 2) => x(),
            (0, 3) => &y().mul_ring(&t()) + &z().mul_ring(&t_minus_one()),
            (2, 3) => y(),
            (0, 1) => &z().mul_ring(&tp) + &x().mul_ring(&(&tp - &c(1))),
            (3, 1) => z(),
            (0, 2) => &x().mul_ring(&tpp) + &y().mul_ring(&(&tpp - &c(1))),
            _ => return None,
        })
    };
    Ok(image(i, j).unwrap_or_else(|| -image(j, i).expect("one orientation is listed")))
}

/// `u_0 = ¼(z + x t'' + y(t''-1))`, `u_1 = ¼(x + y t + z(t-1))`,
/// `u_2 = ¼(y + z t' + x(t'-1))`.
pub fn u_elements() -> (ThreePointElement, ThreePointElement, ThreePointElement) {
    let quarter = Rational::new(1, 4).unwrap();
    let tp = TPF::t_prime();
    let tpp = TPF::t_double_prime();
    let u0 = ThreePointElement::new(tpp.clone(), &tpp - &c(1), c(1));
    let u1 = ThreePointElement::new(c(1), t(), t_minus_one());
    let u2 = ThreePointElement::new(&tp - &c(1), c(1), tp);
    (u0.scale(&quarter), u1.scale(&quarter), u2.scale(&quarter))
}

/// `v_0 = u_0(t-1)`, `v_1 = u_1`, `v_2 = u_2 t`.
pub fn v_elements() -> (ThreePointElement, ThreePointElement, ThreePointElement) {
    let (u0, u1, u2) = u_elements();
    (u0.mul_ring(&t_minus_one()), u1, u2.mul_ring(&t()))
}

/// One instance of a defining relation checked under ψ.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub indices: Vec<u8>,
    pub passed: bool,
    pub defect: ThreePointElement,
}

#[derive(Clone, Debug)]
pub struct TetraReport {
    pub checks: Vec<RelationCheck>,
}

impl TetraReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn record(checks: &mut Vec<RelationCheck>, relation: &'static str, indices: Vec<u8>, defect: ThreePointElement) {
    checks.push(RelationCheck { relation, indices, passed: defect.is_zero(), defect });
}

fn det3(m: [[TPF; 3]; 3]) -> TPF {
    let minor = |a: &TPF, b: &TPF, c: &TPF, d: &TPF| &(a * d) - &(b * c);
    let t0 = &m[0][0] * &minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let t1 = &m[0][1] * &minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let t2 = &m[0][2] * &minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    &(&t0 - &t1) + &t2
}

/// Checks under ψ every instance of
///
/// * `X_ij + X_ji = 0`,
/// * `[X_ij, X_jk] = 2(X_ij + X_jk)` for distinct `i, j, k`,
/// * `[X_hi, [X_hi, [X_hi, X_jk]]] = 4[X_hi, X_jk]` for distinct `h, i, j, k`,
///
/// and that each face `X_ij, X_jk, X_ki` is an equitable basis of a copy of `sl₂`.
pub fn verify_tetra_relations() -> TetraReport {
    let g = |i: u8, j: u8| psi_generator(i, j).unwrap();
    let mut checks = Vec::new();
    for i in 0..4u8 {
        for j in (0..4u8).filter(|&j| j != i) {
            record(&mut checks, "tetra1", vec![i, j], &g(i, j) + &g(j, i));
        }
    }
    for i in 0..4u8 {
        for j in (0..4u8).filter(|&j| j != i) {
            for k in (0..4u8).filter(|&k| k != i && k != j) {
                let lhs = g(i, j).bracket(&g(j, k));
                let rhs = (&g(i, j) + &g(j, k)).scale(&Rational::from(2));
                record(&mut checks, "tetra2", vec![i, j, k], &lhs - &rhs);
            }
        }
    }
    for h in 0..4u8 {
        for i in (0..4u8).filter(|&i| i != h) {
            for j in (0..4u8).filter(|&j| j != h && j != i) {
                let k = 6 - h - i - j;
                let a = g(h, i);
                let ab = a.bracket(&g(j, k));
                let lhs = a.ad_pow(2, &ab);
                record(&mut checks, "tetra3", vec![h, i, j, k], &lhs - &ab.scale(&Rational::from(4)));
            }
        }
    }
    for (i, j, k) in [(1u8, 2u8, 3u8), (0, 1, 2), (0, 2, 3), (0, 3, 1)] {
        let basis = [g(i, j), g(j, k), g(k, i)];
        let mut defect = ThreePointElement::zero();
        for n in 0..3 {
            let (a, b) = (&basis[n], &basis[(n + 1) % 3]);
            let d = &a.bracket(b) - &(a + b).scale(&Rational::from(2));
            defect = &defect + &d;
        }
        let det = det3(basis.clone().map(|e| [e.cx, e.cy, e.cz]));
        checks.push(RelationCheck {
            relation: "face",
            indices: vec![i, j, k],
            passed: defect.is_zero() && !det.is_zero(),
            defect,
        });
    }
    TetraReport { checks }
}

/// `q0 v_0 + q1 v_1 + q2 v_2` with `q_i ∈ k[t]`.
#[derive(Clone, PartialEq, Eq)]
pub struct VElement {
    pub q0: Polynomial<Rational>,
    pub q1: Polynomial<Rational>,
    pub q2: Polynomial<Rational>,
}

type P = Polynomial<Rational>;

impl VElement {
    pub fn new(q0: P, q1: P, q2: P) -> Self {
        VElement { q0, q1, q2 }
    }

    pub fn zero() -> Self {
        Self::new(P::zero(), P::zero(), P::zero())
    }

    /// `t^k v_i`.
    pub fn basis(i: usize, k: u32) -> Self {
        let mono = P::monomial(Rational::one(), k);
        let mut out = Self::zero();
        match i {
            0 => out.q0 = mono,
            1 => out.q1 = mono,
            2 => out.q2 = mono,
            _ => panic!("v-basis index {i} out of range"),
        }
        out
    }

    pub fn components(&self) -> [&P; 3] {
        [&self.q0, &self.q1, &self.q2]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|q| q.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.q0.scale(s), self.q1.scale(s), self.q2.scale(s))
    }

    pub fn mul_poly(&self, s: &P) -> Self {
        Self::new(s * &self.q0, s * &self.q1, s * &self.q2)
    }

    /// Largest component degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.components().iter().filter_map(|q| q.degree()).max()
    }

    /// The `k[t]`-bilinear bracket with
    /// `[v_0,v_1] = -v_2(t-1)`, `[v_1,v_2] = -v_0`, `[v_2,v_0] = v_1 t`.
    pub fn bracket(&self, other: &Self) -> Self {
        let (a0, a1, a2) = (&self.q0, &self.q1, &self.q2);
        let (b0, b1, b2) = (&other.q0, &other.q1, &other.q2);
        let tm1 = P::linear_root(Rational::one());
        VElement::new(
            -(&(a1 * b2) - &(a2 * b1)),
            &P::t() * &(&(a2 * b0) - &(a0 * b2)),
            -(&tm1 * &(&(a0 * b1) - &(a1 * b0))),
        )
    }
}

/// [`VElement::bracket`].
pub fn v_bracket(a: &VElement, b: &VElement) -> VElement {
    a.bracket(b)
}

impl LieAlgebra for VElement {
    fn zero() -> Self {
        VElement::zero()
    }
    fn is_zero(&self) -> bool {
        VElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, s: &Rational) -> Self {
        VElement::scale(self, s)
    }
    fn bracket(&self, other: &Self) -> Self {
        VElement::bracket(self, other)
    }
}

impl<'a> Add<&'a VElement> for &'a VElement {
    type Output = VElement;
    fn add(self, rhs: &'a VElement) -> VElement {
        VElement::new(&self.q0 + &rhs.q0, &self.q1 + &rhs.q1, &self.q2 + &rhs.q2)
    }
}

impl<'a> Sub<&'a VElement> for &'a VElement {
    type Output = VElement;
    fn sub(self, rhs: &'a VElement) -> VElement {
        VElement::new(&self.q0 - &rhs.q0, &self.q1 - &rhs.q1, &self.q2 - &rhs.q2)
    }
}

impl Add for VElement {
    type Output = VElement;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for VElement {
    type Output = VElement;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Neg for VElement {
    type Output = VElement;
    fn neg(self) -> Self {
        VElement::new(-self.q0, -self.q1, -self.q2)
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ring_combination(
            f,
            &[(self.q0.as_laurent(), "v_0"), (self.q1.as_laurent(), "v_1"), (self.q2.as_laurent(), "v_2")],
        )
    }
}

impl fmt::Debug for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VElement({self})")
    }
}

pub fn from_v(v: &VElement) -> ThreePointElement {
    let (v0, v1, v2) = v_elements();
    let lift = |q: &P| TPF::from_poly(q.clone());
    &(&v0.mul_ring(&lift(&v.q0)) + &v1.mul_ring(&lift(&v.q1))) + &v2.mul_ring(&lift(&v.q2))
}

/// Coordinates in `v_0 k[t] ⊕ v_1 k[t] ⊕ v_2 k[t]`; fails when some
/// coordinate leaves `k[t]`.
pub fn to_v(x: &ThreePointElement) -> Result<VElement, TetraError> {
    let (c0, c1, c2) = x.u_coords();
    let inv_t_minus_one = TPF::t_double_prime().scale(&-Rational::one());
    let inv_t = TPF::new(P::one(), 1, 0);
    let coord = |name: &'static str, v: TPF| {
        v.to_polynomial().ok_or_else(|| TetraError::NotInModule { coordinate: name, value: v.to_string() })
    };
    Ok(VElement::new(
        coord("v_0", &c0 * &inv_t_minus_one)?,
        coord("v_1", c1)?,
        coord("v_2", &c2 * &inv_t)?,
    ))
}

/// Images of the Onsager generators: `A_0 ↦ 2(u_1 - u_2 t)`, `A_1 ↦ 2(u_1 + u_2 t)`.
pub fn phi_generators() -> (ThreePointElement, ThreePointElement) {
    let (_, v1, v2) = v_elements();
    let two = Rational::from(2);
    ((&v1 - &v2).scale(&two), (&v1 + &v2).scale(&two))
}

fn apply_basis<L: LieAlgebra>(x: &OnsagerElement, basis: &GeneratedBasis<L>) -> L {
    let mut acc = L::zero();
    for (m, c) in x.a_terms() {
        acc = acc.add(&basis.a(m).expect("index inside generated window").scale(c));
    }
    for (l, c) in x.g_terms() {
        acc = acc.add(&basis.g(l).expect("index inside generated window").scale(c));
    }
    acc
}

/// φ, evaluated by running the defining recursion inside the three-point algebra.
pub fn phi(x: &OnsagerElement) -> ThreePointElement {
    let (a0, a1) = phi_generators();
    let basis = GeneratedBasis::by_recursion(&a0, &a1, x.max_index().max(1) as usize);
    apply_basis(x, &basis)
}

/// φ followed by [`to_v`], computed directly in the v-module.
pub fn phi_v(x: &OnsagerElement) -> VElement {
    let two = Rational::from(2);
    let (v1, v2) = (VElement::basis(1, 0), VElement::basis(2, 0));
    let a0 = (&v1 - &v2).scale(&two);
    let a1 = (&v1 + &v2).scale(&two);
    let basis = GeneratedBasis::by_recursion(&a0, &a1, x.max_index().max(1) as usize);
    apply_basis(x, &basis)
}

fn v_vector(v: &VElement, deg: u32) -> Vec<Rational> {
    v.components()
        .iter()
        .flat_map(|q| (0..=deg).map(move |k| q.coeff(k)))
        .collect()
}

/// φ⁻¹ on the v-module, by an exact linear solve over a window of basis
/// images large enough to reach the degree of `v`.
pub fn phi_inverse_v(v: &VElement) -> Result<OnsagerElement, TetraError> {
    let Some(d) = v.degree() else {
        return Ok(OnsagerElement::zero());
    };
    let n = d as i64 + 2;
    let two = Rational::from(2);
    let (v1, v2) = (VElement::basis(1, 0), VElement::basis(2, 0));
    let basis =
        GeneratedBasis::by_recursion(&(&v1 - &v2).scale(&two), &(&v1 + &v2).scale(&two), n as usize);
    let mut symbols = Vec::new();
    let mut images = Vec::new();
    for (m, img) in basis.a_images() {
        symbols.push(OnsagerElement::a(m));
        images.push(img.clone());
    }
    for (l, img) in basis.g_images() {
        symbols.push(OnsagerElement::g(l));
        images.push(img.clone());
    }
    let deg = images.iter().filter_map(VElement::degree).max().unwrap_or(0).max(d);
    let cols: Vec<Vec<Rational>> = images.iter().map(|i| v_vector(i, deg)).collect();
    let rows: Vec<Vec<Rational>> =
        (0..cols[0].len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let sol = linalg::solve(&rows, &v_vector(v, deg)).ok_or_else(|| TetraError::NotInImage(v.to_string()))?;
    let mut out = OnsagerElement::zero();
    for (s, c) in symbols.iter().zip(sol) {
        out = &out + &s.scale(&c);
    }
    Ok(out)
}

/// φ⁻¹ on three-point elements lying in the image.
pub fn phi_inverse(x: &ThreePointElement) -> Result<OnsagerElement, TetraError> {
    phi_inverse_v(&to_v(x)?)
}

/// One step of the chain `(ad_{v_0})^m (u_1)` or `(ad_{v_0})^m (u_2 t)`.
#[derive(Clone, Debug)]
pub struct ChainTerm {
    pub start: &'static str,
    pub m: u32,
    pub value: ThreePointElement,
    /// Index `i` of the only nonzero `u`-coordinate.
    pub u_index: usize,
    /// That coordinate, which is a polynomial.
    pub coefficient: P,
}

impl ChainTerm {
    pub fn leading(&self) -> (usize, u32) {
        (self.u_index, self.coefficient.degree().unwrap())
    }
}

#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub terms: Vec<ChainTerm>,
    /// Every term has a single `u`-coordinate, a polynomial.
    pub single_coordinate: bool,
    pub distinct_leading: bool,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.single_coordinate && self.distinct_leading
    }
}

/// Iterates `ad_{v_0}` on `u_1` and on `u_2 t` up to `max_m` times and
/// compares the leading monomials `u_i t^d` of the results.
pub fn independence_witness(max_m: u32) -> IndependenceReport {
    let (v0, v1, v2) = v_elements();
    let mut terms = Vec::new();
    let mut single = true;
    for (start, seed) in [("u_1", v1), ("u_2 t", v2)] {
        let mut cur = seed;
        for m in 0..=max_m {
            let (c0, c1, c2) = cur.u_coords();
            let nonzero: Vec<(usize, TPF)> =
                [c0, c1, c2].into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            let (u_index, coefficient) = match nonzero.as_slice() {
                [(i, c)] if c.to_polynomial().is_some() => (*i, c.to_polynomial().unwrap()),
                _ => {
                    single = false;
                    (usize::MAX, P::zero())
                }
            };
            terms.push(ChainTerm { start, m, value: cur.clone(), u_index, coefficient });
            cur = v0.bracket(&cur);
        }
    }
    let mut leads: Vec<(usize, u32)> =
        terms.iter().filter(|t| !t.coefficient.is_zero()).map(ChainTerm::leading).collect();
    let n = leads.len();
    leads.sort();
    leads.dedup();
    IndependenceReport { distinct_leading: single && leads.len() == n, single_coordinate: single, terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Laurent;

    fn poly(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn equitable_relations() {
        let (x, y, z) = (ThreePointElement::x(), ThreePointElement::y(), ThreePointElement::z());
        let two = Rational::from(2);
        assert_eq!(x.bracket(&y), (&x + &y).scale(&two));
        assert_eq!(y.bracket(&z), (&y + &z).scale(&two));
        assert_eq!(z.bracket(&x), (&z + &x).scale(&two));
    }

    #[test]
    fn equitable_matches_chevalley() {
        // x = 2e - h, y = -2f - h, z = h
        let e = LoopElement::<Rational>::e(0);
        let f = LoopElement::<Rational>::f(0);
        let h = LoopElement::<Rational>::h(0);
        let two = Rational::from(2);
        assert_eq!(ThreePointElement::from_loop(&(&e.scale(&two) - &h)), ThreePointElement::x());
        assert_eq!(ThreePointElement::from_loop(&(&f.scale(&-two) - &h)), ThreePointElement::y());
        assert_eq!(ThreePointElement::from_loop(&h), ThreePointElement::z());
        let l = LoopElement::new(Laurent::t_pow(2), Laurent::t_pow(-1), Laurent::from_terms([(1, Rational::from(3))]));
        assert_eq!(ThreePointElement::from_loop(&l).to_loop().unwrap(), l);
    }

    #[test]
    fn u_relation() {
        let (u0, u1, u2) = u_elements();
        assert_eq!(u0.bracket(&u1), -u2.mul_ring(&t()));
    }

    #[test]
    fn u_coordinates_invert() {
        let x = ThreePointElement::new(TPF::t_prime(), TPF::t_double_prime(), c(3));
        let (c0, c1, c2) = x.u_coords();
        assert_eq!(ThreePointElement::from_u_coords(&c0, &c1, &c2), x);
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi_generator(1, 2).unwrap(), ThreePointElement::x());
        let expected = &ThreePointElement::y().mul_ring(&t()) + &ThreePointElement::z().mul_ring(&t_minus_one());
        assert_eq!(psi_generator(0, 3).unwrap(), expected);
        assert_eq!(psi_generator(2, 1).unwrap(), -ThreePointElement::x());
        assert_eq!(psi_generator(1, 1), Err(TetraError::BadGenerator(1, 1)));
    }

    #[test]
    fn tetra_relations_hold() {
        let report = verify_tetra_relations();
        assert_eq!(report.checks.len(), 12 + 24 + 24 + 4);
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn v_relations() {
        let (v0, v1, v2) = v_elements();
        assert_eq!(v1.bracket(&v2), -v0.clone());
        assert_eq!(v2.bracket(&v0), v1.mul_ring(&t()));
        assert_eq!(v0.bracket(&v1), -v2.mul_ring(&t_minus_one()));
    }

    #[test]
    fn v_bracket_values() {
        let e = |i| VElement::basis(i, 0);
        assert_eq!(v_bracket(&e(0), &e(1)), VElement::new(P::zero(), P::zero(), poly(&[1, -1])));
        assert_eq!(v_bracket(&e(1), &e(2)), VElement::new(poly(&[-1]), P::zero(), P::zero()));
        let a = VElement::new(poly(&[1, 2]), poly(&[0, 3]), poly(&[4]));
        assert!(v_bracket(&a, &a).is_zero());
    }

    #[test]
    fn to_v_values() {
        let (v0, _, _) = v_elements();
        assert_eq!(to_v(&v0.scale(&Rational::from(4))).unwrap(), VElement::new(poly(&[4]), P::zero(), P::zero()));
        let a0 = phi(&OnsagerElement::a(0));
        assert_eq!(to_v(&a0).unwrap(), VElement::new(P::zero(), poly(&[2]), poly(&[-2])));
        let (_, _, u2) = u_elements();
        assert!(matches!(to_v(&u2), Err(TetraError::NotInModule { coordinate: "v_2", .. })));
    }

    #[test]
    fn phi_values() {
        let (u0, u1, u2) = u_elements();
        let four = Rational::from(4);
        assert_eq!(phi(&OnsagerElement::g(1)), u0.mul_ring(&t_minus_one()).scale(&four));
        let a0 = OnsagerElement::a(0);
        let a1 = OnsagerElement::a(1);
        assert_eq!(phi(&(&a0 + &a1)), u1.scale(&four));
        assert_eq!(phi(&(&a0 - &a1)), u2.mul_ring(&t()).scale(&-four));
    }

    #[test]
    fn phi_inverse_round_trip() {
        let x = &OnsagerElement::a(-3) + &OnsagerElement::g(2).scale(&Rational::new(1, 3).unwrap());
        assert_eq!(phi_inverse(&phi(&x)).unwrap(), x);
        assert_eq!(phi_v(&x), to_v(&phi(&x)).unwrap());
    }

    #[test]
    fn independence_chain_values() {
        let report = independence_witness(3);
        assert!(report.independent());
        let (_, u1, u2) = u_elements();
        let first = &report.terms[0];
        assert_eq!(first.value, u1);
        let second = &report.terms[1];
        assert_eq!(second.value, -u2.mul_ring(&(&t() * &t_minus_one())));
    }
}
