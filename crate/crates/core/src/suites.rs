//! Relation-checking suites over bounded index windows. Each suite counts
//! the identities it checks and describes every one that fails.

use std::fmt;

use crate::lie::{check_dolan_grady, jacobi_defect, LieAlgebra};
use crate::loop_algebra::{basis_b, basis_c, from_loop, to_loop, FixedLoopElement};
use crate::onsager::{reconstruct_basis, BasisSymbol, OnsagerElement};
use crate::poly::ThreePointFraction;
use crate::scalar::Rational;
use crate::tetrahedron::{u_elements, verify_tetra_relations, VElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} checks passed", self.name, self.checks - self.failures.len(), self.checks)
    }
}

/// `A_m` for `|m| ≤ n` and `G_l` for `1 ≤ l ≤ n`.
pub fn onsager_window(n: i64) -> Vec<(BasisSymbol, OnsagerElement)> {
    let mut out: Vec<_> = (-n..=n).map(|m| (BasisSymbol::A(m), OnsagerElement::a(m))).collect();
    out.extend((1..=n).map(|l| (BasisSymbol::G(l), OnsagerElement::g(l))));
    out
}

/// Jacobi identity and antisymmetry on every basis triple of the window.
pub fn verify_onsager(window: i64) -> SuiteReport {
    let mut rep = SuiteReport::new("onsager");
    let basis = onsager_window(window);
    for (s, x) in &basis {
        for (t, y) in &basis {
            let sym = x.bracket(y) + y.bracket(x);
            rep.check(sym.is_zero(), || format!("[{s}, {t}] + [{t}, {s}] = {sym}"));
            for (u, z) in &basis {
                let d = jacobi_defect(x, y, z);
                rep.check(d.is_zero(), || format!("jacobi({s}, {t}, {u}) = {d}"));
            }
        }
    }
    rep
}

/// The loop relations for `0 ≤ l ≤ window`, `|m| ≤ window`, then γ as a
/// bracket homomorphism on basis pairs and the two round trips.
pub fn verify_loop(window: i64) -> SuiteReport {
    let mut rep = SuiteReport::new("loop");
    let two = Rational::from(2);
    for l in 0..=window {
        for m in -window..=window {
            let bb = basis_b(l).bracket(&basis_b(m));
            rep.check(bb == basis_c(l - m), || format!("[b_{l}, b_{m}] = {bb}"));
            let cb = basis_c(l).bracket(&basis_b(m));
            let want = FixedLoopElement::new(
                (basis_b(m + l).into_loop() - basis_b(m - l).into_loop()).scale(&two),
            )
            .expect("fixed");
            rep.check(cb == want, || format!("[c_{l}, b_{m}] = {cb}"));
            let cc = basis_c(l).bracket(&basis_c(m));
            rep.check(cc.is_zero(), || format!("[c_{l}, c_{m}] = {cc}"));
        }
    }
    let basis = onsager_window(window);
    for (s, x) in &basis {
        let back = from_loop(&to_loop(x));
        rep.check(&back == x, || format!("from_loop(to_loop({s})) = {back}"));
        for (t, y) in &basis {
            let lhs = to_loop(&x.bracket(y));
            let rhs = to_loop(x).bracket(&to_loop(y));
            rep.check(lhs == rhs, || format!("gamma([{s}, {t}]) = {lhs} but [gamma {s}, gamma {t}] = {rhs}"));
        }
    }
    for k in -window..=window {
        for el in [basis_b(k), basis_c(k)] {
            let back = to_loop(&from_loop(&el));
            rep.check(back == el, || format!("to_loop(from_loop({el})) = {back}"));
        }
    }
    rep
}

/// The tetrahedron relations under ψ, the u-relations and the v-relations.
pub fn verify_tetra() -> SuiteReport {
    let mut rep = SuiteReport::new("tetra");
    for c in verify_tetra_relations().checks {
        rep.check(c.passed, || format!("{} {:?}: defect {}", c.relation, c.indices, c.defect));
    }
    let (u0, u1, u2) = u_elements();
    let ui = [
        ("[u_0, u_1] = -u_2*t", u0.bracket(&u1), -u2.mul_ring(&ThreePointFraction::t())),
        ("[u_1, u_2] = -u_0*t'", u1.bracket(&u2), -u0.mul_ring(&ThreePointFraction::t_prime())),
        ("[u_2, u_0] = -u_1*t''", u2.bracket(&u0), -u1.mul_ring(&ThreePointFraction::t_double_prime())),
    ];
    for (name, got, want) in ui {
        rep.check(got == want, || format!("{name}: got {got}"));
    }
    let v = |i| VElement::basis(i, 0);
    let t = crate::poly::Polynomial::t();
    let t_minus_1 = &t - &crate::poly::Polynomial::one();
    let vi = [
        ("[v_0, v_1] = -v_2*(t - 1)", v(0).bracket(&v(1)), -v(2).mul_poly(&t_minus_1)),
        ("[v_1, v_2] = -v_0", v(1).bracket(&v(2)), -v(0)),
        ("[v_2, v_0] = v_1*t", v(2).bracket(&v(0)), v(1).mul_poly(&t)),
    ];
    for (name, got, want) in vi {
        rep.check(got == want, || format!("{name}: got {got}"));
    }
    rep
}

fn dg_check<L: LieAlgebra + fmt::Display>(rep: &mut SuiteReport, realization: &str, a: &L, b: &L) {
    let r = check_dolan_grady(a, b);
    rep.check(r.dg1_holds, || format!("{realization}: first relation defect {}", r.dg1_defect));
    rep.check(r.dg2_holds, || format!("{realization}: second relation defect {}", r.dg2_defect));
}

/// The Dolan–Grady relations for the images of `(A_0, A_1)` in the
/// Onsager, loop and v realizations, and basis reconstruction up to `window`.
pub fn verify_dg(window: i64) -> SuiteReport {
    let mut rep = SuiteReport::new("dg");
    let (a0, a1) = (OnsagerElement::a(0), OnsagerElement::a(1));
    dg_check(&mut rep, "onsager", &a0, &a1);
    dg_check(&mut rep, "loop", &to_loop(&a0), &to_loop(&a1));
    let two = Rational::from(2);
    let (v1, v2) = (VElement::basis(1, 0), VElement::basis(2, 0));
    dg_check(&mut rep, "v", &(&v1 - &v2).scale(&two), &(&v1 + &v2).scale(&two));
    let rebuilt = reconstruct_basis(window.max(1) as usize);
    for (s, x) in &rebuilt {
        let want = OnsagerElement::basis(*s);
        rep.check(x == &want, || format!("reconstructed {s} = {x}"));
    }
    rep
}
