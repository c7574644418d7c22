//! Brackets on the basis `A_m, G_l`, the Dolan–Grady relations and
//! rebuilding the basis from `A_0, A_1`.

use onsager::lie::{check_dolan_grady, jacobi_defect};
use onsager::onsager::{reconstruct_basis, OnsagerElement};

pub fn run() {
    let (a0, a1) = (OnsagerElement::a(0), OnsagerElement::a(1));
    println!("[A_1, A_0] = {}", a1.bracket(&a0));
    println!("[G_2, A_1] = {}", OnsagerElement::g(2).bracket(&a1));
    println!("jacobi(A_0, A_1, G_1) = {}", jacobi_defect(&a0, &a1, &OnsagerElement::g(1)));

    let dg = check_dolan_grady(&a0, &a1);
    println!("DG holds for (A_0, A_1): {}", dg.holds());
    let bad = check_dolan_grady(&OnsagerElement::g(1), &a0);
    println!("(G_1, A_0): first relation defect {}", bad.dg1_defect);

    for (sym, x) in reconstruct_basis(3) {
        assert_eq!(x, OnsagerElement::basis(sym));
    }
    println!("A_-3..A_3, G_1..G_3 rebuilt from A_0, A_1");
}

fn main() {
    run()
}
