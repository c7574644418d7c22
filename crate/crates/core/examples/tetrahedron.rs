//! The tetrahedron algebra in the three-point loop algebra, the u- and
//! v-elements, and the embedding φ of the Onsager algebra.

use std::error::Error;

use onsager::onsager::OnsagerElement;
use onsager::tetrahedron::{
    independence_witness, phi, phi_inverse, phi_v, psi_generator, to_v, u_elements, verify_tetra_relations,
};

pub fn run() -> Result<(), Box<dyn Error>> {
    println!("psi(X_12) = {}", psi_generator(1, 2)?);
    println!("psi(X_03) = {}", psi_generator(0, 3)?);
    let report = verify_tetra_relations();
    println!("{} relation instances, all pass: {}", report.checks.len(), report.all_passed());

    let (u0, u1, _) = u_elements();
    println!("[u_0, u_1] = {}", to_v(&u0.bracket(&u1)).map_or("outside the v-module".into(), |v| v.to_string()));

    let g1 = OnsagerElement::g(1);
    println!("phi(G_1) = {}", phi_v(&g1));
    println!("phi(A_0 + A_1) = {}", phi_v(&(OnsagerElement::a(0) + OnsagerElement::a(1))));
    println!("phi(A_0 - A_1) = {}", phi_v(&(OnsagerElement::a(0) - OnsagerElement::a(1))));
    let x = OnsagerElement::a(-2) + OnsagerElement::g(3);
    assert_eq!(phi_inverse(&phi(&x))?, x);

    let w = independence_witness(4);
    for t in &w.terms {
        println!("ad_v0^{} ({}) = u_{} * ({})", t.m, t.start, t.u_index, t.coefficient);
    }
    println!("leading monomials distinct: {}", w.independent());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
