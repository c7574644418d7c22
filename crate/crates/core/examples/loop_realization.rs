//! The loop realization: γ, ω, σ and τ.

use std::error::Error;

use onsager::lie::LieAlgebra;
use onsager::loop_algebra::{basis_b, basis_c, from_loop, to_loop, LoopElement};
use onsager::onsager::OnsagerElement;

pub fn run() -> Result<(), Box<dyn Error>> {
    let x = OnsagerElement::a(2) + OnsagerElement::g(1);
    let lx = to_loop(&x);
    println!("gamma({x}) = {lx}");
    assert_eq!(from_loop(&lx), x);
    println!("[b_1, b_0] = {}", basis_b(1).bracket(&basis_b(0)));
    println!("[c_2, b_1] = {}", basis_c(2).bracket(&basis_b(1)));

    let y = LoopElement::e(3).add(&LoopElement::h(-1));
    println!("omega({y}) = {}", y.chevalley());
    println!("sigma({y}) = {}", y.sigma());
    assert_eq!(y.chevalley().chevalley(), y);

    // τ carries σ-fixed elements to ω-fixed ones.
    let s = y.add(&y.sigma()).to_gaussian();
    let ts = s.tau();
    println!("tau({s}) = {ts}");
    assert_eq!(ts.chevalley(), ts);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
