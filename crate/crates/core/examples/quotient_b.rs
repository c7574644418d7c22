//! `B = O / O t(t-1)` is solvable but not nilpotent.

use onsager::elduque::{quotient_b, residual_name};

pub fn run() {
    let b = quotient_b();
    let dims = |s: &[onsager::linalg::Subspace<onsager::scalar::Rational>]| {
        s.iter().map(|x| x.dim()).collect::<Vec<_>>()
    };
    println!("derived series: {:?}", dims(&b.derived_series()));
    let lower = b.lower_central_series();
    println!("lower central series: {:?}", dims(&lower));
    for v in lower.last().unwrap().basis() {
        println!("  {}", residual_name(v));
    }
}

fn main() {
    run()
}
