//! Exact rationals and Gaussian rationals.

use std::error::Error;

use onsager::scalar::{arith, ArithOp, Field, GaussianRational, Rational};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: Rational = "3/4".parse()?;
    let b = Rational::new(-5, 6)?;
    println!("{a} + ({b}) = {}", arith(&a, &b, ArithOp::Add)?);
    println!("{a} / ({b}) = {}", arith(&a, &b, ArithOp::Div)?);
    assert!(arith(&a, &Rational::zero(), ArithOp::Div).is_err());

    let z: GaussianRational = "1/2 + 3/2*i".parse()?;
    let inv = z.inverse().ok_or("nonzero")?;
    println!("{z}^-1 = {inv}");
    assert!((z.clone() * inv).is_one());
    println!("i^2 = {}", GaussianRational::i() * GaussianRational::i());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
