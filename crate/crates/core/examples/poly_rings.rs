//! Polynomials, Laurent polynomials and the three-point ring.

use std::error::Error;

use onsager::poly::{crt_solve, is_reciprocal, multiplicity_at, poly_gcd, Laurent, Polynomial, ThreePointFraction};
use onsager::scalar::Rational;

fn poly(c: &[i64]) -> Polynomial<Rational> {
    Polynomial::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let p = poly(&[-1, 0, 1]); // t^2 - 1
    let q = poly(&[1, 2, 1]); // (t + 1)^2
    println!("gcd({p}, {q}) = {}", poly_gcd(&p, &q)?);
    println!("mult of 1 in {p}: {}", multiplicity_at(&p, &Rational::from(1))?);

    for r in [poly(&[1, 3, 1]), poly(&[-1, 0, 1]), poly(&[1, 1, 0, 1])] {
        println!("{r}: reciprocal sign {:?}", is_reciprocal(&r)?);
    }

    let moduli = [poly(&[1, 3, 1]), poly(&[1, -2, 1])];
    let x = crt_solve(&[poly(&[0, 1]), poly(&[2])], &moduli)?;
    println!("x = {x}, x mod {} = {}, x mod {} = {}", moduli[0], x.rem(&moduli[0])?, moduli[1], x.rem(&moduli[1])?);

    let l = Laurent::from_terms([(2, Rational::from(1)), (-1, Rational::from(3))]);
    println!("{l} at t -> t^-1: {}", l.substitute_inverse());

    let f = ThreePointFraction::t_double_prime();
    let one_minus_t = ThreePointFraction::one() - ThreePointFraction::t();
    println!("t'' = {f}, t''*(1 - t) = {}", &f * &one_minus_t);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
