//! Ideals `I_P` of the loop realization, closedness and CRT lifting.

use std::error::Error;

use onsager::closed_ideals::{crt_lift, equiv_mod, is_closed, membership, ReciprocalIdeal};
use onsager::loop_algebra::{basis_b, basis_c, to_loop};
use onsager::onsager::OnsagerElement;
use onsager::poly::Polynomial;
use onsager::scalar::Rational;

fn poly(c: &[i64]) -> Polynomial<Rational> {
    Polynomial::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let catalog = [
        poly(&[-1, 1]),
        poly(&[1, 1]),
        poly(&[1, -2, 1]),
        poly(&[-1, 0, 1]),
        poly(&[1, 3, 1]),
        poly(&[1, 0, -2, 0, 1]),
    ];
    for p in catalog {
        let ideal = ReciprocalIdeal::new(p)?;
        println!("{ideal}: closed = {}", is_closed(&ideal));
    }

    let ideal = ReciprocalIdeal::new(poly(&[-1, 1]))?;
    let x = to_loop(&(OnsagerElement::a(1) - OnsagerElement::a(0)));
    println!("A_1 - A_0 in {ideal}: {}", membership(&ideal, &x).member);
    let v = membership(&ideal, &basis_b(0));
    for f in &v.failures {
        println!("b_0 not in {ideal}: {f}");
    }

    let i1 = ReciprocalIdeal::new(poly(&[1, 3, 1]))?;
    let i2 = ReciprocalIdeal::new(poly(&[1, -2, 1]))?;
    let (x1, x2) = (basis_b(2), basis_c(1));
    let lift = crt_lift(&[(x1.clone(), i1.clone()), (x2.clone(), i2.clone())])?;
    println!("crt lift = {lift}");
    assert!(equiv_mod(&i1, &lift, &x1) && equiv_mod(&i2, &lift, &x2));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
