//! Ideals of `O = v_0 k[t] + v_1 k[t] + v_2 k[t]` with `J = q k[t]`, and
//! which of them are closed.

use std::error::Error;

use onsager::elduque::{enumerate_ideals, ideal_contains, is_closed, z_closure};
use onsager::poly::Polynomial;
use onsager::scalar::Rational;
use onsager::tetrahedron::VElement;

pub fn run() -> Result<(), Box<dyn Error>> {
    let q = Polynomial::from_coeffs(vec![Rational::from(1), Rational::from(3), Rational::from(1)]);
    let en = enumerate_ideals(&q)?;
    for spec in &en.flag_specs {
        if is_closed(spec) {
            println!("{spec}: closed, family ({})", spec.closed_family().unwrap_or("?"));
        } else {
            println!("{spec}: Z(I) adds {}", z_closure(spec).added_names().join(", "));
        }
    }
    let eta = en.eta_family.instance(Rational::new(2, 3)?)?;
    println!("{eta}: closed = {}", is_closed(&eta));

    let spec = &en.flag_specs[0];
    let big = VElement::basis(0, 1).mul_poly(&(&q * &Polynomial::from_coeffs(vec![Rational::from(-1), Rational::from(1)])));
    println!("{big} in {spec}: {}", ideal_contains(spec, &big));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
