//! The expression language shared by every realization.

use std::error::Error;

use onsager::cli::convert;
use onsager::expr::{evaluate, parse, Realization};

pub fn run() -> Result<(), Box<dyn Error>> {
    for src in ["[A_1, A_0]", "1/2*c_3 + b_-2", "[(t - t^-1)*h, e]", "[u_0, u_1]", "[v_2, v_0]", "t''*(1 - t)"] {
        let e = parse(src)?;
        println!("{e}  =>  {}", evaluate(src)?);
    }
    if let Err(e) = parse("[A_1, b_0]") {
        println!("[A_1, b_0]: {e}");
    }
    let a0 = evaluate("A_0")?;
    for r in [Realization::Loop, Realization::V, Realization::ThreePoint] {
        println!("A_0 as {r}: {}", convert(&a0, r)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
