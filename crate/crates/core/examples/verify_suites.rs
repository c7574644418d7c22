//! Exhaustive relation checks over index windows.

use onsager::suites::{verify_dg, verify_loop, verify_onsager, verify_tetra};

pub fn run() {
    for rep in [verify_onsager(3), verify_loop(4), verify_tetra(), verify_dg(4)] {
        println!("{rep}");
        assert!(rep.passed(), "{:?}", rep.failures);
    }
}

fn main() {
    run()
}
