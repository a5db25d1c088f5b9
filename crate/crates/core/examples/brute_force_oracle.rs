//! Cross-check the exponent-vector dual against an exhaustive annihilator computation.

use std::sync::Arc;

use chainforge::code::make_code;
use chainforge::factor::lifted_factorization;
use chainforge::oracle::{brute_dual, span, verify_instance};
use chainforge::ring::make_ring;

pub fn run_example() -> Result<String, chainforge::error::Error> {
    let z4 = make_ring("gr:2,2,1")?;
    let fact = Arc::new(lifted_factorization(&z4, 7)?);
    let c = make_code(&fact, &[1, 0, 2])?;
    let words = span(&c)?;
    let annihilator = brute_dual(&words)?;
    let mut out = format!("|C| = {}, |C^perp| by brute force = {}\n", words.len(), annihilator.len());
    assert_eq!(annihilator, span(&c.dual())?);
    out += "brute-force dual equals the exponent-vector dual\n";

    for (spec, n) in [("gr:2,2,1", 7), ("gr:2,3,1", 7), ("fqu:2,1,2", 3)] {
        for check in verify_instance(&make_ring(spec)?, n)? {
            let mark = if check.pass { "ok" } else { "FAIL" };
            out += &format!("{mark:>4} {:<22} {}: {}\n", check.check, check.instance, check.detail);
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
