//! Codes of length 7 over Z_4 given by exponent vectors: generators, sizes and duals.

use std::sync::Arc;

use chainforge::code::make_code;
use chainforge::factor::lifted_factorization;
use chainforge::ring::make_ring;

pub fn run_example() -> Result<String, chainforge::error::Error> {
    let z4 = make_ring("gr:2,2,1")?;
    let fact = Arc::new(lifted_factorization(&z4, 7)?);
    let mut out = format!("representatives {:?}\n", fact.cosets().reps());
    for k in [[0, 0, 0], [1, 1, 1], [1, 0, 2], [0, 1, 0], [2, 2, 2]] {
        let c = make_code(&fact, &k)?;
        out += &format!(
            "k={k:?} g={} |C|=2^{} dual={:?} self-dual={}\n",
            z4.format_poly(&c.generator_poly()),
            c.cardinality_log_q(),
            c.dual().exponents(),
            c.is_self_dual()
        );
    }
    let big = make_code(&fact, &[1, 1, 1])?;
    let small = make_code(&fact, &[2, 1, 1])?;
    assert!(big.contains(&small)?);
    out += &format!("{}\n", big.to_json());
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
