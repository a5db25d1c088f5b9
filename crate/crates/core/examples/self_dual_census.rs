//! List the self-dual cyclic codes of a few lengths and print a census sweep.

use std::sync::Arc;

use chainforge::census::{census, selfdual_count, selfdual_enumerate};
use chainforge::factor::lifted_factorization;
use chainforge::ring::make_ring;

pub fn run_example() -> Result<String, chainforge::error::Error> {
    let mut out = String::new();
    for (spec, n) in [("gr:2,2,1", 7), ("gr:2,2,1", 15), ("fqu:2,1,2", 7), ("gr:2,4,1", 21)] {
        let ring = make_ring(spec)?;
        let fact = Arc::new(lifted_factorization(&ring, n)?);
        let codes: Vec<_> = selfdual_enumerate(&fact)?.collect();
        out += &format!("{spec} n={n}: {} self-dual codes\n", codes.len());
        for c in codes.iter().take(5) {
            out += &format!("  {:?}\n", c.exponents());
        }
        assert_eq!(selfdual_count(ring.t(), ring.q(), n)?, codes.len().into());
    }
    for row in census(3, 2, 1, 20)? {
        out += &serde_json::to_string(&row).expect("serializable");
        out.push('\n');
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
