//! Cosets of multiplication by q modulo n, and how they pair up under i -> -i.

use chainforge::cyclo::{coset_table, irreducible_factor_count};

pub fn run_example() -> Result<String, chainforge::error::Error> {
    let mut out = String::new();
    for (q, n) in [(2, 7), (2, 15), (3, 20)] {
        let table = coset_table(q, n)?;
        out += &format!("q={q} n={n}: {} cosets\n", table.len());
        for (i, coset) in table.cosets().iter().enumerate() {
            let partner = table.reps()[table.partner_index(i)];
            out += &format!("  {:>2} {coset:?} pairs with {partner}\n", table.reps()[i]);
        }
        out += &format!("  self-paired {:?}, paired {:?}\n", table.omega(), table.delta());
        assert_eq!(irreducible_factor_count(q, n)?, table.len() as u64);
    }
    out += &format!("{}\n", coset_table(2, 7)?.to_json());
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
