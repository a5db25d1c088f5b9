//! Closed forms for the number of self-reciprocal factors of X^n - 1, with their traces.

use chainforge::census::{coset_doubling_check, factor_power_of_two, omega_brute, omega_closed};

pub fn run_example() -> Result<String, chainforge::error::Error> {
    let mut out = String::new();
    for (q, n) in [(3, 20), (2, 15), (2, 33), (5, 8), (3, 8), (2, 35), (3, 1001)] {
        let closed = omega_closed(q, n)?;
        let brute = omega_brute(q, n)?;
        assert_eq!(closed.value, brute.value);
        out += &format!("q={q} n={n}: {}\n", serde_json::to_string(&closed).expect("serializable"));
    }

    let fact = factor_power_of_two(7, 4)?;
    out += "X^16 - 1 over F_7:\n";
    for h in &fact.factors {
        out += &format!("  {}\n", fact.field.format_poly(h));
    }
    out += &format!("  {} self-reciprocal\n", fact.self_reciprocal_count());

    let (s, doubled) = coset_doubling_check(3, 5)?;
    out += &format!("mod 5: {s} cosets under 3, {doubled} under 9\n");
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
