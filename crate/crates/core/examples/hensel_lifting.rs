//! Lift the factorization of X^7 - 1 from F_2 to Z_8, then rescale it to X^7 - r0.

use chainforge::factor::{factor_unity_field, factor_xn_minus_r0, hensel_lift};
use chainforge::poly::{CoeffRing, Poly};
use chainforge::ring::make_ring;

pub fn run_example() -> Result<String, chainforge::error::Error> {
    let z8 = make_ring("gr:2,3,1")?;
    let f2 = z8.residue_field();
    let hs = factor_unity_field(f2, 7)?;
    let gs = hensel_lift(&z8, &hs)?;
    let mut out = String::from("X^7 - 1 over F_2 and Z_8\n");
    for ((rep, h), (_, g)) in hs.iter().zip(&gs) {
        out += &format!("  rep {rep}: {}  ->  {}\n", f2.format_poly(h), z8.format_poly(g));
    }

    // r0 = 1 + 3*2 = 7
    let fact = factor_xn_minus_r0(&z8, 7, z8.from_int(3))?;
    out += &format!(
        "X^7 - {} with delta = {}\n",
        z8.format_elem(fact.r0()),
        z8.format_elem(fact.delta())
    );
    for e in fact.entries() {
        out += &format!("  f_{} = {}\n", e.rep, z8.format_poly(&e.f));
    }
    let product = Poly::product(&z8, fact.entries().iter().map(|e| &e.f));
    assert_eq!(product, Poly::binomial(&z8, 7, fact.r0()));
    assert_eq!(z8.mul(z8.pow(fact.delta(), 7), fact.r0()), z8.one());
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
