//! Arithmetic in F_8 and in an extension of F_2 holding an element of order 7.

use chainforge::gf::{extension_with_nth_root, make_field, minimal_polynomial, star};
use chainforge::poly::CoeffRing;

pub fn run_example() -> Result<String, chainforge::error::Error> {
    let f8 = make_field(2, 3)?;
    let mut out = format!("F_8 = F_2[y]/({:?})\n", f8.modulus());
    let y = f8.parse_elem("(0 1 0)")?;
    for k in 0..8 {
        out += &format!("y^{k} = {}\n", f8.format_elem(f8.pow(y, k)));
    }

    let f2 = make_field(2, 1)?;
    let ext = extension_with_nth_root(&f2, 7)?;
    out += &format!("eta of order 7 lives in F_{}\n", ext.order());
    let m1 = minimal_polynomial(&ext, &[1, 2, 4])?;
    let m3 = minimal_polynomial(&ext, &[3, 6, 5])?;
    out += &format!("min poly of eta: {}\n", f2.format_poly(&m1));
    out += &format!("min poly of eta^3: {}\n", f2.format_poly(&m3));
    assert_eq!(star(&f2, &m1)?, m3);
    out += "the two are reciprocal to each other\n";
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
