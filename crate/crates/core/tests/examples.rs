#[allow(dead_code)]
#[path = "../examples/finite_fields.rs"]
mod finite_fields;
#[allow(dead_code)]
#[path = "../examples/cyclotomic_cosets.rs"]
mod cyclotomic_cosets;
#[allow(dead_code)]
#[path = "../examples/hensel_lifting.rs"]
mod hensel_lifting;
#[allow(dead_code)]
#[path = "../examples/cyclic_codes.rs"]
mod cyclic_codes;
#[allow(dead_code)]
#[path = "../examples/self_dual_census.rs"]
mod self_dual_census;
#[allow(dead_code)]
#[path = "../examples/omega_formulas.rs"]
mod omega_formulas;
#[allow(dead_code)]
#[path = "../examples/brute_force_oracle.rs"]
mod brute_force_oracle;

#[test]
fn finite_fields_runs() {
    let out = finite_fields::run_example().unwrap();
    assert!(out.contains("y^7 = (1 0 0)"));
}

#[test]
fn cyclotomic_cosets_runs() {
    let out = cyclotomic_cosets::run_example().unwrap();
    assert!(out.contains("self-paired [0, 2, 4, 5, 10], paired [1, 11]"));
}

#[test]
fn hensel_lifting_runs() {
    let out = hensel_lifting::run_example().unwrap();
    assert!(out.contains("X^7 - 7"));
}

#[test]
fn cyclic_codes_runs() {
    let out = cyclic_codes::run_example().unwrap();
    assert!(out.contains("k=[1, 1, 1] g=2 |C|=2^7"));
}

#[test]
fn self_dual_census_runs() {
    let out = self_dual_census::run_example().unwrap();
    assert!(out.contains("gr:2,4,1 n=21: 25 self-dual codes"));
}

#[test]
fn omega_formulas_runs() {
    let out = omega_formulas::run_example().unwrap();
    assert!(out.contains("5 self-reciprocal"));
}

#[test]
fn brute_force_oracle_runs() {
    let out = brute_force_oracle::run_example().unwrap();
    assert!(!out.contains("FAIL"));
}
