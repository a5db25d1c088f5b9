//! Brute-force ground truth for tiny instances: explicit codeword sets, annihilators
//! under the Euclidean inner product, and a battery of consistency checks.
//!
//! A word of `R^n` is packed into a `u64` as `sum_j c_j |R|^j`, where `c_j` is the
//! element code of coordinate `j`.

use std::sync::Arc;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::{nontrivial_exists, selfdual_count, selfdual_enumerate};
use crate::code::{make_code, CyclicCode};
use crate::error::{Error, Result};
use crate::factor::{bezout_certificate, lifted_factorization, LiftedFactorization};
use crate::poly::CoeffRing;
use crate::ring::{RingElem, RingSpec};

/// Default cap on `|R|^n`.
pub const DEFAULT_BOUND: u64 = 1 << 22;
/// Environment variable overriding [`DEFAULT_BOUND`].
pub const BOUND_VAR: &str = "CHAINFORGE_MAX_ORACLE";
/// Seed for sampled exponent vectors.
pub const SAMPLE_SEED: u64 = 0x5eed_c0de;
/// Exhaustive dual checks up to this many exponent vectors, otherwise sample this many.
pub const EXHAUSTIVE_LIMIT: u64 = 512;
pub const SAMPLES: usize = 100;

pub fn oracle_bound() -> u64 {
    std::env::var(BOUND_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BOUND)
}

/// Ring arithmetic on element codes, tabulated for small rings.
struct Arith {
    ring: RingSpec,
    size: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Arith {
    fn new(ring: &RingSpec) -> Self {
        let size = ring.size();
        let (mut add, mut mul) = (Vec::new(), Vec::new());
        if size <= 256 {
            for a in ring.elements() {
                for b in ring.elements() {
                    add.push(ring.add(a, b).code() as u16);
                    mul.push(ring.mul(a, b).code() as u16);
                }
            }
        }
        Arith { ring: ring.clone(), size, add, mul }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.add.is_empty() {
            self.ring.add(RingElem(a), RingElem(b)).code()
        } else {
            u64::from(self.add[(a * self.size + b) as usize])
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if self.mul.is_empty() {
            self.ring.mul(RingElem(a), RingElem(b)).code()
        } else {
            u64::from(self.mul[(a * self.size + b) as usize])
        }
    }
}

/// `R^n` packed as integers, with the arithmetic needed to add words.
struct Ambient {
    arith: Arith,
    n: usize,
    total: u64,
}

impl Ambient {
    fn new(ring: &RingSpec, n: usize) -> Result<Self> {
        let bound = oracle_bound();
        let size = ring.size() as u128;
        let total = size.checked_pow(n as u32).filter(|&v| v <= bound as u128);
        let total = total.ok_or(Error::BoundExceeded {
            size: size.saturating_pow(n as u32),
            bound,
        })? as u64;
        Ok(Ambient { arith: Arith::new(ring), n, total })
    }

    fn digits(&self, mut w: u64) -> Vec<u64> {
        let r = self.arith.size;
        (0..self.n)
            .map(|_| {
                let d = w % r;
                w /= r;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.arith.size + d)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let r = self.arith.size;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += self.arith.add(a % r, b % r) * place;
            a /= r;
            b /= r;
            place *= r;
        }
        out
    }

    fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.arith.add(acc, self.arith.mul(x, y)))
    }
}

/// Additive subgroup of `R^n` grown one generator at a time.
struct Closure<'a> {
    amb: &'a Ambient,
    seen: Vec<u64>,
    elems: Vec<u64>,
    gens: Vec<u64>,
}

impl<'a> Closure<'a> {
    fn new(amb: &'a Ambient) -> Self {
        let mut seen = vec![0u64; (amb.total as usize).div_ceil(64)];
        seen[0] = 1;
        Closure { amb, seen, elems: vec![0], gens: Vec::new() }
    }

    fn contains(&self, w: u64) -> bool {
        self.seen[(w / 64) as usize] >> (w % 64) & 1 == 1
    }

    fn insert(&mut self, w: u64) {
        self.seen[(w / 64) as usize] |= 1 << (w % 64);
        self.elems.push(w);
    }

    /// `H <- H + <v>`, adding cosets `H + kv` until `kv` falls back into `H`.
    fn extend(&mut self, v: u64) {
        if self.contains(v) {
            return;
        }
        self.gens.push(v);
        let base = self.elems.len();
        let mut shift = v;
        while !self.contains(shift) {
            for i in 0..base {
                let w = self.amb.add(self.elems[i], shift);
                self.insert(w);
            }
            shift = self.amb.add(shift, v);
        }
    }

    fn finish(self, ring: &RingSpec) -> CodewordSet {
        let mut words = self.elems;
        words.sort_unstable();
        CodewordSet { ring: ring.clone(), n: self.amb.n, words, gens: self.gens }
    }
}

/// An explicit set of codewords together with additive generators.
#[derive(Clone, Debug)]
pub struct CodewordSet {
    ring: RingSpec,
    n: usize,
    words: Vec<u64>,
    gens: Vec<u64>,
}

impl PartialEq for CodewordSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.words == other.words
    }
}

impl Eq for CodewordSet {}

impl CodewordSet {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Packed words, ascending.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Additive generators; each one enlarged the group when it was added.
    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn contains(&self, word: &[RingElem]) -> bool {
        let r = self.ring.size();
        let w = word.iter().rev().fold(0, |acc, x| acc * r + x.code());
        self.words.binary_search(&w).is_ok()
    }

    /// Every generator is orthogonal to every generator, itself included.
    pub fn is_self_orthogonal(&self) -> Result<bool> {
        let amb = Ambient::new(&self.ring, self.n)?;
        let gens: Vec<Vec<u64>> = self.gens.iter().map(|&g| amb.digits(g)).collect();
        Ok(gens.iter().enumerate().all(|(i, a)| gens[i..].iter().all(|b| amb.dot(a, b) == 0)))
    }
}

/// The `R`-span of the cyclic shifts of the generator polynomial of `c`.
pub fn span(c: &CyclicCode) -> Result<CodewordSet> {
    let fact = c.factorization();
    let ring = fact.ring();
    let n = fact.n() as usize;
    let amb = Ambient::new(ring, n)?;
    let g = c.generator_poly();
    let coeffs: Vec<u64> = (0..n).map(|j| g.coeff(ring, j).code()).collect();
    let mut closure = Closure::new(&amb);
    for b in ring.additive_generators() {
        let scaled: Vec<u64> = coeffs.iter().map(|&x| amb.arith.mul(b.code(), x)).collect();
        for shift in 0..n {
            let word: Vec<u64> = (0..n).map(|j| scaled[(j + n - shift) % n]).collect();
            closure.extend(amb.pack(&word));
        }
    }
    Ok(closure.finish(ring))
}

/// All `u` with `u . v = 0` for every `v` in `s`, by exhaustive scan of `R^n`.
pub fn brute_dual(s: &CodewordSet) -> Result<CodewordSet> {
    let amb = Ambient::new(&s.ring, s.n)?;
    let gens: Vec<Vec<u64>> = s.gens.iter().map(|&g| amb.digits(g)).collect();
    let r = amb.arith.size;
    // contrib[j][x][i] = x * gens[i][j]
    let contrib: Vec<Vec<Vec<u64>>> = (0..amb.n)
        .map(|j| (0..r).map(|x| gens.iter().map(|g| amb.arith.mul(x, g[j])).collect()).collect())
        .collect();
    let mut found = Vec::new();
    let mut partial = vec![vec![0u64; gens.len()]; amb.n + 1];
    scan(&amb, &contrib, amb.n, 0, &mut partial, &mut found);
    let mut closure = Closure::new(&amb);
    for &w in &found {
        closure.extend(w);
    }
    let out = closure.finish(&s.ring);
    if out.words != found {
        return Err(Error::IdentityFailed("annihilator is not closed under addition".into()));
    }
    Ok(out)
}

/// Depth-first over coordinates `n-1, ..., 0` so words come out in increasing order.
fn scan(amb: &Ambient, contrib: &[Vec<Vec<u64>>], level: usize, prefix: u64, partial: &mut [Vec<u64>], out: &mut Vec<u64>) {
    if level == 0 {
        if partial[0].iter().all(|&x| x == 0) {
            out.push(prefix);
        }
        return;
    }
    let j = level - 1;
    for x in 0..amb.arith.size {
        let (lower, upper) = partial.split_at_mut(level);
        for (i, slot) in lower[j].iter_mut().enumerate() {
            *slot = amb.arith.add(upper[0][i], contrib[j][x as usize][i]);
        }
        scan(amb, contrib, j, prefix * amb.arith.size + x, partial, out);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    pub detail: String,
}

/// Exponent vectors to test: all of them when few enough, else a seeded sample.
pub fn exponent_vectors(len: usize, t: u32) -> (Vec<Vec<u32>>, bool) {
    let base = u64::from(t) + 1;
    let total = base.checked_pow(len as u32);
    match total {
        Some(total) if total <= EXHAUSTIVE_LIMIT => {
            let all = (0..total)
                .map(|mut code| {
                    (0..len)
                        .map(|_| {
                            let k = (code % base) as u32;
                            code /= base;
                            k
                        })
                        .collect()
                })
                .collect();
            (all, true)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let sample = (0..SAMPLES).map(|_| (0..len).map(|_| rng.gen_range(0..=t)).collect()).collect();
            (sample, false)
        }
    }
}

/// Runs every check on `(ring, n)`; failures become report entries.
pub fn verify_instance(ring: &RingSpec, n: u64) -> Result<Vec<CheckResult>> {
    let instance = format!("{} n={n}", ring.name());
    let mut report = Vec::new();
    let mut push = |check: &str, outcome: std::result::Result<String, String>| {
        let (pass, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        report.push(CheckResult { check: check.into(), instance: instance.clone(), pass, detail });
    };

    let fact = Arc::new(lifted_factorization(ring, n)?);
    push("factor_identities", check_factorization(&fact));
    push("bezout_certificates", check_bezout(&fact));
    push("dual_oracle", check_duals(&fact));
    if ring.t() % 2 == 0 {
        push("selfdual_census", check_census(&fact));
    } else {
        push("odd_t_no_selfdual", check_odd_t(&fact));
    }
    let supplied = (ring.t() % 2 == 0).then_some(ring);
    push(
        "nontrivial_conditions",
        nontrivial_exists(ring.q(), n, supplied)
            .map(|r| format!("all conditions agree: {}", r.value))
            .map_err(|e| e.to_string()),
    );
    Ok(report)
}

fn check_factorization(fact: &LiftedFactorization) -> std::result::Result<String, String> {
    fact.check_invariants().map_err(|e| e.to_string())?;
    Ok(format!(
        "{} factors; prod g_i = X^n - 1, prod f_i = X^n - {}, residues match",
        fact.len(),
        fact.ring().format_elem(fact.r0())
    ))
}

fn check_bezout(fact: &LiftedFactorization) -> std::result::Result<String, String> {
    let es = fact.entries();
    let ring = fact.ring();
    let mut pairs = 0;
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            for (a, b) in [(&es[i].g, &es[j].g), (&es[i].f, &es[j].f)] {
                bezout_certificate(ring, a, b)
                    .ok_or_else(|| format!("no certificate for reps {} and {}", es[i].rep, es[j].rep))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs coprime in R[X]"))
}

fn check_duals(fact: &Arc<LiftedFactorization>) -> std::result::Result<String, String> {
    let ring = fact.ring();
    let total = BigUint::from(ring.size()).pow(fact.n() as u32);
    let (vectors, exhaustive) = exponent_vectors(fact.len(), ring.t());
    for k in &vectors {
        let c = make_code(fact, k).map_err(|e| e.to_string())?;
        let d = c.dual();
        if c.cardinality() * d.cardinality() != total {
            return Err(format!("|C||C^perp| != |R|^n at k={k:?}"));
        }
        let s = span(&c).map_err(|e| e.to_string())?;
        if BigUint::from(s.len()) != c.cardinality() {
            return Err(format!("|span| = {} but cardinality {} at k={k:?}", s.len(), c.cardinality()));
        }
        let bd = brute_dual(&s).map_err(|e| e.to_string())?;
        if span(&d).map_err(|e| e.to_string())? != bd {
            return Err(format!("span(dual) != brute dual at k={k:?}"));
        }
    }
    let how = if exhaustive { "exhaustive" } else { "seeded sample" };
    Ok(format!("{} exponent vectors ({how})", vectors.len()))
}

/// Oracle self-duality: orthogonal generators and `|C|^2 = |R|^n`.
fn oracle_self_dual(c: &CyclicCode, total: &BigUint) -> Result<bool> {
    let s = span(c)?;
    Ok(BigUint::from(s.len()).pow(2) == *total && s.is_self_orthogonal()?)
}

fn check_census(fact: &Arc<LiftedFactorization>) -> std::result::Result<String, String> {
    let ring = fact.ring();
    let expected = selfdual_count(ring.t(), ring.q(), fact.n()).map_err(|e| e.to_string())?;
    let codes: Vec<CyclicCode> = selfdual_enumerate(fact).map_err(|e| e.to_string())?.collect();
    if BigUint::from(codes.len()) != expected {
        return Err(format!("enumerated {} codes, formula gives {expected}", codes.len()));
    }
    let mut seen: Vec<&[u32]> = codes.iter().map(|c| c.exponents()).collect();
    seen.sort();
    seen.dedup();
    if seen.len() != codes.len() {
        return Err("duplicate codes in enumeration".into());
    }
    let total = BigUint::from(ring.size()).pow(fact.n() as u32);
    for c in &codes {
        if !c.is_self_dual() || !oracle_self_dual(c, &total).map_err(|e| e.to_string())? {
            return Err(format!("code {:?} is not self-dual", c.exponents()));
        }
    }
    let (vectors, exhaustive) = exponent_vectors(fact.len(), ring.t());
    if exhaustive {
        let mut count = 0u32;
        for k in &vectors {
            let c = make_code(fact, k).map_err(|e| e.to_string())?;
            if oracle_self_dual(&c, &total).map_err(|e| e.to_string())? {
                count += 1;
            }
        }
        if BigUint::from(count) != expected {
            return Err(format!("exhaustive oracle scan finds {count} self-dual codes, formula gives {expected}"));
        }
    }
    Ok(format!("census = {expected}"))
}

fn check_odd_t(fact: &Arc<LiftedFactorization>) -> std::result::Result<String, String> {
    let ring = fact.ring();
    let base = u64::from(ring.t()) + 1;
    let count = base.pow(fact.len() as u32);
    let total = BigUint::from(ring.size()).pow(fact.n() as u32);
    let mut found = 0;
    for mut code in 0..count {
        let k: Vec<u32> = (0..fact.len())
            .map(|_| {
                let x = (code % base) as u32;
                code /= base;
                x
            })
            .collect();
        let c = make_code(fact, &k).map_err(|e| e.to_string())?;
        if c.is_self_dual() || oracle_self_dual(&c, &total).map_err(|e| e.to_string())? {
            found += 1;
        }
    }
    if found > 0 {
        return Err(format!("{found} self-dual codes at odd t"));
    }
    Ok(format!("0 self-dual codes among {count} exponent vectors"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_ring;

    fn fact(spec: &str, n: u64) -> Arc<LiftedFactorization> {
        Arc::new(lifted_factorization(&make_ring(spec).unwrap(), n).unwrap())
    }

    #[test]
    fn span_examples() {
        let f = fact("gr:2,2,1", 7);
        let zero = span(&make_code(&f, &[2, 2, 2]).unwrap()).unwrap();
        assert_eq!(zero.words(), &[0]);
        assert_eq!(brute_dual(&zero).unwrap().len(), 1 << 14);
        let ambient = span(&make_code(&f, &[0, 0, 0]).unwrap()).unwrap();
        assert_eq!(ambient.len(), 1 << 14);
        let two = span(&make_code(&f, &[1, 1, 1]).unwrap()).unwrap();
        assert_eq!(two.len(), 1 << 7);
        let ring = f.ring();
        let r2 = ring.from_int(2);
        assert!(two.contains(&[r2, RingElem(0), r2, r2, RingElem(0), RingElem(0), r2]));
        assert!(!two.contains(&[ring.one(); 7]));
        assert!(two.is_self_orthogonal().unwrap());
    }

    #[test]
    fn dual_example_and_double_annihilator() {
        let f = fact("gr:2,2,1", 7);
        let c = make_code(&f, &[1, 0, 2]).unwrap();
        let s = span(&c).unwrap();
        let bd = brute_dual(&s).unwrap();
        assert_eq!(bd, span(&c.dual()).unwrap());
        assert_eq!(brute_dual(&bd).unwrap(), s);
        let c = make_code(&f, &[0, 1, 2]).unwrap();
        let s = span(&c).unwrap();
        assert_eq!(s.len() * brute_dual(&s).unwrap().len(), 1 << 14);
    }

    #[test]
    fn bound_is_enforced() {
        let f = fact("gr:2,2,1", 15);
        let err = span(&make_code(&f, &[0; 5]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { size, bound: DEFAULT_BOUND } if size == 1 << 30));
    }

    #[test]
    fn sampled_vectors_are_reproducible() {
        let (a, ex) = exponent_vectors(10, 2);
        assert!(!ex);
        assert_eq!(a.len(), SAMPLES);
        assert_eq!(a, exponent_vectors(10, 2).0);
        assert_eq!(exponent_vectors(3, 2).0.len(), 27);
    }

    #[test]
    fn verify_examples() {
        for (spec, n, key, detail) in [
            ("gr:2,2,1", 7, "selfdual_census", "census = 3"),
            ("gr:2,3,1", 7, "odd_t_no_selfdual", "0 self-dual codes among 64 exponent vectors"),
            ("fqu:2,1,2", 3, "selfdual_census", "census = 1"),
        ] {
            let report = verify_instance(&make_ring(spec).unwrap(), n).unwrap();
            assert!(report.iter().all(|r| r.pass), "{report:?}");
            let entry = report.iter().find(|r| r.check == key).unwrap();
            assert_eq!(entry.detail, detail);
        }
        let report = verify_instance(&make_ring("fqu:2,1,2").unwrap(), 3).unwrap();
        let entry = report.iter().find(|r| r.check == "nontrivial_conditions").unwrap();
        assert_eq!(entry.detail, "all conditions agree: false");
    }
}
