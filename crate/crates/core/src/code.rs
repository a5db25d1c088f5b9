//! Cyclic codes of length `n` as exponent vectors over the factors `f_i` of `X^n - r0`.
//!
//! Every ideal of `R[X]/(X^n - 1)` is `<prod f_i^{k_i}>` for a unique `k: I -> [0, t]`,
//! so a code is stored as that vector and everything else is derived from it.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::LiftedFactorization;
use crate::poly::Poly;
use crate::ring::RingPoly;

#[derive(Clone, Debug)]
pub struct CyclicCode {
    fact: Arc<LiftedFactorization>,
    /// `k_i`, in ascending order of coset representative.
    exponents: Vec<u32>,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.exponents == other.exponents && same_ambient(&self.fact, &other.fact)
    }
}

impl Eq for CyclicCode {}

fn same_ambient(a: &Arc<LiftedFactorization>, b: &Arc<LiftedFactorization>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Builds the code `<prod f_i^{k_i}>` from exponents listed in representative order.
pub fn make_code(fact: &Arc<LiftedFactorization>, exponents: &[u32]) -> Result<CyclicCode> {
    let reps = fact.cosets().reps();
    if exponents.len() != reps.len() {
        return Err(Error::BadIndexSet { expected: reps.len(), got: exponents.len() });
    }
    let t = fact.ring().t();
    if let Some((&rep, &k)) = reps.iter().zip(exponents).find(|(_, &k)| k > t) {
        return Err(Error::ExponentOutOfRange { rep, k, t });
    }
    Ok(CyclicCode { fact: Arc::clone(fact), exponents: exponents.to_vec() })
}

/// Like [`make_code`], keyed by representative; the keys must be exactly `I`.
pub fn make_code_from_map(fact: &Arc<LiftedFactorization>, exponents: &BTreeMap<u64, u32>) -> Result<CyclicCode> {
    let reps = fact.cosets().reps();
    if exponents.len() != reps.len() || !reps.iter().all(|r| exponents.contains_key(r)) {
        return Err(Error::BadIndexSet { expected: reps.len(), got: exponents.len() });
    }
    make_code(fact, &exponents.values().copied().collect::<Vec<_>>())
}

impl CyclicCode {
    pub fn factorization(&self) -> &Arc<LiftedFactorization> {
        &self.fact
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent_map(&self) -> BTreeMap<u64, u32> {
        self.fact.cosets().reps().iter().copied().zip(self.exponents.iter().copied()).collect()
    }

    /// `prod f_i^{k_i}` reduced modulo `X^n - 1`.
    pub fn generator_poly(&self) -> RingPoly {
        let ring = self.fact.ring();
        let n = self.fact.n() as usize;
        self.fact
            .entries()
            .iter()
            .zip(&self.exponents)
            .fold(Poly::one(ring), |acc, (e, &k)| {
                acc.mul(ring, &e.f.pow(ring, k)).reduce_cyclic(ring, n)
            })
    }

    /// `log_q |C| = sum (t - k_i) deg f_i`.
    pub fn cardinality_log_q(&self) -> u64 {
        let t = self.fact.ring().t();
        self.fact
            .cosets()
            .cosets()
            .iter()
            .zip(&self.exponents)
            .map(|(c, &k)| u64::from(t - k) * c.len() as u64)
            .sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.fact.ring().q()).pow(self.cardinality_log_q() as u32)
    }

    /// The Euclidean dual; its exponent at rep `j` is `t - k_{j'}`.
    pub fn dual(&self) -> CyclicCode {
        let t = self.fact.ring().t();
        let cosets = self.fact.cosets();
        let exponents = (0..self.exponents.len())
            .map(|j| t - self.exponents[cosets.partner_index(j)])
            .collect();
        CyclicCode { fact: Arc::clone(&self.fact), exponents }
    }

    /// `k_i + k_{i'} = t` for every `i`.
    pub fn is_self_dual(&self) -> bool {
        self.pair_sums().all(|s| s == self.fact.ring().t())
    }

    /// `C` is contained in its dual, i.e. `k_i + k_{i'} >= t` for every `i`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.pair_sums().all(|s| s >= self.fact.ring().t())
    }

    fn pair_sums(&self) -> impl Iterator<Item = u32> + '_ {
        let cosets = self.fact.cosets();
        (0..self.exponents.len()).map(move |i| self.exponents[i] + self.exponents[cosets.partner_index(i)])
    }

    /// Whether `other` is a subcode of `self`.
    pub fn contains(&self, other: &CyclicCode) -> Result<bool> {
        if !same_ambient(&self.fact, &other.fact) {
            return Err(Error::MismatchedAmbient);
        }
        Ok(self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b))
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Out {
            ring: String,
            n: u64,
            exponents: BTreeMap<u64, u32>,
            cardinality_log_q: u64,
            self_dual: bool,
            dual_exponents: BTreeMap<u64, u32>,
            generator: String,
        }
        let ring = self.fact.ring();
        serde_json::to_value(Out {
            ring: ring.name(),
            n: self.fact.n(),
            exponents: self.exponent_map(),
            cardinality_log_q: self.cardinality_log_q(),
            self_dual: self.is_self_dual(),
            dual_exponents: self.dual().exponent_map(),
            generator: ring.format_poly(&self.generator_poly()),
        })
        .expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::lifted_factorization;
    use crate::ring::make_ring;
    use proptest::prelude::*;

    fn fact(spec: &str, n: u64) -> Arc<LiftedFactorization> {
        Arc::new(lifted_factorization(&make_ring(spec).unwrap(), n).unwrap())
    }

    #[test]
    fn z4_length_7() {
        let f = fact("gr:2,2,1", 7);
        let ring = f.ring().clone();
        let ambient = make_code(&f, &[0, 0, 0]).unwrap();
        assert_eq!(ambient.generator_poly(), Poly::one(&ring));
        assert_eq!(ambient.cardinality(), BigUint::from(4u32).pow(7));
        let zero = make_code(&f, &[2, 2, 2]).unwrap();
        assert!(zero.generator_poly().is_zero());
        assert_eq!(zero.cardinality(), BigUint::from(1u32));
        let two = make_code(&f, &[1, 1, 1]).unwrap();
        assert_eq!(two.generator_poly(), Poly::constant(&ring, ring.from_int(2)));
        assert_eq!(make_code(&f, &[0, 1, 0]).unwrap().cardinality_log_q(), 11);

        assert_eq!(ambient.dual(), zero);
        let sd = make_code(&f, &[1, 0, 2]).unwrap();
        assert_eq!(sd.dual(), sd);
        assert!(sd.is_self_dual() && two.is_self_dual() && !ambient.is_self_dual());
        assert!(two.contains(&make_code(&f, &[2, 1, 1]).unwrap()).unwrap());
        assert!(ambient.contains(&sd).unwrap() && sd.contains(&zero).unwrap());

        assert_eq!(make_code(&f, &[0, 3, 0]), Err(Error::ExponentOutOfRange { rep: 1, k: 3, t: 2 }));
        assert_eq!(make_code(&f, &[0, 0]), Err(Error::BadIndexSet { expected: 3, got: 2 }));
        let other = fact("gr:2,2,1", 3);
        let small = make_code(&other, &[0, 0]).unwrap();
        assert_eq!(ambient.contains(&small), Err(Error::MismatchedAmbient));
    }

    #[test]
    fn z4_length_15_witness() {
        let f = fact("gr:2,2,1", 15);
        let map = BTreeMap::from([(0, 1), (1, 0), (3, 1), (5, 1), (7, 2)]);
        let c = make_code_from_map(&f, &map).unwrap();
        assert!(c.is_self_dual());
        assert_eq!(c.dual().exponent_map(), map);
        let bad = BTreeMap::from([(0, 1), (1, 0), (2, 1), (5, 1), (7, 2)]);
        assert!(matches!(make_code_from_map(&f, &bad), Err(Error::BadIndexSet { .. })));
    }

    #[test]
    fn json_shape() {
        let f = fact("gr:2,2,1", 7);
        let v = make_code(&f, &[1, 0, 2]).unwrap().to_json();
        assert_eq!(v["exponents"].to_string(), r#"{"0":1,"1":0,"3":2}"#);
        assert_eq!(v["cardinality_log_q"], 7);
        assert_eq!(v["self_dual"], true);
    }

    fn exps(len: usize, t: u32) -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0..=t, len)
    }

    proptest! {
        #[test]
        fn duality_laws(k in exps(5, 3)) {
            // Z_8 with n = 15 has 5 cosets
            let f = fact("gr:2,3,1", 15);
            let c = make_code(&f, &k).unwrap();
            let d = c.dual();
            prop_assert_eq!(&d.dual(), &c);
            let total = BigUint::from(8u32).pow(15);
            prop_assert_eq!(c.cardinality() * d.cardinality(), total.clone());
            prop_assert_eq!(c.is_self_dual(), d == c);
            if c.is_self_orthogonal() {
                let sq = c.cardinality().pow(2);
                prop_assert!(sq <= total);
                prop_assert_eq!(sq == total, c.is_self_dual());
            }
            prop_assert_eq!(d.contains(&c).unwrap(), c.is_self_orthogonal());
        }
    }

    #[test]
    fn involution_exhaustive() {
        let f = fact("fqu:2,1,2", 15);
        let mut count = 0;
        for code in 0..3u32.pow(5) {
            let k: Vec<u32> = (0..5).map(|i| code / 3u32.pow(i) % 3).collect();
            let c = make_code(&f, &k).unwrap();
            assert_eq!(c.dual().dual(), c);
            count += c.is_self_dual() as u32;
        }
        assert_eq!(count, 3);
    }
}
