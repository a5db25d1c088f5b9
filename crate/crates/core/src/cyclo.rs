//! `q`-cyclotomic cosets modulo `n` and the reciprocal pairing `i -> i'`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith;
use crate::error::Result;

/// Cosets of `x -> q x` on `Z/n`, indexed by their least element.
///
/// Cosets are listed in ascending order of representative; each coset lists
/// `i, iq, iq^2, ...` in generation order. The pairing sends the coset of `i`
/// to the coset of `-i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    n: u64,
    q: u64,
    reps: Vec<u64>,
    cosets: Vec<Vec<u64>>,
    /// Residue -> index into `reps`.
    coset_index: Vec<usize>,
    /// Index -> index of the paired coset.
    pairing: Vec<usize>,
    omega: Vec<u64>,
    delta: Vec<u64>,
}

pub fn coset_table(q: u64, n: u64) -> Result<CosetTable> {
    arith::require_coprime(n, q)?;
    let nn = n as usize;
    let step = q % n;
    let mut coset_index = vec![usize::MAX; nn];
    let mut reps = Vec::new();
    let mut cosets = Vec::new();
    for r in 0..nn {
        if coset_index[r] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        let mut coset = Vec::new();
        let mut x = r;
        while coset_index[x] == usize::MAX {
            coset_index[x] = idx;
            coset.push(x as u64);
            x = arith::mul_mod(x as u64, step, n) as usize;
        }
        reps.push(r as u64);
        cosets.push(coset);
    }
    let pairing: Vec<usize> = reps
        .iter()
        .map(|&r| coset_index[((n - r) % n) as usize])
        .collect();
    let (mut omega, mut delta) = (Vec::new(), Vec::new());
    for (idx, &r) in reps.iter().enumerate() {
        if pairing[idx] == idx {
            omega.push(r);
        } else {
            delta.push(r);
        }
    }
    Ok(CosetTable { n, q, reps, cosets, coset_index, pairing, omega, delta })
}

impl CosetTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The representative set `I`, ascending.
    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    /// Position of a representative in [`reps`](Self::reps).
    pub fn index_of_rep(&self, rep: u64) -> Option<usize> {
        self.reps.binary_search(&rep).ok()
    }

    /// Index of the coset containing `residue mod n`.
    pub fn index_of(&self, residue: u64) -> usize {
        self.coset_index[(residue % self.n) as usize]
    }

    /// `i'` as an index: the coset containing `-i`.
    pub fn partner_index(&self, idx: usize) -> usize {
        self.pairing[idx]
    }

    /// `i'` as a representative.
    pub fn partner(&self, rep: u64) -> u64 {
        self.reps[self.pairing[self.index_of(rep)]]
    }

    /// Self-paired representatives.
    pub fn omega(&self) -> &[u64] {
        &self.omega
    }

    /// Representatives whose partner is a different coset.
    pub fn delta(&self) -> &[u64] {
        &self.delta
    }

    /// Unordered pairs `{i, i'}` from `delta`, as index pairs with the smaller index first.
    pub fn delta_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter_map(|i| {
                let j = self.pairing[i];
                (i < j).then_some((i, j))
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Out<'a> {
            n: u64,
            q: u64,
            cosets: &'a [Vec<u64>],
            pairing: BTreeMap<u64, u64>,
            omega: &'a [u64],
            delta: &'a [u64],
        }
        let pairing = self
            .reps
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, self.reps[self.pairing[i]]))
            .collect();
        serde_json::to_value(Out {
            n: self.n,
            q: self.q,
            cosets: &self.cosets,
            pairing,
            omega: &self.omega,
            delta: &self.delta,
        })
        .expect("serializable")
    }
}

/// `sum_{d | n} phi(d) / ord_d(q)`.
pub fn irreducible_factor_count(q: u64, n: u64) -> Result<u64> {
    arith::require_coprime(n, q)?;
    Ok(arith::divisors(n)
        .into_iter()
        .map(|d| arith::euler_phi(d) / arith::mult_order(q, d))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    #[test]
    fn table_for_q2_n7() {
        let t = coset_table(2, 7).unwrap();
        assert_eq!(t.reps(), &[0, 1, 3]);
        assert_eq!(t.cosets(), &[vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
        assert_eq!(t.partner(1), 3);
        assert_eq!(t.partner(3), 1);
        assert_eq!(t.omega(), &[0]);
        assert_eq!(t.delta(), &[1, 3]);
    }

    #[test]
    fn table_for_q2_n15() {
        let t = coset_table(2, 15).unwrap();
        assert_eq!(t.reps(), &[0, 1, 3, 5, 7]);
        assert_eq!(t.partner(1), 7);
        assert_eq!(t.partner(3), 3);
        assert_eq!(t.partner(5), 5);
        assert_eq!(t.omega(), &[0, 3, 5]);
        assert_eq!(t.delta(), &[1, 7]);
    }

    #[test]
    fn trivial_length() {
        let t = coset_table(5, 1).unwrap();
        assert_eq!(t.reps(), &[0]);
        assert_eq!(t.omega(), &[0]);
        assert!(t.delta().is_empty());
        assert_eq!(irreducible_factor_count(5, 1).unwrap(), 1);
    }

    #[test]
    fn factor_counts() {
        assert_eq!(irreducible_factor_count(2, 15).unwrap(), 5);
        assert_eq!(irreducible_factor_count(3, 20).unwrap(), 7);
        let t = coset_table(3, 20).unwrap();
        assert_eq!(t.len(), 7);
        assert_eq!(t.cosets()[1], vec![1, 3, 9, 7]);
        assert_eq!(t.omega(), &[0, 2, 4, 5, 10]);
        assert_eq!(coset_table(2, 6), Err(Error::NotCoprime { n: 6, modulus: 2 }));
    }

    #[test]
    fn json_shape() {
        let v = coset_table(2, 7).unwrap().to_json();
        assert_eq!(
            v.to_string(),
            r#"{"n":7,"q":2,"cosets":[[0],[1,2,4],[3,6,5]],"pairing":{"0":0,"1":3,"3":1},"omega":[0],"delta":[1,3]}"#
        );
    }

    fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
        (prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]), 1u64..400)
            .prop_filter("coprime", |(q, n)| arith::gcd(*q, *n) == 1)
    }

    proptest! {
        #[test]
        fn table_invariants((q, n) in coprime_pair()) {
            let t = coset_table(q, n).unwrap();
            // partition
            let mut seen: Vec<u64> = t.cosets().iter().flatten().copied().collect();
            seen.sort_unstable();
            prop_assert_eq!(seen, (0..n).collect::<Vec<_>>());
            prop_assert_eq!(t.reps()[0], 0);
            prop_assert_eq!(&t.cosets()[0], &vec![0]);
            for (i, c) in t.cosets().iter().enumerate() {
                prop_assert_eq!(*c.iter().min().unwrap(), t.reps()[i]);
                let j = t.partner_index(i);
                prop_assert_eq!(t.partner_index(j), i);
                let mut neg: Vec<u64> = c.iter().map(|&x| (n - x) % n).collect();
                let mut other = t.cosets()[j].clone();
                neg.sort_unstable();
                other.sort_unstable();
                prop_assert_eq!(neg, other);
            }
            prop_assert_eq!(t.delta().len() % 2, 0);
            prop_assert_eq!(t.omega().len() + t.delta().len(), t.len());
            prop_assert_eq!(irreducible_factor_count(q, n).unwrap(), t.len() as u64);
        }
    }
}
