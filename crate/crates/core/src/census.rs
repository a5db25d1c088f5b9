//! Self-dual censuses, the nontriviality conditions, and closed forms for the number
//! `|Omega_n|` of self-reciprocal irreducible factors of `X^n - 1` over `F_q`.

use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith;
use crate::code::{make_code, CyclicCode};
use crate::cyclo::{coset_table, irreducible_factor_count};
use crate::error::{Error, Result};
use crate::factor::{lifted_factorization, split_unity_field, LiftedFactorization};
use crate::gf::{self, field_of_order, FieldElem, FieldPoly, FieldSpec};
use crate::poly::{CoeffRing, Poly};
use crate::ring::{self, RingSpec};

/// Self-dual codes exist over `R` exactly when the nilpotency index is even.
pub fn selfdual_exists(ring: &RingSpec) -> bool {
    ring.t() % 2 == 0
}

/// `(t + 1)^{|Delta_n| / 2}` for even `t`, zero otherwise.
pub fn selfdual_count(t: u32, q: u64, n: u64) -> Result<BigUint> {
    let table = coset_table(q, n)?;
    if t % 2 == 1 {
        return Ok(BigUint::from(0u32));
    }
    Ok(BigUint::from(t + 1).pow(table.delta().len() as u32 / 2))
}

/// Every self-dual code, in lexicographic order of exponent vectors.
///
/// Self-paired reps get `t/2`; each pair `{i, i'}` with `i < i'` runs `k_i` over `0..=t`
/// with `k_{i'} = t - k_i`.
pub fn selfdual_enumerate(fact: &Arc<LiftedFactorization>) -> Result<SelfDualCodes> {
    let t = fact.ring().t();
    if t % 2 == 1 {
        return Err(Error::OddNilpotency(t));
    }
    let pairs = fact.cosets().delta_pairs();
    let mut base = vec![t / 2; fact.cosets().len()];
    for &(i, j) in &pairs {
        base[i] = 0;
        base[j] = t;
    }
    Ok(SelfDualCodes { fact: Arc::clone(fact), pairs, current: Some(base) })
}

/// Iterator returned by [`selfdual_enumerate`].
pub struct SelfDualCodes {
    fact: Arc<LiftedFactorization>,
    pairs: Vec<(usize, usize)>,
    current: Option<Vec<u32>>,
}

impl Iterator for SelfDualCodes {
    type Item = CyclicCode;

    fn next(&mut self) -> Option<CyclicCode> {
        let k = self.current.take()?;
        let code = make_code(&self.fact, &k).expect("exponents in range");
        let t = self.fact.ring().t();
        let mut next = k;
        // odometer, last pair fastest
        for &(i, j) in self.pairs.iter().rev() {
            if next[i] < t {
                next[i] += 1;
                next[j] -= 1;
                self.current = Some(next);
                break;
            }
            next[i] = 0;
            next[j] = t;
        }
        Some(code)
    }
}

/// The conditions that are each equivalent to the existence of a nontrivial self-dual code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NontrivialReport {
    pub q: u64,
    pub n: u64,
    /// `Delta_n` is nonempty.
    pub delta_nonempty: bool,
    /// No `i` in `1..=ord_n(q)` has `q^i = -1 (mod n)`.
    pub no_negative_power: bool,
    /// Some irreducible factor `h` of `X^n - 1` over `F_q` has `h != h*`.
    pub asymmetric_field_factor: bool,
    /// Some lifted factor `g` has `g != g*`; only evaluated when a ring is supplied.
    pub asymmetric_ring_factor: Option<bool>,
    pub value: bool,
}

/// Evaluates every condition independently and fails with `ConditionMismatch` if any disagree.
///
/// The field factors come from [`split_unity_field`], so they do not depend on the coset
/// pairing used for the first condition.
pub fn nontrivial_exists(q: u64, n: u64, ring: Option<&RingSpec>) -> Result<NontrivialReport> {
    let table = coset_table(q, n)?;
    let delta_nonempty = !table.delta().is_empty();

    let ord = arith::mult_order(q, n);
    let minus_one = (n - 1) % n;
    let mut x = 1;
    let mut no_negative_power = true;
    for _ in 0..ord {
        x = arith::mul_mod(x, q % n, n);
        if x == minus_one {
            no_negative_power = false;
            break;
        }
    }

    let field = field_of_order(q)?;
    let mut asymmetric_field_factor = false;
    for h in split_unity_field(&field, n)? {
        if gf::star(&field, &h)? != h {
            asymmetric_field_factor = true;
            break;
        }
    }

    let asymmetric_ring_factor = match ring {
        None => None,
        Some(r) => {
            if r.q() != q || r.t() % 2 == 1 {
                return Err(Error::HypothesisViolated(format!(
                    "ring {} must have residue field F_{q} and even nilpotency index",
                    r.name()
                )));
            }
            let fact = lifted_factorization(r, n)?;
            let mut found = false;
            for e in fact.entries() {
                if ring::star(r, &e.g)? != e.g {
                    found = true;
                    break;
                }
            }
            Some(found)
        }
    };

    let value = delta_nonempty;
    let all = [Some(no_negative_power), Some(asymmetric_field_factor), asymmetric_ring_factor];
    if all.iter().flatten().any(|&c| c != value) {
        return Err(Error::ConditionMismatch(format!(
            "q={q} n={n}: (ii)={delta_nonempty} (iii)={no_negative_power} (iv)={asymmetric_field_factor} (v)={asymmetric_ring_factor:?}"
        )));
    }
    Ok(NontrivialReport {
        q,
        n,
        delta_nonempty,
        no_negative_power,
        asymmetric_field_factor,
        asymmetric_ring_factor,
        value,
    })
}

/// Which explicit description of `X^{2^m} - 1` applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerOfTwoCase {
    /// `q = 1 (mod 4)`, `q - 1 = 2^v c`; `eta` has order `2^v`.
    OneModFour { v: u32, eta: FieldElem },
    /// `q = 3 (mod 4)`, `2^a || q + 1`; `h_sets[i - 1]` is `H_i`.
    ThreeModFour { a: u32, h_sets: Vec<Vec<FieldElem>> },
}

#[derive(Clone, Debug)]
pub struct PowerOfTwoFactorization {
    pub field: FieldSpec,
    pub m: u32,
    pub case: PowerOfTwoCase,
    pub factors: Vec<FieldPoly>,
}

impl PowerOfTwoFactorization {
    pub fn self_reciprocal_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| gf::star(&self.field, f).as_ref() == Ok(f))
            .count()
    }
}

/// The explicit irreducible factorization of `X^{2^m} - 1` over `F_q`, `q` odd.
///
/// The product and the irreducibility of every factor are checked before returning.
pub fn factor_power_of_two(q: u64, m: u32) -> Result<PowerOfTwoFactorization> {
    if q % 2 == 0 {
        return Err(Error::EvenQ(q));
    }
    let field = field_of_order(q)?;
    let f = &field;
    let x_minus = |c: FieldElem| Poly::from_coeffs(f, vec![f.neg(c), f.one()]);
    let (case, factors) = if q % 4 == 1 {
        let v = arith::two_adic(q - 1);
        let eta = root_of_unity_2power(f, v);
        let mut factors = Vec::new();
        if m <= v {
            let delta = f.pow(eta, 1 << (v - m));
            for k in 0..(1u64 << m) {
                factors.push(x_minus(f.pow(delta, k)));
            }
        } else {
            for k in 0..(1u64 << v) {
                factors.push(x_minus(f.pow(eta, k)));
            }
            for j in 1..=(m - v) {
                for i in (1..(1u64 << v)).step_by(2) {
                    factors.push(Poly::binomial(f, 1 << j, f.pow(eta, i)));
                }
            }
        }
        (PowerOfTwoCase::OneModFour { v, eta }, factors)
    } else {
        let a = arith::two_adic(q + 1);
        let half = f.inv(f.from_int(2)).expect("q odd");
        let e = (q + 1) / 4;
        let step = |h: FieldElem, shift: i64| {
            let r = f.pow(f.mul(f.add(h, f.from_int(shift)), half), e);
            [r, f.neg(r)]
        };
        let mut h_sets: Vec<Vec<FieldElem>> = vec![vec![f.zero()]];
        for i in 2..=a {
            let shift = if i == a { -1 } else { 1 };
            let mut next: Vec<FieldElem> = h_sets[i as usize - 2].iter().flat_map(|&h| step(h, shift)).collect();
            next.sort();
            next.dedup();
            if next.len() != 1 << (i - 1) {
                return Err(Error::IdentityFailed(format!("|H_{i}| = {} over F_{q}", next.len())));
            }
            h_sets.push(next);
        }
        let quadratic = |h: FieldElem| {
            Poly::from_coeffs(f, vec![f.one(), f.neg(f.mul(f.from_int(2), h)), f.one()])
        };
        let mut factors = vec![x_minus(f.one())];
        if m >= 1 {
            factors.push(x_minus(f.neg(f.one())));
            let top = if m <= a { m - 1 } else { a - 1 };
            for set in &h_sets[..top as usize] {
                factors.extend(set.iter().map(|&h| quadratic(h)));
            }
            if m > a {
                for k in 0..(m - a) as usize {
                    for &h in &h_sets[a as usize - 1] {
                        let mut c = vec![f.zero(); (1 << (k + 1)) + 1];
                        c[0] = f.neg(f.one());
                        c[1 << k] = f.neg(f.mul(f.from_int(2), h));
                        c[1 << (k + 1)] = f.one();
                        factors.push(Poly::from_coeffs(f, c));
                    }
                }
            }
        }
        (PowerOfTwoCase::ThreeModFour { a, h_sets }, factors)
    };
    let n = arith::checked_pow(2, m, "2^m")? as usize;
    if Poly::product(f, factors.iter()) != Poly::binomial(f, n, f.one()) {
        return Err(Error::IdentityFailed(format!("explicit factors of X^{n} - 1 over F_{q}")));
    }
    if let Some(bad) = factors.iter().find(|h| !h.is_irreducible(f, q)) {
        return Err(Error::IdentityFailed(format!("reducible factor {}", f.format_poly(bad))));
    }
    Ok(PowerOfTwoFactorization { field, m, case, factors })
}

/// An element of order exactly `2^v` in `F_q^*`, where `2^v` divides `q - 1`.
fn root_of_unity_2power(f: &FieldSpec, v: u32) -> FieldElem {
    let cofactor = (f.q() - 1) >> v;
    f.elements()
        .skip(1)
        .map(|x| f.pow(x, cofactor))
        .find(|&y| v == 0 || f.pow(y, 1 << (v - 1)) != f.one())
        .expect("cyclic group has an element of every order dividing q - 1")
}

/// `|Omega_{2^m}|`: 1 if `m = 0`; 2 if `m = 1` or `4 | q - 1`; else `2^{min(m, a) - 1} + 1`.
pub fn omega_power_of_two(q: u64, m: u32) -> u64 {
    if m == 0 {
        1
    } else if m == 1 || q % 4 == 1 {
        2
    } else {
        let a = arith::two_adic(q + 1);
        (1 << (m.min(a) - 1)) + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoPrimeCase {
    /// Equal 2-adic valuations of the orders: every factor is self-reciprocal.
    EqualValuations,
    /// Different valuations: `Sigma_1 + Sigma_2 - 1`.
    DistinctValuations,
}

/// How a value of `|Omega_n|` was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    PowerOfTwo {
        m: u32,
        /// `q - 1 = 2^v c`, when `q = 1 (mod 4)`.
        v: Option<u32>,
        /// `2^a || q + 1`, when `q = 3 (mod 4)`.
        a: Option<u32>,
    },
    /// `ell^s` with `ord_ell(q)` even: every factor is self-reciprocal.
    PrimePower { ell: u64, s: u32, ord_even: bool },
    #[serde(rename = "reduction_2m")]
    ReductionTwoM {
        m: u32,
        n_prime: u64,
        a: Option<u32>,
        omega_nprime: u64,
        omega_bar_nprime: u64,
        inner: Box<Route>,
    },
    TwoPrimes {
        ell1: u64,
        r1: u32,
        a1: u32,
        f1: u64,
        ell2: u64,
        r2: u32,
        a2: u32,
        f2: u64,
        case: TwoPrimeCase,
    },
    /// Every odd prime was stripped and `n` reduces to 1.
    Stripped,
    /// Coset pairing count; `no_closed_form` marks a fallback inside [`omega_closed`].
    Brute { no_closed_form: bool },
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::PowerOfTwo { .. } => "power_of_two",
            Route::PrimePower { .. } => "prime_power",
            Route::ReductionTwoM { .. } => "reduction_2m",
            Route::TwoPrimes { .. } => "two_primes",
            Route::Stripped => "stripped",
            Route::Brute { .. } => "brute",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Stripped {
    pub ell: u64,
    pub s: u32,
    pub ord: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaDerivation {
    pub q: u64,
    pub n: u64,
    pub value: u64,
    /// Odd prime powers removed because `ord_ell(q)` is odd.
    pub stripped: Vec<Stripped>,
    #[serde(flatten)]
    pub route: Route,
}

/// `|Omega_n|` counted directly from the coset pairing.
pub fn omega_brute(q: u64, n: u64) -> Result<OmegaDerivation> {
    let value = coset_table(q, n)?.omega().len() as u64;
    Ok(OmegaDerivation { q, n, value, stripped: Vec::new(), route: Route::Brute { no_closed_form: false } })
}

/// `|Omega_n|` through the closed forms.
///
/// Odd primes with odd `ord_ell(q)` are stripped first. The rest `2^m n'` is then dispatched:
/// `n' = 1` uses the power-of-two formula, `m = 0` uses the prime-power or two-prime
/// formulas, and `m >= 1` reduces to `|Omega_{n'}|` and the count over `F_{q^2}`.
/// Odd parts with three or more primes have no closed form and are counted by pairing.
/// When stripping leaves nothing the value is 1.
pub fn omega_closed(q: u64, n: u64) -> Result<OmegaDerivation> {
    arith::require_coprime(n, q)?;
    let m = arith::two_adic(n);
    let mut n_prime = n >> m;
    let mut stripped = Vec::new();
    let mut kept = Vec::new();
    for (ell, s) in arith::factorize(n_prime) {
        let ord = arith::mult_order(q, ell);
        if ord % 2 == 1 {
            stripped.push(Stripped { ell, s, ord });
            n_prime /= ell.pow(s);
        } else {
            kept.push((ell, s));
        }
    }
    let (value, route) = if n_prime == 1 && m == 0 && !stripped.is_empty() {
        (1, Route::Stripped)
    } else if n_prime == 1 {
        let (v, a) = match q % 4 {
            1 => (Some(arith::two_adic(q - 1)), None),
            3 => (None, Some(arith::two_adic(q + 1))),
            _ => (None, None),
        };
        (omega_power_of_two(q, m), Route::PowerOfTwo { m, v, a })
    } else if m == 0 {
        omega_odd(q, n_prime, &kept)?
    } else {
        let (omega_nprime, inner) = omega_odd(q, n_prime, &kept)?;
        let q2 = q.checked_mul(q).ok_or_else(|| Error::SizeExceeded(format!("{q}^2")))?;
        let omega_bar_nprime = coset_table(q2, n_prime)?.omega().len() as u64;
        if let [(ell, s)] = kept[..] {
            let ord = arith::mult_order(q, ell);
            let tail = if arith::two_adic(ord) == 1 { 1 } else { 2 * irreducible_factor_count(q, ell.pow(s))? - 1 };
            if tail != omega_bar_nprime {
                return Err(Error::IdentityFailed(format!(
                    "count over F_{q2} for n'={n_prime}: tail rule {tail}, pairing {omega_bar_nprime}"
                )));
            }
        }
        let a = (q % 4 == 3).then(|| arith::two_adic(q + 1));
        let value = match a {
            Some(a) if m >= 2 => {
                2 * omega_nprime + ((1 << (m.min(a) - 1)) - 1) * (2 * omega_nprime - omega_bar_nprime)
            }
            _ => 2 * omega_nprime,
        };
        let route = Route::ReductionTwoM { m, n_prime, a, omega_nprime, omega_bar_nprime, inner: Box::new(inner) };
        (value, route)
    };
    Ok(OmegaDerivation { q, n, value, stripped, route })
}

/// `|Omega_{n'}|` for odd `n' > 1` whose primes all have even order.
fn omega_odd(q: u64, n_prime: u64, primes: &[(u64, u32)]) -> Result<(u64, Route)> {
    match *primes {
        [(ell, s)] => Ok((irreducible_factor_count(q, n_prime)?, Route::PrimePower { ell, s, ord_even: true })),
        [(ell1, r1), (ell2, r2)] => {
            let (o1, o2) = (arith::mult_order(q, ell1.pow(r1)), arith::mult_order(q, ell2.pow(r2)));
            let (a1, a2) = (arith::two_adic(o1), arith::two_adic(o2));
            let (case, value) = if a1 == a2 {
                (TwoPrimeCase::EqualValuations, irreducible_factor_count(q, n_prime)?)
            } else {
                let sum = irreducible_factor_count(q, ell1.pow(r1))? + irreducible_factor_count(q, ell2.pow(r2))?;
                (TwoPrimeCase::DistinctValuations, sum - 1)
            };
            let route = Route::TwoPrimes { ell1, r1, a1, f1: o1 >> a1, ell2, r2, a2, f2: o2 >> a2, case };
            Ok((value, route))
        }
        _ => Ok((coset_table(q, n_prime)?.omega().len() as u64, Route::Brute { no_closed_form: true })),
    }
}

/// The number `s` of `q`-cosets mod `n'` and the number of `q^2`-cosets, checked to be `2s - 1`.
pub fn coset_doubling_check(q: u64, n_prime: u64) -> Result<(u64, u64)> {
    if n_prime % 2 == 0 {
        return Err(Error::HypothesisViolated(format!("n' = {n_prime} is even")));
    }
    arith::require_coprime(n_prime, q)?;
    if let Some((ell, _)) = arith::factorize(n_prime).into_iter().find(|&(ell, _)| arith::mult_order(q, ell) % 2 == 1) {
        return Err(Error::HypothesisViolated(format!("ord_{ell}({q}) is odd")));
    }
    let s = coset_table(q, n_prime)?.len() as u64;
    let q2 = q.checked_mul(q).ok_or_else(|| Error::SizeExceeded(format!("{q}^2")))?;
    let doubled = coset_table(q2, n_prime)?.len() as u64;
    if doubled != 2 * s - 1 {
        return Err(Error::IdentityFailed(format!("{doubled} cosets over q^2 for s = {s}")));
    }
    Ok((s, doubled))
}

/// One row of a census sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub q: u64,
    pub n: u64,
    pub t: u32,
    pub omega: u64,
    pub delta_half: u64,
    #[serde(serialize_with = "as_decimal")]
    pub selfdual_count: BigUint,
    pub nontrivial: bool,
    pub route: String,
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Census row for `(q, n, t)`; `nontrivial` requires even `t` and a nonempty `Delta_n`.
pub fn census_record(q: u64, n: u64, t: u32) -> Result<CensusRecord> {
    let table = coset_table(q, n)?;
    let closed = omega_closed(q, n)?;
    let brute = table.omega().len() as u64;
    if closed.value != brute {
        return Err(Error::IdentityFailed(format!("omega q={q} n={n}: closed {} != pairing {brute}", closed.value)));
    }
    let report = nontrivial_exists(q, n, None)?;
    Ok(CensusRecord {
        q,
        n,
        t,
        omega: brute,
        delta_half: table.delta().len() as u64 / 2,
        selfdual_count: selfdual_count(t, q, n)?,
        nontrivial: t % 2 == 0 && report.value,
        route: closed.route.name().to_string(),
    })
}

/// Rows for every `n` in `from..=to` coprime to `q`, in increasing `n`.
pub fn census(q: u64, t: u32, from: u64, to: u64) -> Result<Vec<CensusRecord>> {
    (from.max(1)..=to)
        .filter(|&n| arith::gcd(n, q) == 1)
        .map(|n| census_record(q, n, t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_ring;

    fn fact(spec: &str, n: u64) -> Arc<LiftedFactorization> {
        Arc::new(lifted_factorization(&make_ring(spec).unwrap(), n).unwrap())
    }

    #[test]
    fn existence_and_counts() {
        assert!(selfdual_exists(&make_ring("gr:2,2,1").unwrap()));
        assert!(!selfdual_exists(&make_ring("gr:2,3,1").unwrap()));
        assert!(!selfdual_exists(&make_ring("gr:5,1,1").unwrap()));
        assert_eq!(selfdual_count(2, 2, 7).unwrap(), BigUint::from(3u32));
        assert_eq!(selfdual_count(2, 2, 3).unwrap(), BigUint::from(1u32));
        assert_eq!(selfdual_count(3, 2, 7).unwrap(), BigUint::from(0u32));
        assert_eq!(selfdual_count(4, 2, 15).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn enumeration_examples() {
        let list: Vec<Vec<u32>> = selfdual_enumerate(&fact("gr:2,2,1", 7))
            .unwrap()
            .map(|c| c.exponents().to_vec())
            .collect();
        assert_eq!(list, vec![vec![1, 0, 2], vec![1, 1, 1], vec![1, 2, 0]]);
        let list: Vec<_> = selfdual_enumerate(&fact("gr:2,2,1", 3)).unwrap().collect();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].exponents(), &[1, 1]);
        assert_eq!(selfdual_enumerate(&fact("fqu:2,1,2", 7)).unwrap().count(), 3);
        assert!(matches!(selfdual_enumerate(&fact("gr:2,3,1", 7)), Err(Error::OddNilpotency(3))));

        // two pairs at t = 4: 25 distinct codes
        let f = fact("gr:2,4,1", 21);
        assert_eq!(f.cosets().delta_pairs().len(), 2);
        let codes: Vec<_> = selfdual_enumerate(&f).unwrap().collect();
        assert_eq!(codes.len(), 25);
        assert!(codes.iter().all(|c| c.is_self_dual()));
        assert!(codes.windows(2).all(|w| w[0].exponents() < w[1].exponents()));
    }

    #[test]
    fn nontrivial_examples() {
        assert!(nontrivial_exists(2, 7, None).unwrap().value);
        assert!(!nontrivial_exists(2, 3, None).unwrap().value);
        assert!(!nontrivial_exists(5, 1, None).unwrap().value);
        let z4 = make_ring("gr:2,2,1").unwrap();
        assert_eq!(nontrivial_exists(2, 7, Some(&z4)).unwrap().asymmetric_ring_factor, Some(true));
        assert_eq!(nontrivial_exists(2, 15, Some(&z4)).unwrap().asymmetric_ring_factor, Some(true));
        assert!(matches!(nontrivial_exists(3, 7, Some(&z4)), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn power_of_two_examples() {
        let show = |f: &PowerOfTwoFactorization| -> Vec<String> {
            f.factors.iter().map(|h| f.field.format_poly(h)).collect()
        };
        let f = factor_power_of_two(3, 2).unwrap();
        assert_eq!(show(&f), ["2,1", "1,1", "1,0,1"]);
        let f = factor_power_of_two(3, 3).unwrap();
        assert_eq!(show(&f), ["2,1", "1,1", "1,0,1", "2,1,1", "2,2,1"]);
        assert_eq!(f.case, PowerOfTwoCase::ThreeModFour { a: 2, h_sets: vec![vec![FieldElem(0)], vec![FieldElem(1), FieldElem(2)]] });
        let f = factor_power_of_two(5, 3).unwrap();
        assert_eq!(f.case, PowerOfTwoCase::OneModFour { v: 2, eta: FieldElem(2) });
        let mut got = show(&f);
        got.sort();
        let mut want = vec!["4,1", "3,1", "2,1", "1,1", "3,0,1", "2,0,1"];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(factor_power_of_two(4, 2).unwrap_err(), Error::EvenQ(4));
        assert_eq!(factor_power_of_two(7, 0).unwrap().factors.len(), 1);
        for (q, m) in [(7, 5), (9, 4), (27, 4), (25, 4), (31, 6)] {
            let f = factor_power_of_two(q, m).unwrap();
            assert_eq!(f.self_reciprocal_count() as u64, omega_power_of_two(q, m), "q={q} m={m}");
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_brute(2, 15).unwrap().value, 3);
        assert_eq!(omega_brute(7, 1).unwrap().value, 1);
        assert_eq!(omega_brute(3, 20).unwrap().value, 5);

        let d = omega_closed(3, 20).unwrap();
        assert_eq!(d.value, 5);
        assert_eq!(
            d.route,
            Route::ReductionTwoM {
                m: 2,
                n_prime: 5,
                a: Some(2),
                omega_nprime: 2,
                omega_bar_nprime: 3,
                inner: Box::new(Route::PrimePower { ell: 5, s: 1, ord_even: true }),
            }
        );
        let d = omega_closed(2, 15).unwrap();
        assert_eq!(d.value, 3);
        assert!(matches!(d.route, Route::TwoPrimes { a1: 1, a2: 2, case: TwoPrimeCase::DistinctValuations, .. }));
        let d = omega_closed(2, 33).unwrap();
        assert_eq!(d.value, 5);
        assert!(matches!(d.route, Route::TwoPrimes { case: TwoPrimeCase::EqualValuations, .. }));
        assert_eq!(omega_closed(5, 8).unwrap().value, 2);
        assert_eq!(omega_closed(3, 8).unwrap().value, 3);

        let d = omega_closed(2, 7 * 5).unwrap();
        assert_eq!(d.stripped, vec![Stripped { ell: 7, s: 1, ord: 3 }]);
        assert_eq!(d.route.name(), "prime_power");
        let d = omega_closed(2, 3 * 5 * 11).unwrap();
        assert_eq!(d.route, Route::Brute { no_closed_form: true });
        assert_eq!(d.value, omega_brute(2, 165).unwrap().value);
    }

    #[test]
    fn omega_json() {
        let v = serde_json::to_value(omega_closed(2, 15).unwrap()).unwrap();
        assert_eq!(v["route"], "two_primes");
        assert_eq!(v["case"], "distinct_valuations");
        let v = serde_json::to_value(omega_closed(3, 20).unwrap()).unwrap();
        assert_eq!(v["route"], "reduction_2m");
        assert_eq!(v["inner"]["route"], "prime_power");
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(coset_doubling_check(3, 5).unwrap(), (2, 3));
        assert_eq!(coset_doubling_check(2, 3).unwrap(), (2, 3));
        assert_eq!(coset_doubling_check(2, 5).unwrap(), (2, 3));
        assert!(matches!(coset_doubling_check(2, 7), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn census_rows() {
        let rows = census(2, 2, 1, 9).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1, 3, 5, 7, 9]);
        let r7 = &rows[3];
        assert_eq!((r7.omega, r7.delta_half, r7.nontrivial), (1, 1, true));
        assert_eq!(
            serde_json::to_string(r7).unwrap(),
            r#"{"q":2,"n":7,"t":2,"omega":1,"delta_half":1,"selfdual_count":"3","nontrivial":true,"route":"stripped"}"#
        );
        assert!(census(2, 3, 7, 7).unwrap()[0].selfdual_count == BigUint::from(0u32));
    }
}
