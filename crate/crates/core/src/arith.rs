//! Elementary number theory on machine words.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quo = old_r / r;
        (old_r, r) = (r, old_r - quo * r);
        (old_s, s) = (s, old_s - quo * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Splits a prime power `q = p^alpha` into `(p, alpha)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let f = factorize(q);
    match f.as_slice() {
        [(p, e)] => Ok((*p, *e)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let len = ds.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

/// Multiplicative order of `q` modulo `n` by repeated multiplication.
/// Requires `gcd(q, n) = 1`; `ord_1(q) = 1`.
pub fn mult_order(q: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    debug_assert_eq!(gcd(q % n, n), 1);
    let base = q % n;
    let mut x = base;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, base, n);
        k += 1;
    }
    k
}

/// Exponent of 2 in `n` (`n > 0`).
pub fn two_adic(n: u64) -> u32 {
    n.trailing_zeros()
}

pub(crate) fn checked_pow(base: u64, exp: u32, what: &str) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::SizeExceeded(format!("{what}: {base}^{exp}")))
}

pub(crate) fn require_coprime(n: u64, modulus: u64) -> Result<()> {
    if n == 0 || gcd(n, modulus) != 1 {
        return Err(Error::NotCoprime { n, modulus });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_counts() {
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(mult_order(2, 15), 4);
        assert_eq!(mult_order(3, 20), 4);
        assert_eq!(mult_order(5, 1), 1);
        assert_eq!(euler_phi(20), 8);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..5000u64 {
            let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), naive, "n = {n}");
        }
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(7, 2), Some(1));
        assert_eq!(inv_mod(2, 3), Some(2));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(prime_power(27), Ok((3, 3)));
        assert!(prime_power(12).is_err());
    }
}
