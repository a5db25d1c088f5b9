//! Dense univariate polynomials over a coefficient ring supplied as a context.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial is the empty vector and structural equality is polynomial
//! equality.

use std::fmt::Debug;

/// Arithmetic context for polynomial coefficients.
pub trait CoeffRing {
    type Elem: Copy + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, mut base: Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// Marker for coefficient rings that are fields; unlocks gcd computations.
pub trait CoeffField: CoeffRing {}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Eq + Debug> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs<R: CoeffRing<Elem = E>>(ring: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(*c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant<R: CoeffRing<Elem = E>>(ring: &R, c: E) -> Self {
        Self::from_coeffs(ring, vec![c])
    }

    pub fn one<R: CoeffRing<Elem = E>>(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    /// `c * X^k`.
    pub fn monomial<R: CoeffRing<Elem = E>>(ring: &R, c: E, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(ring, coeffs)
    }

    /// `X^n - c`.
    pub fn binomial<R: CoeffRing<Elem = E>>(ring: &R, n: usize, c: E) -> Self {
        let mut coeffs = vec![ring.zero(); n + 1];
        coeffs[n] = ring.one();
        coeffs[0] = ring.sub(coeffs[0], c);
        Self::from_coeffs(ring, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    pub fn coeff<R: CoeffRing<Elem = E>>(&self, ring: &R, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_else(|| ring.zero())
    }

    pub fn is_monic<R: CoeffRing<Elem = E>>(&self, ring: &R) -> bool {
        self.lead() == Some(ring.one())
    }

    pub fn add<R: CoeffRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| ring.add(self.coeff(ring, i), other.coeff(ring, i)))
            .collect();
        Self::from_coeffs(ring, coeffs)
    }

    pub fn neg<R: CoeffRing<Elem = E>>(&self, ring: &R) -> Self {
        Self::from_coeffs(ring, self.coeffs.iter().map(|&c| ring.neg(c)).collect())
    }

    pub fn sub<R: CoeffRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| ring.sub(self.coeff(ring, i), other.coeff(ring, i)))
            .collect();
        Self::from_coeffs(ring, coeffs)
    }

    pub fn scale<R: CoeffRing<Elem = E>>(&self, ring: &R, c: E) -> Self {
        Self::from_coeffs(ring, self.coeffs.iter().map(|&a| ring.mul(a, c)).collect())
    }

    pub fn mul<R: CoeffRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(out[i + j], ring.mul(a, b));
            }
        }
        Self::from_coeffs(ring, out)
    }

    pub fn pow<R: CoeffRing<Elem = E>>(&self, ring: &R, k: u32) -> Self {
        let mut acc = Self::one(ring);
        for _ in 0..k {
            acc = acc.mul(ring, self);
        }
        acc
    }

    pub fn product<'a, R, I>(ring: &R, factors: I) -> Self
    where
        R: CoeffRing<Elem = E>,
        I: IntoIterator<Item = &'a Self>,
        E: 'a,
    {
        factors
            .into_iter()
            .fold(Self::one(ring), |acc, f| acc.mul(ring, f))
    }

    /// Division with remainder by a divisor whose leading coefficient is a unit.
    /// Returns `None` when the divisor is zero or its leading coefficient is not invertible.
    pub fn div_rem<R: CoeffRing<Elem = E>>(&self, ring: &R, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = ring.inv(divisor.lead()?)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quo = vec![ring.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = ring.mul(rem[k], lead_inv);
            if ring.is_zero(c) {
                continue;
            }
            quo[k - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = ring.sub(rem[idx], ring.mul(c, d));
            }
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(ring, quo), Self::from_coeffs(ring, rem)))
    }

    pub fn rem<R: CoeffRing<Elem = E>>(&self, ring: &R, divisor: &Self) -> Option<Self> {
        self.div_rem(ring, divisor).map(|(_, r)| r)
    }

    /// Reduction modulo `X^n - 1`.
    pub fn reduce_cyclic<R: CoeffRing<Elem = E>>(&self, ring: &R, n: usize) -> Self {
        let mut out = vec![ring.zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = ring.add(out[i % n], c);
        }
        Self::from_coeffs(ring, out)
    }

    pub fn eval<R: CoeffRing<Elem = E>>(&self, ring: &R, x: E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, &c| ring.add(ring.mul(acc, x), c))
    }

    /// `p(c X)`.
    pub fn compose_scaled<R: CoeffRing<Elem = E>>(&self, ring: &R, c: E) -> Self {
        let mut power = ring.one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            coeffs.push(ring.mul(a, power));
            power = ring.mul(power, c);
        }
        Self::from_coeffs(ring, coeffs)
    }

    /// Monic reciprocal `p(0)^{-1} X^{deg p} p(1/X)`; `None` unless `p(0)` is a unit.
    pub fn reciprocal<R: CoeffRing<Elem = E>>(&self, ring: &R) -> Option<Self> {
        let c0 = *self.coeffs.first()?;
        let c0_inv = ring.inv(c0)?;
        let rev: Vec<E> = self.coeffs.iter().rev().map(|&a| ring.mul(a, c0_inv)).collect();
        Some(Self::from_coeffs(ring, rev))
    }

    /// Applies a coefficient map into another ring.
    pub fn map<F, R2: CoeffRing>(&self, target: &R2, f: F) -> Poly<R2::Elem>
    where
        F: Fn(E) -> R2::Elem,
    {
        Poly::from_coeffs(target, self.coeffs.iter().map(|&c| f(c)).collect())
    }
}

impl<E: Copy + Eq + Debug> Poly<E> {
    pub fn make_monic<R: CoeffField<Elem = E>>(&self, field: &R) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(field, field.inv(l).expect("nonzero field element")),
        }
    }

    /// Monic gcd over a field.
    pub fn gcd<R: CoeffField<Elem = E>>(&self, field: &R, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b).expect("nonzero divisor over a field");
            a = b;
            b = r;
        }
        a.make_monic(field)
    }

    /// Extended Euclid over a field: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd<R: CoeffField<Elem = E>>(&self, field: &R, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(field), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(field));
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(field, &r1).expect("nonzero divisor over a field");
            r0 = std::mem::replace(&mut r1, rem);
            let s2 = s0.sub(field, &quo.mul(field, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(field, &quo.mul(field, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = field.inv(l).expect("nonzero field element");
                (r0.scale(field, li), s0.scale(field, li), t0.scale(field, li))
            }
        }
    }

    /// `base^exp mod modulus` over a field.
    pub fn pow_mod<R: CoeffField<Elem = E>>(&self, field: &R, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(field, modulus).expect("nonzero modulus");
        let mut acc = Self::one(field).rem(field, modulus).expect("nonzero modulus");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus).expect("nonzero modulus");
            }
            base = base.mul(field, &base).rem(field, modulus).expect("nonzero modulus");
            exp >>= 1;
        }
        acc
    }

    /// Ben-Or irreducibility test over a field with `field_order` elements.
    pub fn is_irreducible<R: CoeffField<Elem = E>>(&self, field: &R, field_order: u64) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let f = self.make_monic(field);
        let x = Self::monomial(field, field.one(), 1);
        let mut frob = x.clone();
        for _ in 0..d / 2 {
            frob = frob.pow_mod(field, field_order, &f);
            if f.gcd(field, &frob.sub(field, &x)).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}
