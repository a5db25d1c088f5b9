//! Factorization of `X^n - 1` over `F_q`, its Hensel lift to `R[X]`, and the
//! rescaled factorization of `X^n - r0` with `r0 = 1 + mu * gamma`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith;
use crate::cyclo::{coset_table, CosetTable};
use crate::error::{Error, Result};
use crate::gf::{extension_with_nth_root, minimal_polynomial, FieldPoly, FieldSpec};
use crate::poly::{CoeffRing, Poly};
use crate::ring::{nth_root_in_sylow, RingElem, RingPoly, RingSpec};

/// One irreducible factor `h_i` per coset representative, as minimal polynomials of `eta^i`.
pub fn factor_unity_field(field: &FieldSpec, n: u64) -> Result<Vec<(u64, FieldPoly)>> {
    let table = coset_table(field.q(), n)?;
    let ext = extension_with_nth_root(field, n)?;
    let factors = table
        .reps()
        .iter()
        .zip(table.cosets())
        .map(|(&rep, coset)| Ok((rep, minimal_polynomial(&ext, coset)?)))
        .collect::<Result<Vec<_>>>()?;
    let product = Poly::product(field, factors.iter().map(|(_, h)| h));
    if product != Poly::binomial(field, n as usize, field.one()) {
        return Err(Error::IdentityFailed(format!("product of minimal polynomials != X^{n} - 1")));
    }
    Ok(factors)
}

/// Unlabelled irreducible factors of `X^n - 1`, sorted, computed without an extension field.
///
/// Each cyclotomic part `Phi_d` is split with the Berlekamp subalgebra of
/// `F_q[X]/(X^d - 1)`, which is spanned by the coset sums `sum_{j in C} X^j`.
pub fn split_unity_field(field: &FieldSpec, n: u64) -> Result<Vec<FieldPoly>> {
    arith::require_coprime(n, field.p())?;
    let q = field.q();
    let mut cyclotomic: BTreeMap<u64, FieldPoly> = BTreeMap::new();
    let mut out = Vec::new();
    for d in arith::divisors(n) {
        let mut phi = Poly::binomial(field, d as usize, field.one());
        for e in arith::divisors(d).into_iter().filter(|&e| e < d) {
            let (quo, rem) = phi.div_rem(field, &cyclotomic[&e]).expect("monic divisor");
            debug_assert!(rem.is_zero());
            phi = quo;
        }
        cyclotomic.insert(d, phi.clone());

        let degree = arith::mult_order(q, d) as usize;
        let count = arith::euler_phi(d) as usize / degree;
        let mut parts = vec![phi];
        if count > 1 {
            let table = coset_table(q, d)?;
            for coset in table.cosets().iter().skip(1) {
                if parts.len() == count {
                    break;
                }
                let mut sum = vec![field.zero(); d as usize];
                for &j in coset {
                    sum[j as usize] = field.one();
                }
                let sum = Poly::from_coeffs(field, sum);
                parts = parts
                    .into_iter()
                    .flat_map(|f| split_by(field, f, &sum, degree))
                    .collect();
            }
        }
        if parts.len() != count || parts.iter().any(|f| f.degree() != Some(degree)) {
            return Err(Error::IdentityFailed(format!("Berlekamp split of Phi_{d} incomplete")));
        }
        out.extend(parts);
    }
    out.sort();
    Ok(out)
}

/// Splits `f` as `prod_c gcd(f, b - c)`; `b` must lie in the Berlekamp subalgebra mod `f`.
fn split_by(field: &FieldSpec, f: FieldPoly, b: &FieldPoly, degree: usize) -> Vec<FieldPoly> {
    if f.degree() == Some(degree) {
        return vec![f];
    }
    let r = b.rem(field, &f).expect("monic");
    let total = f.degree().unwrap_or(0);
    let mut found = 0;
    let mut parts = Vec::new();
    for c in field.elements() {
        let g = f.gcd(field, &r.sub(field, &Poly::constant(field, c)));
        if let Some(dg) = g.degree().filter(|&dg| dg > 0) {
            found += dg;
            parts.push(g);
            if found == total {
                break;
            }
        }
    }
    parts
}

/// Lifts a coprime monic factorization of `X^n - 1` over the residue field to `R[X]`,
/// one `gamma`-adic digit per step.
pub fn hensel_lift(ring: &RingSpec, field_factors: &[(u64, FieldPoly)]) -> Result<Vec<(u64, RingPoly)>> {
    let field = ring.residue_field();
    if field_factors.iter().any(|(_, h)| !h.is_monic(field)) {
        return Err(Error::BadFactorization("factors must be monic".into()));
    }
    let n: usize = field_factors.iter().map(|(_, h)| h.degree().unwrap_or(0)).sum();
    let target_field = Poly::binomial(field, n, field.one());
    if Poly::product(field, field_factors.iter().map(|(_, h)| h)) != target_field {
        return Err(Error::BadFactorization(format!("product of factors != X^{n} - 1")));
    }
    // s_i = (prod_{j != i} h_j)^{-1} mod h_i
    let mut cofactors = Vec::with_capacity(field_factors.len());
    for (_, h) in field_factors {
        let (others, rem) = target_field.div_rem(field, h).expect("monic");
        debug_assert!(rem.is_zero());
        let (g, s, _) = others.rem(field, h).expect("monic").ext_gcd(field, h);
        if g.degree() != Some(0) {
            return Err(Error::BadFactorization("factors are not pairwise coprime".into()));
        }
        cofactors.push(s);
    }

    let target = Poly::binomial(ring, n, ring.one());
    let mut lifted: Vec<RingPoly> = field_factors.iter().map(|(_, h)| ring.lift_poly(h)).collect();
    for k in 1..ring.t() {
        let err = target.sub(ring, &Poly::product(ring, lifted.iter()));
        if err.coeffs().iter().any(|&c| ring.valuation(c) < k) {
            return Err(Error::IdentityFailed(format!("lift not exact modulo gamma^{k}")));
        }
        let err_field = err.map(field, |c| ring.residue_of_quotient(c, k));
        let gk = ring.gamma_pow(k);
        for ((g, (_, h)), s) in lifted.iter_mut().zip(field_factors).zip(&cofactors) {
            let correction = err_field.mul(field, s).rem(field, h).expect("monic");
            *g = g.add(ring, &ring.lift_poly(&correction).scale(ring, gk));
        }
    }
    if Poly::product(ring, lifted.iter()) != target {
        return Err(Error::IdentityFailed(format!("lifted product != X^{n} - 1")));
    }
    Ok(field_factors.iter().map(|(rep, _)| *rep).zip(lifted).collect())
}

/// Polynomials `(u, v)` with `u*a + v*b = 1` in `R[X]`, built from a field-level
/// Bezout identity for the residues; `None` when the residues are not coprime.
pub fn bezout_certificate(ring: &RingSpec, a: &RingPoly, b: &RingPoly) -> Option<(RingPoly, RingPoly)> {
    let field = ring.residue_field();
    let (d, s, t) = ring.residue_poly(a).ext_gcd(field, &ring.residue_poly(b));
    if d.degree() != Some(0) {
        return None;
    }
    let (u0, v0) = (ring.lift_poly(&s), ring.lift_poly(&t));
    let w = u0.mul(ring, a).add(ring, &v0.mul(ring, b));
    // w = 1 - z with z in gamma R[X], so w^{-1} = sum_{k<t} z^k
    let z = Poly::one(ring).sub(ring, &w);
    let mut inverse = Poly::one(ring);
    let mut power = Poly::one(ring);
    for _ in 1..ring.t() {
        power = power.mul(ring, &z);
        inverse = inverse.add(ring, &power);
    }
    let (u, v) = (u0.mul(ring, &inverse), v0.mul(ring, &inverse));
    (u.mul(ring, a).add(ring, &v.mul(ring, b)) == Poly::one(ring)).then_some((u, v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorEntry {
    pub rep: u64,
    pub h: FieldPoly,
    pub g: RingPoly,
    pub f: RingPoly,
}

/// The factor families `h_i | X^n - 1`, `g_i | X^n - 1`, `f_i | X^n - r0`, indexed by coset
/// representative in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedFactorization {
    ring: RingSpec,
    n: u64,
    cosets: CosetTable,
    mu: RingElem,
    r0: RingElem,
    delta: RingElem,
    entries: Vec<FactorEntry>,
}

/// Factors `X^n - r0` over `ring` for `r0 = 1 + mu * gamma`.
///
/// `f_i(X) = delta^{-deg g_i} g_i(delta X)` where `delta` is the `n`-th root of `r0^{-1}`
/// in `1 + gamma R`.
pub fn factor_xn_minus_r0(ring: &RingSpec, n: u64, mu: RingElem) -> Result<LiftedFactorization> {
    arith::require_coprime(n, ring.p())?;
    if !ring.is_unit(mu) {
        return Err(Error::NotUnit(ring.format_elem(mu)));
    }
    let field = ring.residue_field();
    let cosets = coset_table(ring.q(), n)?;
    let hs = factor_unity_field(field, n)?;
    let gs = hensel_lift(ring, &hs)?;
    let r0 = ring.add(ring.one(), ring.mul(mu, ring.gamma()));
    let r0_inv = ring.inv(r0).expect("principal unit");
    let delta = nth_root_in_sylow(ring, r0_inv, n)?;
    let delta_inv = ring.inv(delta).expect("principal unit");
    let entries = hs
        .into_iter()
        .zip(gs)
        .map(|((rep, h), (_, g))| {
            let d = g.degree().unwrap_or(0) as u64;
            let f = g.compose_scaled(ring, delta).scale(ring, ring.pow(delta_inv, d));
            FactorEntry { rep, h, g, f }
        })
        .collect();
    let fact = LiftedFactorization { ring: ring.clone(), n, cosets, mu, r0, delta, entries };
    fact.check_invariants()?;
    Ok(fact)
}

/// [`factor_xn_minus_r0`] with `mu = 1`.
pub fn lifted_factorization(ring: &RingSpec, n: u64) -> Result<LiftedFactorization> {
    factor_xn_minus_r0(ring, n, ring.one())
}

impl LiftedFactorization {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cosets(&self) -> &CosetTable {
        &self.cosets
    }

    pub fn mu(&self) -> RingElem {
        self.mu
    }

    pub fn r0(&self) -> RingElem {
        self.r0
    }

    pub fn delta(&self) -> RingElem {
        self.delta
    }

    pub fn entries(&self) -> &[FactorEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks every structural identity of the factor families.
    pub fn check_invariants(&self) -> Result<()> {
        let ring = &self.ring;
        let field = ring.residue_field();
        let n = self.n as usize;
        let fail = |what: &str| Err(Error::IdentityFailed(what.to_string()));
        let hs = self.entries.iter().map(|e| &e.h);
        if Poly::product(field, hs) != Poly::binomial(field, n, field.one()) {
            return fail("prod h_i != X^n - 1");
        }
        if Poly::product(ring, self.entries.iter().map(|e| &e.g)) != Poly::binomial(ring, n, ring.one()) {
            return fail("prod g_i != X^n - 1");
        }
        if Poly::product(ring, self.entries.iter().map(|e| &e.f)) != Poly::binomial(ring, n, self.r0) {
            return fail("prod f_i != X^n - r0");
        }
        if ring.mul(ring.pow(self.delta, self.n), self.r0) != ring.one() {
            return fail("delta^n r0 != 1");
        }
        for (entry, coset) in self.entries.iter().zip(self.cosets.cosets()) {
            let d = Some(coset.len());
            if entry.h.degree() != d || entry.g.degree() != d || entry.f.degree() != d {
                return fail("factor degree differs from coset size");
            }
            if !entry.g.is_monic(ring) || !entry.f.is_monic(ring) || !entry.h.is_monic(field) {
                return fail("factor not monic");
            }
            if ring.residue_poly(&entry.g) != entry.h || ring.residue_poly(&entry.f) != entry.h {
                return fail("residue of lifted factor != h_i");
            }
            if !entry.h.is_irreducible(field, field.q()) {
                return fail("h_i reducible");
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            rep: u64,
            h: String,
            g: String,
            f: String,
        }
        #[derive(Serialize)]
        struct Out {
            ring: String,
            n: u64,
            r0: String,
            mu: String,
            delta: String,
            factors: Vec<Entry>,
        }
        let ring = &self.ring;
        let field = ring.residue_field();
        serde_json::to_value(Out {
            ring: ring.name(),
            n: self.n,
            r0: ring.format_elem(self.r0),
            mu: ring.format_elem(self.mu),
            delta: ring.format_elem(self.delta),
            factors: self
                .entries
                .iter()
                .map(|e| Entry {
                    rep: e.rep,
                    h: field.format_poly(&e.h),
                    g: ring.format_poly(&e.g),
                    f: ring.format_poly(&e.f),
                })
                .collect(),
        })
        .expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::ring::make_ring;

    fn ring_poly(ring: &RingSpec, codes: &[i64]) -> RingPoly {
        Poly::from_coeffs(ring, codes.iter().map(|&c| ring.from_int(c)).collect())
    }

    #[test]
    fn field_factorizations() {
        let f2 = make_field(2, 1).unwrap();
        let fs = factor_unity_field(&f2, 7).unwrap();
        assert_eq!(fs[0], (0, f2.poly(&[1, 1])));
        let mut cubics: Vec<_> = fs[1..].iter().map(|(_, h)| h.clone()).collect();
        cubics.sort();
        assert_eq!(cubics, vec![f2.poly(&[1, 0, 1, 1]), f2.poly(&[1, 1, 0, 1])]);
        // conjugate cosets give reciprocal factors
        assert_eq!(crate::gf::star(&f2, &fs[1].1).unwrap(), fs[2].1);

        assert_eq!(factor_unity_field(&f2, 1).unwrap(), vec![(0, f2.poly(&[1, 1]))]);

        let f3 = make_field(3, 1).unwrap();
        let fs = factor_unity_field(&f3, 4).unwrap();
        assert_eq!(
            fs,
            vec![(0, f3.poly(&[2, 1])), (1, f3.poly(&[1, 0, 1])), (2, f3.poly(&[1, 1]))]
        );
    }

    #[test]
    fn berlekamp_route_matches_minimal_polynomials() {
        for (q, n) in [(2, 7), (2, 15), (3, 20), (4, 21), (5, 12), (9, 10), (2, 45), (3, 26), (16, 17)] {
            let f = crate::gf::field_of_order(q).unwrap();
            let mut a: Vec<_> = factor_unity_field(&f, n).unwrap().into_iter().map(|(_, h)| h).collect();
            a.sort();
            assert_eq!(a, split_unity_field(&f, n).unwrap(), "q={q} n={n}");
        }
    }

    #[test]
    fn hensel_examples_z4() {
        let z4 = make_ring("gr:2,2,1").unwrap();
        let f2 = z4.residue_field().clone();
        let gs = hensel_lift(&z4, &factor_unity_field(&f2, 7).unwrap()).unwrap();
        let mut polys: Vec<_> = gs.iter().map(|(_, g)| g.clone()).collect();
        polys.sort();
        let mut expected = vec![
            ring_poly(&z4, &[3, 1]),
            ring_poly(&z4, &[3, 1, 2, 1]),
            ring_poly(&z4, &[3, 2, 3, 1]),
        ];
        expected.sort();
        assert_eq!(polys, expected);

        let gs = hensel_lift(&z4, &factor_unity_field(&f2, 3).unwrap()).unwrap();
        assert_eq!(gs, vec![(0, ring_poly(&z4, &[3, 1])), (1, ring_poly(&z4, &[1, 1, 1]))]);
    }

    #[test]
    fn nilpotent_lift_is_embedding() {
        let r = make_ring("fqu:2,1,2").unwrap();
        let hs = factor_unity_field(r.residue_field(), 7).unwrap();
        let gs = hensel_lift(&r, &hs).unwrap();
        for ((_, h), (_, g)) in hs.iter().zip(&gs) {
            assert_eq!(&r.lift_poly(h), g);
        }
    }

    #[test]
    fn bad_factorizations_rejected() {
        let z4 = make_ring("gr:2,2,1").unwrap();
        let f2 = z4.residue_field().clone();
        let wrong = vec![(0, f2.poly(&[1, 1])), (1, f2.poly(&[1, 0, 1]))];
        assert!(matches!(hensel_lift(&z4, &wrong), Err(Error::BadFactorization(_))));
        let repeated = vec![(0, f2.poly(&[1, 1])), (1, f2.poly(&[1, 1]))];
        assert!(matches!(hensel_lift(&z4, &repeated), Err(Error::BadFactorization(_))));
        let lifted = hensel_lift(&z4, &factor_unity_field(&f2, 3).unwrap()).unwrap();
        assert_eq!(lifted.len(), 2);
    }

    #[test]
    fn r0_factorization_z4() {
        let z4 = make_ring("gr:2,2,1").unwrap();
        let fact = lifted_factorization(&z4, 3).unwrap();
        assert_eq!(fact.r0(), RingElem(3));
        assert_eq!(fact.delta(), RingElem(3));
        assert_eq!(fact.entries()[0].f, ring_poly(&z4, &[1, 1]));
        // X + 1 divides X^3 - 3: root X = 3
        assert_eq!(Poly::binomial(&z4, 3, RingElem(3)).eval(&z4, RingElem(3)), z4.zero());

        let fact = lifted_factorization(&z4, 7).unwrap();
        assert_eq!(fact.delta(), RingElem(3));
        assert_eq!(
            Poly::product(&z4, fact.entries().iter().map(|e| &e.f)),
            Poly::binomial(&z4, 7, RingElem(3))
        );
        assert!(matches!(factor_xn_minus_r0(&z4, 7, RingElem(2)), Err(Error::NotUnit(_))));
    }

    #[test]
    fn field_as_ring_has_trivial_r0() {
        let f = make_ring("gr:3,1,2").unwrap();
        let fact = lifted_factorization(&f, 8).unwrap();
        assert_eq!(fact.r0(), f.one());
        for e in fact.entries() {
            assert_eq!(e.f, e.g);
        }
    }

    #[test]
    fn bezout_certificates_and_uniqueness() {
        let r = make_ring("gr:2,3,1").unwrap();
        let fact = lifted_factorization(&r, 7).unwrap();
        let es = fact.entries();
        for i in 0..es.len() {
            for j in i + 1..es.len() {
                assert!(bezout_certificate(&r, &es[i].g, &es[j].g).is_some());
            }
        }
        // Perturbing one g_i by gamma^{t-1} X^k (k < deg g_i) breaks the product identity.
        let target = Poly::binomial(&r, 7, r.one());
        for i in 0..es.len() {
            for k in 0..es[i].g.degree().unwrap() {
                let bump = Poly::monomial(&r, r.gamma_pow(r.t() - 1), k);
                let product = Poly::product(
                    &r,
                    es.iter().enumerate().map(|(j, e)| if i == j { None } else { Some(&e.g) }).flatten(),
                )
                .mul(&r, &es[i].g.add(&r, &bump));
                assert_ne!(product, target);
            }
        }
    }

    #[test]
    fn json_shape() {
        let z4 = make_ring("gr:2,2,1").unwrap();
        let v = lifted_factorization(&z4, 3).unwrap().to_json();
        assert_eq!(
            v.to_string(),
            r#"{"ring":"gr:2,2,1","n":3,"r0":"3","mu":"1","delta":"3","factors":[{"rep":0,"h":"1,1","g":"3,1","f":"1,1"},{"rep":1,"h":"1,1,1","g":"1,1,1","f":"1,3,1"}]}"#
        );
    }
}
