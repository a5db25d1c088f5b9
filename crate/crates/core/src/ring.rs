//! Finite chain rings: Galois rings `GR(p^t, m)` and `F_q[u]/(u^t)`.
//!
//! Elements are packed into a `u64` code made of `L` digits in radix `B`:
//!
//! | family      | digits `L` | radix `B` | digit meaning                      |
//! |-------------|------------|-----------|------------------------------------|
//! | `gr:p,t,m`  | `m`        | `p^t`     | coefficient of `y^j` in `Z_{p^t}`  |
//! | `fqu:p,a,t` | `t`        | `q = p^a` | coefficient of `u^k`, an `F_q` code|
//!
//! The maximal ideal is generated by `gamma = p` resp. `gamma = u`.

use std::fmt;

use crate::arith::{self, checked_pow};
use crate::error::{Error, Result};
use crate::gf::{make_field, FieldElem, FieldPoly, FieldSpec};
use crate::poly::{CoeffRing, Poly};
use crate::text::Node;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem(pub(crate) u64);

impl RingElem {
    pub fn code(self) -> u64 {
        self.0
    }
}

pub type RingPoly = Poly<RingElem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `GR(p^t, m)`, `gamma = p`.
    Galois,
    /// `F_q[u]/(u^t)`, `gamma = u`.
    Nilpotent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    family: Family,
    p: u64,
    t: u32,
    /// `m` for Galois rings, `alpha` for nilpotent extensions.
    degree: u32,
    residue: FieldSpec,
    size: u64,
    radix: u64,
    ndigits: u32,
    /// Integer lift of the residue-field modulus (Galois family only).
    modulus: Vec<u64>,
}

/// Parses `gr:p,t,m` or `fqu:p,alpha,t`.
pub fn make_ring(spec: &str) -> Result<RingSpec> {
    let (family, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("ring spec {spec:?} has no family prefix")))?;
    let nums = rest
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer {s:?} in ring spec")))
        })
        .collect::<Result<Vec<u64>>>()?;
    let [a, b, c] = nums[..] else {
        return Err(Error::Parse(format!("ring spec {spec:?} needs three parameters")));
    };
    let small = |v: u64| u32::try_from(v).map_err(|_| Error::SizeExceeded(format!("parameter {v}")));
    match family {
        "gr" => galois_ring(a, small(b)?, small(c)?),
        "fqu" => nilpotent_ring(a, small(b)?, small(c)?),
        _ => Err(Error::Parse(format!("unknown ring family {family:?}"))),
    }
}

/// `GR(p^t, m) = Z_{p^t}[y]/(h)` with `h` the integer lift of the field modulus of `F_{p^m}`.
pub fn galois_ring(p: u64, t: u32, m: u32) -> Result<RingSpec> {
    if t == 0 {
        return Err(Error::Parse("nilpotency index must be positive".into()));
    }
    let residue = make_field(p, m)?;
    let radix = checked_pow(p, t, "characteristic")?;
    let size = checked_pow(radix, m, "ring size")?;
    if radix > u32::MAX as u64 {
        return Err(Error::SizeExceeded(format!("characteristic {radix}")));
    }
    let modulus = residue.modulus().to_vec();
    Ok(RingSpec { family: Family::Galois, p, t, degree: m, residue, size, radix, ndigits: m, modulus })
}

/// `F_{p^alpha}[u]/(u^t)`.
pub fn nilpotent_ring(p: u64, alpha: u32, t: u32) -> Result<RingSpec> {
    if t == 0 {
        return Err(Error::Parse("nilpotency index must be positive".into()));
    }
    let residue = make_field(p, alpha)?;
    let size = checked_pow(residue.q(), t, "ring size")?;
    Ok(RingSpec {
        family: Family::Nilpotent,
        p,
        t,
        degree: alpha,
        radix: residue.q(),
        residue,
        size,
        ndigits: t,
        modulus: Vec::new(),
    })
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Galois => write!(f, "gr:{},{},{}", self.p, self.t, self.degree),
            Family::Nilpotent => write!(f, "fqu:{},{},{}", self.p, self.degree, self.t),
        }
    }
}

impl RingSpec {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Nilpotency index of `gamma`.
    pub fn t(&self) -> u32 {
        self.t
    }

    /// Order of the residue field.
    pub fn q(&self) -> u64 {
        self.residue.q()
    }

    pub fn residue_field(&self) -> &FieldSpec {
        &self.residue
    }

    /// `|R| = q^t`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Ring spec string, e.g. `gr:2,2,1`.
    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElem> {
        (0..self.size).map(RingElem)
    }

    pub fn elem(&self, code: u64) -> Result<RingElem> {
        if code >= self.size {
            return Err(Error::Parse(format!("{code} is not an element code of {self}")));
        }
        Ok(RingElem(code))
    }

    /// Raw digits: `m` integers in `[0, p^t)` or `t` residue-field codes.
    pub fn digits(&self, x: RingElem) -> Vec<u64> {
        let mut rest = x.0;
        (0..self.ndigits)
            .map(|_| {
                let d = rest % self.radix;
                rest /= self.radix;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u64]) -> RingElem {
        RingElem(digits.iter().rev().fold(0, |acc, &d| acc * self.radix + d))
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<RingElem> {
        if digits.len() > self.ndigits as usize || digits.iter().any(|&d| d >= self.radix) {
            return Err(Error::Parse(format!("{digits:?} is not an element of {self}")));
        }
        Ok(self.pack(digits))
    }

    pub fn from_int(&self, k: i64) -> RingElem {
        match self.family {
            Family::Galois => RingElem(k.rem_euclid(self.radix as i64) as u64),
            Family::Nilpotent => RingElem(self.residue.from_int(k).code()),
        }
    }

    pub fn gamma(&self) -> RingElem {
        self.gamma_pow(1)
    }

    pub fn gamma_pow(&self, k: u32) -> RingElem {
        if k >= self.t {
            return RingElem(0);
        }
        match self.family {
            Family::Galois => RingElem(self.p.pow(k)),
            Family::Nilpotent => RingElem(self.radix.pow(k)),
        }
    }

    /// Reduction modulo `gamma`.
    pub fn residue(&self, x: RingElem) -> FieldElem {
        self.residue_of_quotient(x, 0)
    }

    /// Residue of `x / gamma^k`; requires `valuation(x) >= k`.
    pub fn residue_of_quotient(&self, x: RingElem, k: u32) -> FieldElem {
        debug_assert!(self.valuation(x) >= k);
        let ds = self.digits(x);
        match self.family {
            Family::Galois => {
                let pk = self.p.pow(k);
                let field_digits: Vec<u64> = ds.iter().map(|&c| (c / pk) % self.p).collect();
                self.residue.from_digits(&field_digits).expect("digits in range")
            }
            Family::Nilpotent => FieldElem(ds.get(k as usize).copied().unwrap_or(0)),
        }
    }

    /// Canonical section of the residue map.
    pub fn lift(&self, a: FieldElem) -> RingElem {
        match self.family {
            Family::Galois => self.pack(&self.residue.digits(a)),
            Family::Nilpotent => RingElem(a.code()),
        }
    }

    /// `gamma`-adic valuation; `valuation(0) = t`.
    pub fn valuation(&self, x: RingElem) -> u32 {
        if x.0 == 0 {
            return self.t;
        }
        let ds = self.digits(x);
        match self.family {
            Family::Galois => ds
                .iter()
                .filter(|&&c| c != 0)
                .map(|&c| {
                    let mut v = 0;
                    let mut c = c;
                    while c % self.p == 0 {
                        c /= self.p;
                        v += 1;
                    }
                    v
                })
                .min()
                .unwrap_or(self.t),
            Family::Nilpotent => ds.iter().position(|&d| d != 0).map_or(self.t, |k| k as u32),
        }
    }

    pub fn is_unit(&self, x: RingElem) -> bool {
        self.residue(x).code() != 0
    }

    /// Membership in the principal unit group `1 + gamma R`.
    pub fn is_principal_unit(&self, x: RingElem) -> bool {
        self.residue(x) == self.residue.one()
    }

    /// Additive generators of `R`: unit vectors of the digit representation
    /// (further split into `F_p`-basis vectors for the nilpotent family).
    pub fn additive_generators(&self) -> Vec<RingElem> {
        match self.family {
            Family::Galois => (0..self.ndigits).map(|j| RingElem(self.radix.pow(j))).collect(),
            Family::Nilpotent => (0..self.t)
                .flat_map(|k| {
                    (0..self.degree).map(move |l| RingElem(self.p.pow(l) * self.radix.pow(k)))
                })
                .collect(),
        }
    }

    pub fn residue_poly(&self, f: &RingPoly) -> FieldPoly {
        f.map(&self.residue, |c| self.residue(c))
    }

    pub fn lift_poly(&self, h: &FieldPoly) -> RingPoly {
        h.map(self, |c| self.lift(c))
    }

    pub fn format_elem(&self, x: RingElem) -> String {
        let ds = self.digits(x);
        let parts: Vec<String> = match self.family {
            Family::Galois => ds.iter().map(u64::to_string).collect(),
            Family::Nilpotent => ds.iter().map(|&d| self.residue.format_elem(FieldElem(d))).collect(),
        };
        if parts.len() == 1 {
            parts.into_iter().next().expect("one digit")
        } else {
            format!("({})", parts.join(" "))
        }
    }

    pub fn parse_elem(&self, text: &str) -> Result<RingElem> {
        self.elem_from_node(&crate::text::parse_node(text)?)
    }

    fn elem_from_node(&self, node: &Node) -> Result<RingElem> {
        let items: Vec<Node> = match (self.ndigits, node) {
            (1, n) => vec![n.clone()],
            (_, Node::List(items)) => items.clone(),
            (_, Node::Int(k)) => vec![Node::Int(*k)],
        };
        let digits = items
            .iter()
            .map(|n| match (self.family, n) {
                (Family::Galois, Node::Int(k)) => Ok(*k),
                (Family::Galois, Node::List(_)) => Err(Error::Parse("nested Galois-ring digit".into())),
                (Family::Nilpotent, n) => self.residue.elem_from_node(n).map(FieldElem::code),
            })
            .collect::<Result<Vec<u64>>>()?;
        self.from_digits(&digits)
    }

    pub fn format_poly(&self, f: &RingPoly) -> String {
        crate::text::format_poly(f.coeffs().iter().map(|&c| self.format_elem(c)))
    }

    pub fn parse_poly(&self, text: &str) -> Result<RingPoly> {
        let coeffs = crate::text::parse_poly_nodes(text)?
            .iter()
            .map(|n| self.elem_from_node(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(self, coeffs))
    }

    fn galois_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let m = self.ndigits as usize;
        let r = self.radix as u128;
        let mut prod = vec![0u128; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % r;
            }
        }
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for j in 0..m {
                let sub = c * self.modulus[j] as u128 % r;
                prod[k - m + j] = (prod[k - m + j] + r - sub) % r;
            }
            prod[k] = 0;
        }
        prod[..m].iter().map(|&c| c as u64).collect()
    }

    fn nilpotent_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = &self.residue;
        let t = self.ndigits as usize;
        let mut out = vec![f.zero(); t];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate().take(t - i) {
                out[i + j] = f.add(out[i + j], f.mul(FieldElem(x), FieldElem(y)));
            }
        }
        out.iter().map(|e| e.code()).collect()
    }
}

impl CoeffRing for RingSpec {
    type Elem = RingElem;

    fn zero(&self) -> RingElem {
        RingElem(0)
    }

    fn one(&self) -> RingElem {
        RingElem(1)
    }

    fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        if self.ndigits == 1 && self.family == Family::Galois {
            return RingElem((a.0 + b.0) % self.radix);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = match self.family {
            Family::Galois => da.iter().zip(&db).map(|(x, y)| (x + y) % self.radix).collect(),
            Family::Nilpotent => da
                .iter()
                .zip(&db)
                .map(|(&x, &y)| self.residue.add(FieldElem(x), FieldElem(y)).code())
                .collect(),
        };
        self.pack(&sum)
    }

    fn neg(&self, a: RingElem) -> RingElem {
        let ds = self.digits(a);
        let out: Vec<u64> = match self.family {
            Family::Galois => ds.iter().map(|&x| (self.radix - x) % self.radix).collect(),
            Family::Nilpotent => ds.iter().map(|&x| self.residue.neg(FieldElem(x)).code()).collect(),
        };
        self.pack(&out)
    }

    fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        if self.ndigits == 1 && self.family == Family::Galois {
            return RingElem(arith::mul_mod(a.0, b.0, self.radix));
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let out = match self.family {
            Family::Galois => self.galois_mul(&da, &db),
            Family::Nilpotent => self.nilpotent_mul(&da, &db),
        };
        self.pack(&out)
    }

    fn inv(&self, a: RingElem) -> Option<RingElem> {
        if !self.is_unit(a) {
            return None;
        }
        let q = self.q();
        let units = q.pow(self.t - 1) * (q - 1);
        Some(self.pow(a, units - 1))
    }
}

/// The unique `delta` in `1 + gamma R` with `delta^n = x`, as `x^(n^{-1} mod |1 + gamma R|)`.
pub fn nth_root_in_sylow(ring: &RingSpec, x: RingElem, n: u64) -> Result<RingElem> {
    arith::require_coprime(n, ring.p())?;
    if !ring.is_principal_unit(x) {
        return Err(Error::NotInSylow);
    }
    let sylow = ring.q().pow(ring.t() - 1);
    let w = arith::inv_mod(n % sylow, sylow).expect("n coprime to p");
    let delta = ring.pow(x, w);
    if ring.pow(delta, n) != x {
        return Err(Error::IdentityFailed(format!("{}^{n} != x", ring.format_elem(delta))));
    }
    Ok(delta)
}

/// Monic reciprocal of a ring polynomial with unit constant term.
pub fn star(ring: &RingSpec, g: &RingPoly) -> Result<RingPoly> {
    match g.coeffs().first() {
        Some(&c) if ring.is_unit(c) => Ok(g.reciprocal(ring).expect("unit constant term")),
        _ => Err(Error::ZeroConstantTerm),
    }
}
