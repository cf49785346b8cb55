//! Construction of small finite fields F_{p^k} and their arithmetic.
//!
//! Elements are dense integer ids: the element with base-p digit vector
//! (c_0, ..., c_{k-1}) representing c_0 + c_1*x + ... + c_{k-1}*x^{k-1}
//! (mod the field's irreducible modulus) has id c_0 + c_1*p + ... .
//! Fields of size up to 2^20 carry full exp/log tables keyed to a fixed
//! generator; larger fields (up to the 2^32 cap) fall back to polynomial
//! arithmetic so the API stays total.

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use thiserror::Error;

pub mod linear;
pub mod quad;

pub use linear::{JoinIso, LinearQPoly, SplitIso};
pub use quad::{field_isomorphisms, MuSubgroup, QuadExtCtx};

/// Largest field size we agree to construct at all.
pub const SIZE_CAP: u64 = 1 << 32;
/// Largest field size for which exp/log tables are built.
pub const TABLE_LIMIT: u64 = 1 << 20;
/// Largest field size for which a full addition table is built.
const ADD_TABLE_LIMIT: u64 = 1 << 10;

static NEXT_FIELD_TAG: AtomicU32 = AtomicU32::new(1);

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{k} exceeds the cap of 2^32")]
    SizeCapExceeded { p: u64, k: u32 },
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    BadModulusShape { expected: u32, got: usize },
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("map is not invertible: a^(q+1) = b^(q+1)")]
    NonInvertibleLinear,
    #[error("parameters violate a^(q-1) != b^(q-1) or are zero")]
    BadIsoParams,
    #[error("element id {id} out of range for field of size {size}")]
    NoSuchElement { id: u64, size: u64 },
    #[error("no root of the base modulus in the extension; fields are unrelated")]
    NotAnExtension,
    #[error("fields have different size or characteristic")]
    IncompatibleFields,
}

/// Shape parameters of a finite field: q = p^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
}

impl FieldSpec {
    pub fn new(p: u64, k: u32) -> Self {
        FieldSpec { p, k }
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.k)
    }

    fn checked_q(&self) -> Option<u64> {
        self.p.checked_pow(self.k).filter(|&q| q <= SIZE_CAP)
    }
}

/// A field element: a dense id plus the tag of the field it belongs to.
///
/// All arithmetic goes through [`FieldCtx`] methods, which assert that the
/// tags match.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    id: u32,
    field: u32,
}

impl Fe {
    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn is_zero(&self) -> bool {
        self.id == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({}#{})", self.id, self.field)
    }
}

enum AddRepr {
    /// Characteristic 2: ids xor.
    Xor,
    /// Full pairwise table for small fields.
    Table(Vec<u32>),
    /// Digit-wise addition computed on the fly.
    Digits,
}

/// A concrete finite field with tables and a validated modulus.
pub struct FieldCtx {
    spec: FieldSpec,
    size: u64,
    tag: u32,
    /// Monic modulus, digits low-to-high, length k+1, leading digit 1.
    modulus: Vec<u64>,
    generator: u32,
    /// exp[i] = generator^i for 0 <= i < 2(q-1); empty without tables.
    exp: Vec<u32>,
    /// log[x] for x != 0; log[0] is a sentinel. Empty without tables.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: AddRepr,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldCtx(p={}, k={}, tag={})",
            self.spec.p, self.spec.k, self.tag
        )
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense polynomial arithmetic over F_p, digits low-to-high, used while the
/// field tables do not exist yet (modulus validation, generator search) and
/// as the fallback multiplication for oversized fields.
mod ppoly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of a modulo the monic polynomial m.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            if lead != 0 {
                for (i, &mi) in m.iter().enumerate() {
                    let idx = shift + i;
                    let sub = (lead * mi) % p;
                    r[idx] = (r[idx] + p - sub) % p;
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), m, p)
    }

    /// x^e mod m, where x is the polynomial X.
    pub fn x_powmod(e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(&[0, 1], m, p);
        let mut acc = vec![1u64];
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, m, p);
            }
            base = mulmod(&base, &base, m, p);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            // make b monic for rem()
            let lead = *b.last().unwrap();
            if lead != 1 {
                let inv = mod_inverse(lead, p);
                for c in b.iter_mut() {
                    *c = (*c * inv) % p;
                }
            }
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn mod_inverse(a: u64, p: u64) -> u64 {
        // Fermat; p is prime and a != 0.
        let mut acc = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }
}

/// Irreducibility over F_p via the Frobenius criterion: m of degree k is
/// irreducible iff X^(p^k) = X mod m and gcd(X^(p^(k/t)) - X, m) = 1 for
/// every prime t dividing k.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = (m.len() - 1) as u32;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let pk = match p.checked_pow(k) {
        Some(v) => v,
        None => return false,
    };
    let xq = ppoly::x_powmod(pk, m, p);
    // X^(p^k) - X must be 0 mod m
    let mut diff = xq.clone();
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    ppoly::trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    for t in prime_factors(k as u64) {
        let e = p.pow((k as u64 / t) as u32);
        let mut d = ppoly::x_powmod(e, m, p);
        if d.len() < 2 {
            d.resize(2, 0);
        }
        d[1] = (d[1] + p - 1) % p;
        ppoly::trim(&mut d);
        let g = ppoly::gcd(m, &d, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// Builds F_{p^k} with the given modulus, or the default one: the monic
    /// irreducible of degree k whose low-coefficient vector encodes the
    /// smallest base-p integer.
    pub fn build(spec: FieldSpec, modulus: Option<&[u64]>) -> Result<FieldCtx, GfError> {
        if !is_prime(spec.p) {
            return Err(GfError::NotPrime(spec.p));
        }
        if spec.k == 0 {
            return Err(GfError::ZeroDegree);
        }
        let size = spec.checked_q().ok_or(GfError::SizeCapExceeded {
            p: spec.p,
            k: spec.k,
        })?;
        let p = spec.p;
        let k = spec.k;

        let modulus: Vec<u64> = match modulus {
            Some(m) => {
                let mut m = m.to_vec();
                ppoly::trim(&mut m);
                if m.len() != k as usize + 1 || *m.last().unwrap() != 1 {
                    return Err(GfError::BadModulusShape {
                        expected: k,
                        got: m.len().saturating_sub(1),
                    });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(GfError::BadModulusShape {
                        expected: k,
                        got: m.len() - 1,
                    });
                }
                if !is_irreducible(&m, p) {
                    return Err(GfError::ReducibleModulus { p });
                }
                m
            }
            None => Self::default_modulus(p, k),
        };

        let tag = NEXT_FIELD_TAG.fetch_add(1, Ordering::Relaxed);
        let mut ctx = FieldCtx {
            spec,
            size,
            tag,
            modulus,
            generator: 0,
            exp: vec![],
            log: vec![],
            neg: vec![],
            add: if p == 2 {
                AddRepr::Xor
            } else {
                AddRepr::Digits
            },
        };

        if size <= TABLE_LIMIT {
            ctx.build_tables()?;
        }
        if p != 2 && size <= ADD_TABLE_LIMIT {
            let n = size as usize;
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in a..n {
                    let s = ctx.add_digits(a as u32, b as u32);
                    table[a * n + b] = s;
                    table[b * n + a] = s;
                }
            }
            ctx.add = AddRepr::Table(table);
        }
        if p != 2 {
            let n = size as usize;
            if size <= TABLE_LIMIT {
                let mut neg = vec![0u32; n];
                for (a, slot) in neg.iter_mut().enumerate() {
                    *slot = ctx.neg_digits(a as u32);
                }
                ctx.neg = neg;
            }
        }
        Ok(ctx)
    }

    fn default_modulus(p: u64, k: u32) -> Vec<u64> {
        let q = p.pow(k);
        for enc in 0..q {
            let mut m = Vec::with_capacity(k as usize + 1);
            let mut e = enc;
            for _ in 0..k {
                m.push(e % p);
                e /= p;
            }
            m.push(1);
            if is_irreducible(&m, p) {
                return m;
            }
        }
        unreachable!("an irreducible polynomial of each degree exists");
    }

    fn build_tables(&mut self) -> Result<(), GfError> {
        let q = self.size;
        let p = self.spec.p;
        let order = q - 1;
        let factors = prime_factors(order);
        let mut generator = None;
        'cand: for id in 1..q {
            let digits = self.id_to_digits(id as u32);
            for &f in &factors {
                let pw = self.ppow(&digits, order / f);
                if pw == [1] {
                    continue 'cand;
                }
            }
            generator = Some(id as u32);
            break;
        }
        let g = generator.expect("multiplicative group of a finite field is cyclic");
        self.generator = g;

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![u32::MAX; q as usize];
        let gd = self.id_to_digits(g);
        let mut cur = vec![1u64];
        for i in 0..order as usize {
            let id = self.digits_to_id(&cur);
            exp[i] = id;
            exp[i + order as usize] = id;
            log[id as usize] = i as u32;
            cur = ppoly::mulmod(&cur, &gd, &self.modulus, p);
        }
        if cur != [1] {
            // the generator's order must be exactly q-1
            return Err(GfError::ReducibleModulus { p });
        }
        self.exp = exp;
        self.log = log;
        Ok(())
    }

    fn id_to_digits(&self, id: u32) -> Vec<u64> {
        let p = self.spec.p;
        let mut v = Vec::with_capacity(self.spec.k as usize);
        let mut e = id as u64;
        while e > 0 {
            v.push(e % p);
            e /= p;
        }
        v
    }

    fn digits_to_id(&self, d: &[u64]) -> u32 {
        let p = self.spec.p;
        let mut id = 0u64;
        for &c in d.iter().rev() {
            id = id * p + c;
        }
        id as u32
    }

    fn ppow(&self, base: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = ppoly::mulmod(&acc, &b, &self.modulus, self.spec.p);
            }
            b = ppoly::mulmod(&b, &b, &self.modulus, self.spec.p);
            e >>= 1;
        }
        acc
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p;
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut a = a as u64;
        let mut b = b as u64;
        while a > 0 || b > 0 {
            let s = (a % p + b % p) % p;
            out += s * mult;
            mult *= p;
            a /= p;
            b /= p;
        }
        out as u32
    }

    fn neg_digits(&self, a: u32) -> u32 {
        let p = self.spec.p;
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut a = a as u64;
        while a > 0 {
            let d = a % p;
            out += if d == 0 { 0 } else { p - d } * mult;
            mult *= p;
            a /= p;
        }
        out as u32
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn tag(&self) -> u32 {
        self.tag
    }

    /// Modulus digits low-to-high, length k+1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn has_tables(&self) -> bool {
        !self.exp.is_empty()
    }

    pub fn zero(&self) -> Fe {
        Fe {
            id: 0,
            field: self.tag,
        }
    }

    pub fn one(&self) -> Fe {
        Fe {
            id: 1,
            field: self.tag,
        }
    }

    pub fn generator(&self) -> Fe {
        assert!(self.has_tables(), "no generator without tables");
        Fe {
            id: self.generator,
            field: self.tag,
        }
    }

    pub fn el(&self, id: u64) -> Result<Fe, GfError> {
        if id < self.size {
            Ok(Fe {
                id: id as u32,
                field: self.tag,
            })
        } else {
            Err(GfError::NoSuchElement {
                id,
                size: self.size,
            })
        }
    }

    /// Integer constant reduced into the field through its prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.spec.p as i64;
        let r = n.rem_euclid(p) as u32;
        Fe {
            id: r,
            field: self.tag,
        }
    }

    pub fn elems(&self) -> impl Iterator<Item = Fe> + '_ {
        let tag = self.tag;
        (0..self.size).map(move |id| Fe {
            id: id as u32,
            field: tag,
        })
    }

    #[inline]
    pub fn owns(&self, x: Fe) -> bool {
        x.field == self.tag
    }

    #[inline]
    fn check(&self, x: Fe) {
        assert!(
            x.field == self.tag,
            "element from field #{} used in field #{}",
            x.field,
            self.tag
        );
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        let id = match &self.add {
            AddRepr::Xor => a.id ^ b.id,
            AddRepr::Table(t) => t[a.id as usize * self.size as usize + b.id as usize],
            AddRepr::Digits => self.add_digits(a.id, b.id),
        };
        Fe {
            id,
            field: self.tag,
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.check(a);
        let id = match &self.add {
            AddRepr::Xor => a.id,
            _ => {
                if self.neg.is_empty() {
                    self.neg_digits(a.id)
                } else {
                    self.neg[a.id as usize]
                }
            }
        };
        Fe {
            id,
            field: self.tag,
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        if a.id == 0 || b.id == 0 {
            return self.zero();
        }
        if self.has_tables() {
            let i = self.log[a.id as usize] as usize + self.log[b.id as usize] as usize;
            Fe {
                id: self.exp[i],
                field: self.tag,
            }
        } else {
            let prod = ppoly::mulmod(
                &self.id_to_digits(a.id),
                &self.id_to_digits(b.id),
                &self.modulus,
                self.spec.p,
            );
            Fe {
                id: self.digits_to_id(&prod),
                field: self.tag,
            }
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, GfError> {
        self.check(a);
        if a.id == 0 {
            return Err(GfError::DivisionByZero);
        }
        if self.has_tables() {
            let l = self.log[a.id as usize] as u64;
            let order = self.size - 1;
            let id = self.exp[((order - l) % order) as usize];
            Ok(Fe {
                id,
                field: self.tag,
            })
        } else {
            Ok(self.pow(a, self.size - 2))
        }
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// x^n with the exponent reduced mod q-1 for nonzero x; 0^0 = 1.
    pub fn pow(&self, a: Fe, n: u64) -> Fe {
        self.check(a);
        if a.id == 0 {
            return if n == 0 { self.one() } else { self.zero() };
        }
        let order = self.size - 1;
        let e = n % order;
        if self.has_tables() {
            let l = self.log[a.id as usize] as u64;
            // l*e can reach 2^40 for the largest table fields; u64 is plenty
            let id = self.exp[((l * e) % order) as usize];
            Fe {
                id,
                field: self.tag,
            }
        } else {
            let d = self.ppow(&self.id_to_digits(a.id), e);
            Fe {
                id: self.digits_to_id(&d),
                field: self.tag,
            }
        }
    }

    /// Frobenius of the prime subfield: x -> x^p.
    pub fn frobenius_p(&self, a: Fe) -> Fe {
        self.pow(a, self.spec.p)
    }

    /// True iff x is a square. Every element of a field of characteristic 2
    /// is a square, so the test only discriminates in odd characteristic.
    pub fn is_square(&self, a: Fe) -> bool {
        self.check(a);
        if a.id == 0 || self.spec.p == 2 {
            return true;
        }
        if self.has_tables() {
            self.log[a.id as usize] % 2 == 0
        } else {
            self.pow(a, (self.size - 1) / 2) == self.one()
        }
    }

    /// Discrete log of a nonzero element with respect to the fixed generator.
    pub fn dlog(&self, a: Fe) -> Result<u64, GfError> {
        self.check(a);
        assert!(self.has_tables(), "no logs without tables");
        if a.id == 0 {
            return Err(GfError::DivisionByZero);
        }
        Ok(self.log[a.id as usize] as u64)
    }

    /// generator^i.
    pub fn exp_gen(&self, i: u64) -> Fe {
        assert!(self.has_tables(), "no exp table");
        let order = self.size - 1;
        Fe {
            id: self.exp[(i % order) as usize],
            field: self.tag,
        }
    }

    /// Renders an element as 0, 1 or g^i over the fixed generator.
    pub fn display(&self, a: Fe) -> String {
        self.check(a);
        if a.id == 0 {
            return "0".into();
        }
        if a.id == 1 {
            return "1".into();
        }
        if self.has_tables() {
            format!("g^{}", self.log[a.id as usize])
        } else {
            format!("#{}", a.id)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_modulus_f4_is_the_only_irreducible() {
        // enumerate monic degree-2 polynomials over F_2 and test directly
        let reducible = |m: &[u64]| {
            // degree-2 poly over F_2 is reducible iff it has a root in F_2
            let ev = |x: u64| (m[0] + m[1] * x + m[2] * x * x) % 2;
            ev(0) == 0 || ev(1) == 0
        };
        let mut found = vec![];
        for enc in 0..4u64 {
            let m = [enc % 2, enc / 2, 1];
            if !reducible(&m) {
                found.push(m.to_vec());
            }
        }
        assert_eq!(found, vec![vec![1, 1, 1]]);
        let f4 = FieldCtx::build(FieldSpec::new(2, 2), None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn f9_accepts_x2_plus_1() {
        // -1 is a non-residue mod 3, so X^2+1 is irreducible over F_3
        assert!(![0u64, 1, 2].iter().any(|&x| (x * x + 1) % 3 == 0));
        let f9 = FieldCtx::build(FieldSpec::new(3, 2), Some(&[1, 0, 1])).unwrap();
        assert_eq!(f9.size(), 9);
        // and it is also the default (encoding 1 is the first irreducible)
        let f9d = FieldCtx::build(FieldSpec::new(3, 2), None).unwrap();
        assert_eq!(f9d.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn prime_field_trivial() {
        let f2 = FieldCtx::build(FieldSpec::new(2, 1), None).unwrap();
        assert_eq!(f2.size(), 2);
        let one = f2.one();
        assert_eq!(f2.add(one, one), f2.zero());
    }

    #[test]
    fn build_rejects_bad_inputs() {
        assert_eq!(
            FieldCtx::build(FieldSpec::new(6, 1), None).unwrap_err(),
            GfError::NotPrime(6)
        );
        assert_eq!(
            FieldCtx::build(FieldSpec::new(3, 0), None).unwrap_err(),
            GfError::ZeroDegree
        );
        // X^2+X is reducible over F_2
        assert_eq!(
            FieldCtx::build(FieldSpec::new(2, 2), Some(&[0, 1, 1])).unwrap_err(),
            GfError::ReducibleModulus { p: 2 }
        );
        assert_eq!(
            FieldCtx::build(FieldSpec::new(2, 40), None).unwrap_err(),
            GfError::SizeCapExceeded { p: 2, k: 40 }
        );
    }

    #[test]
    fn mid_size_fields_build_and_behave() {
        for (p, k) in [(2u64, 12u32), (3, 7)] {
            let f = FieldCtx::build(FieldSpec::new(p, k), None).unwrap();
            assert!(f.has_tables());
            let g = f.generator();
            assert_eq!(f.pow(g, f.size() - 1), f.one());
            // spot-check arithmetic against the digit fallback
            for id in [1u64, 2, 37, f.size() - 2] {
                let x = f.el(id).unwrap();
                assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
                assert_eq!(f.add(x, f.neg(x)), f.zero());
                let mut fr = x;
                for _ in 0..k {
                    fr = f.frobenius_p(fr);
                }
                assert_eq!(fr, x);
            }
        }
    }

    #[test]
    fn f4_multiplication_and_addition() {
        let f4 = FieldCtx::build(FieldSpec::new(2, 2), None).unwrap();
        // omega = x has id 2; omega^2 = x+1 has id 3
        let w = f4.el(2).unwrap();
        let w2 = f4.el(3).unwrap();
        assert_eq!(f4.mul(w, w), w2);
        assert_eq!(f4.mul(w, w2), f4.one());
        // omega + omega^2 = 1 in characteristic 2 with modulus X^2+X+1
        assert_eq!(f4.add(w, w2), f4.one());
    }

    #[test]
    fn f9_minus_one_squares_to_one() {
        let f9 = FieldCtx::build(FieldSpec::new(3, 2), None).unwrap();
        let m1 = f9.from_int(-1);
        assert_eq!(f9.mul(m1, m1), f9.one());
    }

    #[test]
    fn exp_log_mutual_inverses() {
        for (p, k) in [(2, 2), (3, 2), (5, 1), (2, 4), (3, 3)] {
            let f = FieldCtx::build(FieldSpec::new(p, k), None).unwrap();
            let order = f.size() - 1;
            for x in f.elems().skip(1) {
                assert_eq!(f.exp_gen(f.dlog(x).unwrap()), x);
            }
            for i in 0..order {
                assert_eq!(f.dlog(f.exp_gen(i)).unwrap(), i);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(2, 2), (3, 2), (5, 1), (7, 1)] {
            let f = FieldCtx::build(FieldSpec::new(p, k), None).unwrap();
            let els: Vec<Fe> = f.elems().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative() {
        // exhaustive for sizes up to 256
        for (p, k) in [(2, 4), (3, 2), (2, 8), (5, 2), (13, 1)] {
            let f = FieldCtx::build(FieldSpec::new(p, k), None).unwrap();
            if f.size() > 256 {
                continue;
            }
            for a in f.elems() {
                for b in f.elems() {
                    assert_eq!(
                        f.frobenius_p(f.add(a, b)),
                        f.add(f.frobenius_p(a), f.frobenius_p(b))
                    );
                    assert_eq!(
                        f.frobenius_p(f.mul(a, b)),
                        f.mul(f.frobenius_p(a), f.frobenius_p(b))
                    );
                }
                // x^p iterated k times is the identity
                let mut x = a;
                for _ in 0..k {
                    x = f.frobenius_p(x);
                }
                assert_eq!(x, a);
            }
        }
    }

    #[test]
    fn squares_of_f3() {
        let f3 = FieldCtx::build(FieldSpec::new(3, 1), None).unwrap();
        // squares of F_3 are {0, 1}
        let squares: Vec<u32> = f3.elems().map(|x| f3.mul(x, x).id()).collect();
        assert!(squares.contains(&0) && squares.contains(&1) && !squares.contains(&2));
        assert!(f3.is_square(f3.zero()));
        assert!(f3.is_square(f3.one()));
        assert!(!f3.is_square(f3.el(2).unwrap()));
    }

    #[test]
    fn every_element_of_char2_is_square() {
        let f4 = FieldCtx::build(FieldSpec::new(2, 2), None).unwrap();
        assert!(f4.elems().all(|x| f4.is_square(x)));
    }

    #[test]
    fn fallback_arithmetic_matches_tables() {
        // force the fallback by building the same field with tables stripped
        let spec = FieldSpec::new(3, 2);
        let tabled = FieldCtx::build(spec, None).unwrap();
        let mut plain = FieldCtx::build(spec, None).unwrap();
        plain.exp.clear();
        plain.log.clear();
        plain.neg.clear();
        plain.add = AddRepr::Digits;
        for a in 0..9u64 {
            for b in 0..9u64 {
                let (ta, tb) = (tabled.el(a).unwrap(), tabled.el(b).unwrap());
                let (pa, pb) = (plain.el(a).unwrap(), plain.el(b).unwrap());
                assert_eq!(tabled.mul(ta, tb).id(), plain.mul(pa, pb).id());
                assert_eq!(tabled.add(ta, tb).id(), plain.add(pa, pb).id());
                if b != 0 {
                    assert_eq!(
                        tabled.div(ta, tb).unwrap().id(),
                        plain.div(pa, pb).unwrap().id()
                    );
                }
            }
            assert_eq!(
                tabled.pow(tabled.el(a).unwrap(), 7).id(),
                plain.pow(plain.el(a).unwrap(), 7).id()
            );
        }
    }

    #[test]
    #[should_panic(expected = "used in field")]
    fn context_mismatch_panics() {
        let f4 = FieldCtx::build(FieldSpec::new(2, 2), None).unwrap();
        let f9 = FieldCtx::build(FieldSpec::new(3, 2), None).unwrap();
        let _ = f4.add(f4.one(), f9.one());
    }
}
