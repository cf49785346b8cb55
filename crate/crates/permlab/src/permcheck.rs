//! Bijectivity oracles: brute-force permutation and complete-mapping tests,
//! Hermite's criterion, bijectivity of bivariate maps on F_q x F_q, and
//! bijectivity of rational maps on mu_{q+1} and the projective line.

use thiserror::Error;

use crate::gf::quad::MuSubgroup;
use crate::gf::{Fe, FieldCtx};
use crate::poly::Poly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermcheckError {
    #[error("rational function is constant")]
    ConstantFunction,
}

/// A point of the projective line over a field: an element or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointP1 {
    Fin(Fe),
    Inf,
}

/// num/den over one field, expected coprime (cancellation is the caller's
/// duty); den is nonzero.
#[derive(Debug, Clone)]
pub struct RationalFn {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> RationalFn {
        assert!(!den.is_zero(), "zero denominator");
        RationalFn { num, den }
    }

    pub fn from_poly(p: Poly, ctx: &FieldCtx) -> RationalFn {
        RationalFn {
            num: p,
            den: Poly::one(ctx),
        }
    }

    /// max(deg num, deg den); meaningful once num and den are coprime.
    pub fn degree(&self) -> usize {
        let dn = self.num.degree().map_or(0, |d| d);
        let dd = self.den.degree().map_or(0, |d| d);
        dn.max(dd)
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().map_or(0, |d| d) == 0 && self.den.degree().map_or(0, |d| d) == 0
    }

    /// Projective evaluation. A denominator zero gives infinity; at infinity
    /// the value is decided by degree comparison, with the ratio of leading
    /// coefficients on equal degrees.
    pub fn eval_p1(&self, ctx: &FieldCtx, x: PointP1) -> PointP1 {
        match x {
            PointP1::Fin(v) => {
                let d = self.den.eval(ctx, v);
                let n = self.num.eval(ctx, v);
                if d.is_zero() {
                    assert!(!n.is_zero(), "uncancelled common root in rational function");
                    PointP1::Inf
                } else {
                    PointP1::Fin(ctx.div(n, d).unwrap())
                }
            }
            PointP1::Inf => {
                let dn = self.num.degree();
                let dd = self.den.degree();
                match (dn, dd) {
                    (None, _) => PointP1::Fin(ctx.zero()),
                    (Some(_), None) => unreachable!("denominator is nonzero"),
                    (Some(a), Some(b)) if a > b => PointP1::Inf,
                    (Some(a), Some(b)) if a < b => PointP1::Fin(ctx.zero()),
                    _ => PointP1::Fin(
                        ctx.div(self.num.leading(ctx), self.den.leading(ctx))
                            .unwrap(),
                    ),
                }
            }
        }
    }
}

/// True iff x -> f(x) hits every field element exactly once; visited bitmap
/// with early exit, injectivity sufficing on a finite domain.
pub fn is_permutation_poly(ctx: &FieldCtx, f: &Poly) -> bool {
    let n = ctx.size();
    let f = if f.degree().map_or(0, |d| d as u64) >= n {
        f.reduce_mod_xn_minus_x(ctx, n)
    } else {
        f.clone()
    };
    let mut seen = vec![false; n as usize];
    for x in ctx.elems() {
        let y = f.eval(ctx, x).id() as usize;
        if seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

/// True iff both f and f + X permute the field.
pub fn is_complete_mapping(ctx: &FieldCtx, f: &Poly) -> bool {
    is_permutation_poly(ctx, f) && is_permutation_poly(ctx, &f.add(ctx, &Poly::x(ctx)))
}

/// Hermite's criterion over a field of size N with characteristic p:
/// f permutes iff (i) for every m with 0 < m < N-1 and p not dividing m the
/// reduction of f^m mod X^N - X has degree below N-1, and (ii) f has
/// exactly one root.
pub fn hermite_permutes(ctx: &FieldCtx, f: &Poly) -> bool {
    let n = ctx.size();
    let p = ctx.characteristic();
    let f = f.reduce_mod_xn_minus_x(ctx, n);
    let roots = ctx.elems().filter(|&x| f.eval(ctx, x).is_zero()).count();
    if roots != 1 {
        return false;
    }
    let mut power = Poly::one(ctx);
    for m in 1..=n.saturating_sub(2) {
        power = power.mul(ctx, &f).reduce_mod_xn_minus_x(ctx, n);
        if m % p == 0 {
            continue;
        }
        if power.degree() == Some(n as usize - 1) {
            return false;
        }
    }
    true
}

/// The Hermite obstruction coefficient: the X^{N-1} coefficient of the
/// reduction of f^m mod X^N - X, N the field size.
pub fn coeff_profile(ctx: &FieldCtx, f: &Poly, m: u64) -> Fe {
    let n = ctx.size();
    f.pow_reduce(ctx, m, n).coeff(ctx, n as usize - 1)
}

/// True iff (x, y) -> map(x, y) hits every pair exactly once.
pub fn bivariate_is_bijection(ctx: &FieldCtx, map: impl Fn(Fe, Fe) -> (Fe, Fe)) -> bool {
    let q = ctx.size() as usize;
    let mut seen = vec![false; q * q];
    for x in ctx.elems() {
        for y in ctx.elems() {
            let (u, v) = map(x, y);
            let idx = u.id() as usize * q + v.id() as usize;
            if seen[idx] {
                return false;
            }
            seen[idx] = true;
        }
    }
    true
}

/// The finite domain a rational map is tested on.
pub enum RatDomain<'a> {
    Mu(&'a MuSubgroup),
    ProjLine,
}

/// Evaluates the map on the domain with the projective conventions and
/// tests that it is a bijection of the domain onto itself.
pub fn rational_permutes(
    ctx: &FieldCtx,
    f: &RationalFn,
    domain: RatDomain<'_>,
) -> Result<bool, PermcheckError> {
    if f.is_constant() {
        return Err(PermcheckError::ConstantFunction);
    }
    match domain {
        RatDomain::Mu(mu) => {
            let mut seen = vec![false; ctx.size() as usize];
            for &x in mu.elements() {
                match f.eval_p1(ctx, PointP1::Fin(x)) {
                    PointP1::Fin(y) if mu.contains(y) => {
                        if seen[y.id() as usize] {
                            return Ok(false);
                        }
                        seen[y.id() as usize] = true;
                    }
                    _ => return Ok(false),
                }
            }
            Ok(true)
        }
        RatDomain::ProjLine => {
            let n = ctx.size() as usize;
            let mut seen = vec![false; n + 1];
            let points = ctx
                .elems()
                .map(PointP1::Fin)
                .chain(std::iter::once(PointP1::Inf));
            for x in points {
                let idx = match f.eval_p1(ctx, x) {
                    PointP1::Fin(y) => y.id() as usize,
                    PointP1::Inf => n,
                };
                if seen[idx] {
                    return Ok(false);
                }
                seen[idx] = true;
            }
            Ok(true)
        }
    }
}
