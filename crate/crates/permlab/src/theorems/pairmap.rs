//! The bivariate cubic maps (x, y) -> (x^3 - e x y^2 - a x - b y,
//! y^3 - c x - d y) on F_q x F_q: coefficient bijectivity tests for the
//! e = 0 and e != 0 regimes, and the degree-nine one-variable polynomials
//! the fibered argument reduces them to.

use crate::gf::{Fe, FieldCtx};
use crate::poly::Poly;

use super::TheoremError;

/// (a, b, c, d, e) in F_q; e = 0 encodes the map without the x y^2 term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairMapCoeffs {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
    pub d: Fe,
    pub e: Fe,
}

pub fn pair_map_eval(ctx: &FieldCtx, co: PairMapCoeffs, x: Fe, y: Fe) -> (Fe, Fe) {
    let x3 = ctx.mul(ctx.mul(x, x), x);
    let y2 = ctx.mul(y, y);
    let y3 = ctx.mul(y2, y);
    let u = ctx.sub(
        ctx.sub(ctx.sub(x3, ctx.mul(co.e, ctx.mul(x, y2))), ctx.mul(co.a, x)),
        ctx.mul(co.b, y),
    );
    let v = ctx.sub(ctx.sub(y3, ctx.mul(co.c, x)), ctx.mul(co.d, y));
    (u, v)
}

/// Cube and square tables so coefficient campaigns avoid repeated powering.
pub struct PairMapTables {
    cube: Vec<Fe>,
    square: Vec<Fe>,
}

impl PairMapTables {
    pub fn new(ctx: &FieldCtx) -> PairMapTables {
        PairMapTables {
            cube: ctx.elems().map(|x| ctx.pow(x, 3)).collect(),
            square: ctx.elems().map(|x| ctx.pow(x, 2)).collect(),
        }
    }

    #[inline]
    pub fn eval(&self, ctx: &FieldCtx, co: PairMapCoeffs, x: Fe, y: Fe) -> (Fe, Fe) {
        let x3 = self.cube[x.id() as usize];
        let y2 = self.square[y.id() as usize];
        let y3 = self.cube[y.id() as usize];
        let u = ctx.sub(
            ctx.sub(ctx.sub(x3, ctx.mul(co.e, ctx.mul(x, y2))), ctx.mul(co.a, x)),
            ctx.mul(co.b, y),
        );
        let v = ctx.sub(ctx.sub(y3, ctx.mul(co.c, x)), ctx.mul(co.d, y));
        (u, v)
    }

    pub fn is_bijection(&self, ctx: &FieldCtx, co: PairMapCoeffs) -> bool {
        let q = ctx.size() as usize;
        let mut seen = vec![false; q * q];
        for x in ctx.elems() {
            for y in ctx.elems() {
                let (u, v) = self.eval(ctx, co, x, y);
                let idx = u.id() as usize * q + v.id() as usize;
                if seen[idx] {
                    return false;
                }
                seen[idx] = true;
            }
        }
        true
    }
}

/// Bijectivity of (x, y) -> (x^3 - ax - by, y^3 - cx - dy): one of
/// four coefficient alternatives. Requires e = 0.
pub fn thm14_predicate(ctx: &FieldCtx, co: PairMapCoeffs) -> Result<bool, TheoremError> {
    if !co.e.is_zero() {
        return Err(TheoremError::EMustBeZero);
    }
    let q = ctx.size();
    let PairMapCoeffs { a, b, c, d, .. } = co;
    let bc = ctx.mul(b, c);

    // q not 1 mod 3, a = d = bc = 0
    if q % 3 != 1 && a.is_zero() && d.is_zero() && bc.is_zero() {
        return Ok(true);
    }
    if q % 3 == 0 {
        // bc = 0 and each of a, d is zero or a nonsquare. Zero must be
        // admitted: X^3 - 0X is the cubing bijection in characteristic 3,
        // so e.g. (x^3, y^3 - dy) with d a nonsquare is a bijection.
        let ok = |v: Fe| v.is_zero() || !ctx.is_square(v);
        if bc.is_zero() && ok(a) && ok(d) {
            return Ok(true);
        }
        // bc != 0, no nonzero square is a root of
        // X^4 - (a^3 + b^2 d) X + b^2 (ad - bc)
        if !bc.is_zero() {
            let b2 = ctx.mul(b, b);
            let lin = ctx.add(ctx.mul(ctx.mul(a, a), a), ctx.mul(b2, d));
            let cst = ctx.mul(b2, ctx.sub(ctx.mul(a, d), bc));
            let mut ok = true;
            for x in ctx.elems().skip(1) {
                let s = ctx.mul(x, x); // nonzero squares, each visited twice
                let s2 = ctx.mul(s, s);
                let val = ctx.add(ctx.sub(ctx.mul(s2, s2), ctx.mul(lin, s)), cst);
                if val.is_zero() {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(true);
            }
        }
    }
    // q = 2, b = c = 1, 1 in {a, d}
    Ok(q == 2 && b == ctx.one() && c == ctx.one() && (a == ctx.one() || d == ctx.one()))
}

/// Bijectivity of (x, y) -> (x^3 - e x y^2 - ax - by, y^3 - cx - dy) for
/// 3 | q and e != 0: c = 0, d zero or a nonsquare, and either a = 0 with e
/// a nonsquare, or q = 3 with a = -1 and e = 1. b is unconstrained.
pub fn thm15_predicate(ctx: &FieldCtx, co: PairMapCoeffs) -> Result<bool, TheoremError> {
    if co.e.is_zero() {
        return Err(TheoremError::EMustBeNonzero);
    }
    let q = ctx.size();
    if q % 3 != 0 {
        return Err(TheoremError::CharThreeRequired);
    }
    let PairMapCoeffs { a, c, d, e, .. } = co;
    if !c.is_zero() {
        return Ok(false);
    }
    if !d.is_zero() && ctx.is_square(d) {
        return Ok(false);
    }
    let alt1 = a.is_zero() && !ctx.is_square(e);
    let alt2 = q == 3 && a == ctx.from_int(-1) && e == ctx.one();
    Ok(alt1 || alt2)
}

/// The degree-nine polynomial tracking the first family along the fiber of
/// first-coordinate value u: with t(X) = (X^3 - aX - u)/b,
/// H_u(X) = t(X)^3 - cX - d t(X). Requires b != 0.
pub fn hu_family(ctx: &FieldCtx, co: PairMapCoeffs, u: Fe) -> Result<Poly, TheoremError> {
    if co.b.is_zero() {
        return Err(TheoremError::CoefficientZero);
    }
    let binv = ctx.inv(co.b).unwrap();
    // t = (X^3 - aX - u) / b
    let t = Poly::from_coeffs(
        ctx,
        vec![
            ctx.mul(ctx.neg(u), binv),
            ctx.mul(ctx.neg(co.a), binv),
            ctx.zero(),
            binv,
        ],
    );
    let t3 = t.mul(ctx, &t).mul(ctx, &t);
    let cx = Poly::from_coeffs(ctx, vec![ctx.zero(), co.c]);
    Ok(t3.sub(ctx, &cx).sub(ctx, &t.scale(ctx, co.d)))
}

/// The second family's fiber polynomial for second-coordinate value v:
/// with s(Y) = Y^3 - dY - v,
/// H_v(Y) = s^3 - e c^2 s Y^2 - a c^2 s - b c^3 Y. Requires c != 0.
pub fn hv_family(ctx: &FieldCtx, co: PairMapCoeffs, v: Fe) -> Result<Poly, TheoremError> {
    if co.c.is_zero() {
        return Err(TheoremError::CoefficientZero);
    }
    let s = Poly::from_coeffs(ctx, vec![ctx.neg(v), ctx.neg(co.d), ctx.zero(), ctx.one()]);
    let s3 = s.mul(ctx, &s).mul(ctx, &s);
    let c2 = ctx.mul(co.c, co.c);
    let c3 = ctx.mul(c2, co.c);
    let y2 = Poly::monomial(ctx, ctx.one(), 2);
    let term2 = s.mul(ctx, &y2).scale(ctx, ctx.mul(co.e, c2));
    let term3 = s.scale(ctx, ctx.mul(co.a, c2));
    let term4 = Poly::monomial(ctx, ctx.mul(co.b, c3), 1);
    Ok(s3.sub(ctx, &term2).sub(ctx, &term3).sub(ctx, &term4))
}
