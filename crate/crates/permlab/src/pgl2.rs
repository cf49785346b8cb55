//! Degree-one rational maps (z -> (az+b)/(cz+d)) over a field, as 2x2
//! matrices up to scalar, acting on the projective line.

use crate::gf::{Fe, FieldCtx};
use crate::permcheck::{PointP1, RationalFn};
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mobius {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
    pub d: Fe,
}

impl Mobius {
    /// None when ad - bc = 0.
    pub fn new(ctx: &FieldCtx, a: Fe, b: Fe, c: Fe, d: Fe) -> Option<Mobius> {
        let det = ctx.sub(ctx.mul(a, d), ctx.mul(b, c));
        if det.is_zero() {
            None
        } else {
            Some(Mobius { a, b, c, d })
        }
    }

    pub fn identity(ctx: &FieldCtx) -> Mobius {
        Mobius {
            a: ctx.one(),
            b: ctx.zero(),
            c: ctx.zero(),
            d: ctx.one(),
        }
    }

    pub fn eval(&self, ctx: &FieldCtx, z: PointP1) -> PointP1 {
        match z {
            PointP1::Fin(v) => {
                let den = ctx.add(ctx.mul(self.c, v), self.d);
                let num = ctx.add(ctx.mul(self.a, v), self.b);
                if den.is_zero() {
                    PointP1::Inf
                } else {
                    PointP1::Fin(ctx.div(num, den).unwrap())
                }
            }
            PointP1::Inf => {
                if self.c.is_zero() {
                    PointP1::Inf
                } else {
                    PointP1::Fin(ctx.div(self.a, self.c).unwrap())
                }
            }
        }
    }

    /// Adjugate; the scalar determinant does not matter projectively.
    pub fn inverse(&self, ctx: &FieldCtx) -> Mobius {
        Mobius {
            a: self.d,
            b: ctx.neg(self.b),
            c: ctx.neg(self.c),
            d: self.a,
        }
    }

    /// self after other: (self * other)(z) = self(other(z)).
    pub fn compose(&self, ctx: &FieldCtx, other: &Mobius) -> Mobius {
        Mobius {
            a: ctx.add(ctx.mul(self.a, other.a), ctx.mul(self.b, other.c)),
            b: ctx.add(ctx.mul(self.a, other.b), ctx.mul(self.b, other.d)),
            c: ctx.add(ctx.mul(self.c, other.a), ctx.mul(self.d, other.c)),
            d: ctx.add(ctx.mul(self.c, other.b), ctx.mul(self.d, other.d)),
        }
    }

    pub fn to_rational(&self, ctx: &FieldCtx) -> RationalFn {
        RationalFn::new(
            Poly::from_coeffs(ctx, vec![self.b, self.a]),
            Poly::from_coeffs(ctx, vec![self.d, self.c]),
        )
    }

    /// The unique degree-one map sending the three distinct source points to
    /// the three distinct target points; None on repeated points.
    pub fn through(ctx: &FieldCtx, src: [PointP1; 3], dst: [PointP1; 3]) -> Option<Mobius> {
        let t = to_zero_one_inf(ctx, src)?;
        let s = to_zero_one_inf(ctx, dst)?;
        Some(s.inverse(ctx).compose(ctx, &t))
    }

    /// Enumerates all q^3 - q elements of the group, normalized so the first
    /// nonzero coefficient of (a, b, c, d) is 1, in lexicographic id order.
    pub fn all(ctx: &FieldCtx) -> Vec<Mobius> {
        let mut out = vec![];
        let one = ctx.one();
        // a = 1, or a = 0 and c = 1 (b free; d constrained by det != 0)
        for b in ctx.elems() {
            for c in ctx.elems() {
                for d in ctx.elems() {
                    if let Some(m) = Mobius::new(ctx, one, b, c, d) {
                        out.push(m);
                    }
                }
            }
        }
        for b in ctx.elems() {
            for d in ctx.elems() {
                if let Some(m) = Mobius::new(ctx, ctx.zero(), b, one, d) {
                    out.push(m);
                }
            }
        }
        out
    }
}

/// Matrix of the map sending (p1, p2, p3) to (0, 1, inf).
fn to_zero_one_inf(ctx: &FieldCtx, pts: [PointP1; 3]) -> Option<Mobius> {
    if pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2] {
        return None;
    }
    let m = match pts {
        [PointP1::Fin(p1), PointP1::Fin(p2), PointP1::Fin(p3)] => {
            let u = ctx.sub(p2, p3);
            let v = ctx.sub(p2, p1);
            Mobius {
                a: u,
                b: ctx.neg(ctx.mul(p1, u)),
                c: v,
                d: ctx.neg(ctx.mul(p3, v)),
            }
        }
        [PointP1::Inf, PointP1::Fin(p2), PointP1::Fin(p3)] => Mobius {
            a: ctx.zero(),
            b: ctx.sub(p2, p3),
            c: ctx.one(),
            d: ctx.neg(p3),
        },
        [PointP1::Fin(p1), PointP1::Inf, PointP1::Fin(p3)] => Mobius {
            a: ctx.one(),
            b: ctx.neg(p1),
            c: ctx.one(),
            d: ctx.neg(p3),
        },
        [PointP1::Fin(p1), PointP1::Fin(p2), PointP1::Inf] => Mobius {
            a: ctx.one(),
            b: ctx.neg(p1),
            c: ctx.zero(),
            d: ctx.sub(p2, p1),
        },
        _ => unreachable!("at most one point can be infinity after the distinctness check"),
    };
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn f(p: u64, k: u32) -> FieldCtx {
        FieldCtx::build(FieldSpec::new(p, k), None).unwrap()
    }

    fn points(ctx: &FieldCtx) -> Vec<PointP1> {
        ctx.elems()
            .map(PointP1::Fin)
            .chain(std::iter::once(PointP1::Inf))
            .collect()
    }

    #[test]
    fn group_size_and_bijectivity() {
        for (p, k) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2)] {
            let ctx = f(p, k);
            let q = ctx.size();
            let all = Mobius::all(&ctx);
            assert_eq!(all.len() as u64, q * q * q - q);
            for m in all.iter().take(50) {
                let mut seen = std::collections::HashSet::new();
                for &z in &points(&ctx) {
                    seen.insert(match m.eval(&ctx, z) {
                        PointP1::Fin(v) => v.id() as u64,
                        PointP1::Inf => q,
                    });
                }
                assert_eq!(seen.len() as u64, q + 1);
                let inv = m.inverse(&ctx);
                for &z in &points(&ctx) {
                    assert_eq!(inv.eval(&ctx, m.eval(&ctx, z)), z);
                }
            }
        }
    }

    #[test]
    fn through_three_points() {
        let ctx = f(5, 1);
        let pts = points(&ctx);
        let dst = [pts[3], PointP1::Inf, pts[0]];
        for &a in &pts {
            for &b in &pts {
                for &c in &pts {
                    let got = Mobius::through(&ctx, [a, b, c], dst);
                    if a == b || b == c || a == c {
                        assert!(got.is_none());
                        continue;
                    }
                    let m = got.unwrap();
                    assert_eq!(m.eval(&ctx, a), dst[0]);
                    assert_eq!(m.eval(&ctx, b), dst[1]);
                    assert_eq!(m.eval(&ctx, c), dst[2]);
                }
            }
        }
    }

    #[test]
    fn compose_matches_pointwise() {
        let ctx = f(3, 1);
        let all = Mobius::all(&ctx);
        for m1 in all.iter().take(12) {
            for m2 in all.iter().take(12) {
                let c = m1.compose(&ctx, m2);
                for &z in &points(&ctx) {
                    assert_eq!(c.eval(&ctx, z), m1.eval(&ctx, m2.eval(&ctx, z)));
                }
            }
        }
    }

    #[test]
    fn rational_form_agrees() {
        let ctx = f(5, 1);
        for m in Mobius::all(&ctx).iter().take(40) {
            let r = m.to_rational(&ctx);
            for &z in &points(&ctx) {
                assert_eq!(r.eval_p1(&ctx, z), m.eval(&ctx, z));
            }
        }
    }
}
