//! Univariate polynomials over a field context: dense coefficient vectors,
//! Horner evaluation, composition, and the function-preserving reduction
//! mod X^N - X by exponent folding.

use crate::gf::{Fe, FieldCtx};

/// A polynomial with coefficients in one field; index = degree, no trailing
/// zeros. The zero polynomial has an empty coefficient vector and its
/// degree is `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: u32,
    coeffs: Vec<Fe>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c.id())?;
        }
        write!(f, "]")
    }
}

impl Poly {
    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly {
            field: ctx.tag(),
            coeffs: vec![],
        }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly {
            field: ctx.tag(),
            coeffs: vec![ctx.one()],
        }
    }

    pub fn constant(ctx: &FieldCtx, c: Fe) -> Poly {
        Poly::from_coeffs(ctx, vec![c])
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly {
            field: ctx.tag(),
            coeffs: vec![ctx.zero(), ctx.one()],
        }
    }

    pub fn monomial(ctx: &FieldCtx, c: Fe, e: usize) -> Poly {
        assert!(ctx.owns(c));
        if c.is_zero() {
            return Poly::zero(ctx);
        }
        let mut coeffs = vec![ctx.zero(); e + 1];
        coeffs[e] = c;
        Poly {
            field: ctx.tag(),
            coeffs,
        }
    }

    /// Builds from low-to-high coefficients, dropping trailing zeros.
    pub fn from_coeffs(ctx: &FieldCtx, mut coeffs: Vec<Fe>) -> Poly {
        for &c in &coeffs {
            assert!(ctx.owns(c), "coefficient from another field");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: ctx.tag(),
            coeffs,
        }
    }

    /// Convenience constructor from element ids, low-to-high.
    pub fn from_ids(ctx: &FieldCtx, ids: &[u64]) -> Poly {
        Poly::from_coeffs(ctx, ids.iter().map(|&i| ctx.el(i).unwrap()).collect())
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self, ctx: &FieldCtx) -> Fe {
        self.check(ctx);
        *self.coeffs.last().unwrap_or(&ctx.zero())
    }

    fn check(&self, ctx: &FieldCtx) {
        assert!(
            self.field == ctx.tag(),
            "polynomial belongs to field #{}, not #{}",
            self.field,
            ctx.tag()
        );
    }

    /// Coefficient of X^e; zero beyond the degree.
    pub fn coeff(&self, ctx: &FieldCtx, e: usize) -> Fe {
        self.check(ctx);
        self.coeffs.get(e).copied().unwrap_or_else(|| ctx.zero())
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        self.check(ctx);
        assert!(ctx.owns(x));
        let mut acc = ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        self.check(ctx);
        other.check(ctx);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(ctx.add(self.coeff(ctx, i), other.coeff(ctx, i)));
        }
        Poly::from_coeffs(ctx, out)
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        self.add(ctx, &other.scale(ctx, ctx.from_int(-1)))
    }

    pub fn scale(&self, ctx: &FieldCtx, s: Fe) -> Poly {
        self.check(ctx);
        Poly::from_coeffs(ctx, self.coeffs.iter().map(|&c| ctx.mul(c, s)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        self.check(ctx);
        other.check(ctx);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(ctx);
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(ctx, out)
    }

    /// f(g(X)) as a polynomial, no reduction.
    pub fn compose(&self, ctx: &FieldCtx, g: &Poly) -> Poly {
        self.check(ctx);
        g.check(ctx);
        let mut acc = Poly::zero(ctx);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(ctx, g);
            acc = acc.add(ctx, &Poly::constant(ctx, c));
        }
        acc
    }

    /// Function-preserving normal form mod X^N - X, N the field size:
    /// X^e -> X^{((e-1) mod (N-1)) + 1} for e >= 1, constant unchanged.
    pub fn reduce_mod_xn_minus_x(&self, ctx: &FieldCtx, n: u64) -> Poly {
        self.check(ctx);
        if self.coeffs.len() as u64 <= n {
            return self.clone();
        }
        let n = n as usize;
        let mut out = vec![ctx.zero(); n];
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let folded = if e == 0 { 0 } else { (e - 1) % (n - 1) + 1 };
            out[folded] = ctx.add(out[folded], c);
        }
        Poly::from_coeffs(ctx, out)
    }

    /// The reduction of f^m mod X^N - X by square-and-multiply, folding
    /// every intermediate product.
    pub fn pow_reduce(&self, ctx: &FieldCtx, m: u64, n: u64) -> Poly {
        self.check(ctx);
        assert!(m >= 1);
        let mut base = self.reduce_mod_xn_minus_x(ctx, n);
        let mut acc: Option<Poly> = None;
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(ctx, &base).reduce_mod_xn_minus_x(ctx, n),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(ctx, &base).reduce_mod_xn_minus_x(ctx, n);
            }
        }
        acc.unwrap()
    }
}
