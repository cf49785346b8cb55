//! The reduction chain for polynomials of the shape X^r B(X^{q-1}) over
//! F_{q^2}: such a polynomial permutes F_{q^2} iff gcd(r, q-1) = 1 and
//! g0(X) = X^r B(X)^{q-1} permutes mu_{q+1}; and g0 permutes mu_{q+1} iff
//! B has no roots there and the degree-three-or-less rational function
//! g(X) = X^r B^(q)(1/X) / B(X) does. Also the degree-one maps that permute
//! mu_{q+1} and the bridges between mu_{q+1} and the projective line.

use thiserror::Error;

use crate::gf::quad::QuadExtCtx;
use crate::gf::Fe;
use crate::gf::FieldCtx;
use crate::permcheck::{rational_permutes, RatDomain, RationalFn};
use crate::poly::Poly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MuReduceError {
    #[error("the zero polynomial has no X^r B(X^{{q-1}}) form")]
    ZeroPoly,
    #[error("polynomial has a constant term, so no X^r B(X^{{q-1}}) form with r >= 1")]
    ConstantTerm,
    #[error("exponents are not all congruent mod q-1")]
    MixedExponents,
    #[error("parameters have equal norms, map is not invertible")]
    EqualNorms,
    #[error("parameter must lie outside the base field")]
    ParamInBaseField,
    #[error("parameter must be nonzero")]
    ZeroParam,
}

/// f = X^r B(X^{q-1}) with the minimal positive r; reassembling recovers
/// the induced function of the source polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XrBForm {
    pub r: u64,
    pub b: Poly,
}

/// Writes f as X^r B(X^{q-1}). All exponents of f must be congruent mod
/// q-1; r is the smallest positive representative of that class. The
/// criteria below are invariant under the choice of valid r.
pub fn split_xr_form(ext: &FieldCtx, f: &Poly, q: u64) -> Result<XrBForm, MuReduceError> {
    if f.is_zero() {
        return Err(MuReduceError::ZeroPoly);
    }
    let step = q - 1;
    let exps: Vec<usize> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, _)| e)
        .collect();
    let e_min = *exps.first().unwrap();
    if e_min == 0 {
        return Err(MuReduceError::ConstantTerm);
    }
    if exps
        .iter()
        .any(|&e| (e as u64) % step != (e_min as u64) % step)
    {
        return Err(MuReduceError::MixedExponents);
    }
    let r = (e_min as u64 - 1) % step + 1;
    let deg_b = (f.degree().unwrap() as u64 - r) / step;
    let mut coeffs = vec![ext.zero(); deg_b as usize + 1];
    for &e in &exps {
        coeffs[((e as u64 - r) / step) as usize] = f.coeff(ext, e);
    }
    Ok(XrBForm {
        r,
        b: Poly::from_coeffs(ext, coeffs),
    })
}

impl XrBForm {
    /// X^r B(X^{q-1}) as a polynomial.
    pub fn reassemble(&self, ext: &FieldCtx, q: u64) -> Poly {
        let step = (q - 1) as usize;
        let deg = self.b.degree().unwrap_or(0);
        let mut coeffs = vec![ext.zero(); self.r as usize + deg * step + 1];
        for (i, &c) in self.b.coeffs().iter().enumerate() {
            coeffs[self.r as usize + i * step] = c;
        }
        Poly::from_coeffs(ext, coeffs)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// The power-map criterion: gcd(r, q-1) = 1 and x -> x^r B(x)^{q-1}
/// permutes mu_{q+1}. Equivalent to f permuting F_{q^2}.
pub fn mu_power_criterion(qx: &QuadExtCtx, form: &XrBForm) -> bool {
    let q = qx.q();
    if gcd_u64(form.r, q - 1) != 1 {
        return false;
    }
    let ext = qx.ext();
    let mu = qx.mu_subgroup();
    let mut seen = vec![false; ext.size() as usize];
    for &x in mu.elements() {
        let bx = form.b.eval(ext, x);
        if bx.is_zero() {
            return false;
        }
        let y = ext.mul(ext.pow(x, form.r), ext.pow(bx, q - 1));
        if !mu.contains(y) || seen[y.id() as usize] {
            return false;
        }
        seen[y.id() as usize] = true;
    }
    true
}

/// B reversed with q-powered coefficients, the monic gcd C, and the reduced
/// fraction g = X^r B^(q)(1/X) / B(X).
#[derive(Debug, Clone)]
pub struct HatForm {
    pub b_hat: Poly,
    pub c: Poly,
    pub g: RationalFn,
    pub r: u64,
}

/// Computes the hat chain for a split form. The reversal frame is deg B,
/// with the leftover X power from r attached to whichever side needs it;
/// the reversed polynomial has nonzero constant term (it is the leading
/// coefficient of B, q-powered), so any X factor B carries ends up in the
/// gcd exactly when it is a genuine common factor.
pub fn hat_chain(qx: &QuadExtCtx, form: &XrBForm) -> Result<HatForm, MuReduceError> {
    if form.b.is_zero() {
        return Err(MuReduceError::ZeroPoly);
    }
    let ext = qx.ext();
    let n = form.b.degree().unwrap() as u64;
    // reversal at frame deg B, coefficients q-powered
    let rev: Vec<Fe> = form
        .b
        .coeffs()
        .iter()
        .rev()
        .map(|&c| qx.frobenius_q(c))
        .collect();
    let rev = Poly::from_coeffs(ext, rev);
    let (b_hat, den0) = if form.r >= n {
        (shift(ext, &rev, (form.r - n) as usize), form.b.clone())
    } else {
        (rev, shift(ext, &form.b, (n - form.r) as usize))
    };
    let c = poly_gcd(ext, &form.b, &b_hat);
    let g_num = poly_exact_div(ext, &b_hat, &c).expect("gcd divides");
    let g_den = poly_exact_div(ext, &den0, &c).expect("gcd divides");
    Ok(HatForm {
        b_hat,
        c,
        g: RationalFn::new(g_num, g_den),
        r: form.r,
    })
}

/// The fraction criterion: B has no roots in mu_{q+1} and g permutes
/// mu_{q+1}. Equivalent to the power-map criterion without its gcd clause.
pub fn mu_fraction_criterion(qx: &QuadExtCtx, form: &XrBForm) -> Result<bool, MuReduceError> {
    let ext = qx.ext();
    let mu = qx.mu_subgroup();
    if mu.elements().iter().any(|&x| form.b.eval(ext, x).is_zero()) {
        return Ok(false);
    }
    let hat = hat_chain(qx, form)?;
    if hat.g.is_constant() {
        return Ok(false);
    }
    Ok(rational_permutes(ext, &hat.g, RatDomain::Mu(mu)).unwrap())
}

fn shift(ctx: &FieldCtx, p: &Poly, k: usize) -> Poly {
    if p.is_zero() || k == 0 {
        return p.clone();
    }
    let mut coeffs = vec![ctx.zero(); k];
    coeffs.extend_from_slice(p.coeffs());
    Poly::from_coeffs(ctx, coeffs)
}

/// Long division: (quotient, remainder) with deg rem < deg divisor.
pub fn poly_divrem(ctx: &FieldCtx, a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_zero(), "division by the zero polynomial");
    let db = b.degree().unwrap();
    let lead_inv = ctx.inv(b.leading(ctx)).unwrap();
    let mut rem: Vec<Fe> = a.coeffs().to_vec();
    let mut quo = vec![ctx.zero(); a.coeffs().len().saturating_sub(db)];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let factor = ctx.mul(*rem.last().unwrap(), lead_inv);
        if !factor.is_zero() {
            quo[k] = factor;
            for (i, &bc) in b.coeffs().iter().enumerate() {
                rem[k + i] = ctx.sub(rem[k + i], ctx.mul(factor, bc));
            }
        }
        rem.pop();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    (Poly::from_coeffs(ctx, quo), Poly::from_coeffs(ctx, rem))
}

/// Monic gcd by the remainder sequence; zero only if both inputs are zero.
pub fn poly_gcd(ctx: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = poly_divrem(ctx, &a, &b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        let inv = ctx.inv(a.leading(ctx)).unwrap();
        a.scale(ctx, inv)
    }
}

/// Some(a / b) when b divides a exactly.
pub fn poly_exact_div(ctx: &FieldCtx, a: &Poly, b: &Poly) -> Option<Poly> {
    let (q, r) = poly_divrem(ctx, a, b);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

/// The degree-one maps permuting mu_{q+1}: (b^q X + a^q)/(a X + b) with
/// a^{q+1} != b^{q+1}.
pub fn deg1_mu_map(qx: &QuadExtCtx, alpha: Fe, beta: Fe) -> Result<RationalFn, MuReduceError> {
    let ext = qx.ext();
    if qx.norm(alpha) == qx.norm(beta) {
        return Err(MuReduceError::EqualNorms);
    }
    Ok(RationalFn::new(
        Poly::from_coeffs(ext, vec![qx.frobenius_q(alpha), qx.frobenius_q(beta)]),
        Poly::from_coeffs(ext, vec![beta, alpha]),
    ))
}

/// (b^q X + a^q)/(b X + a): maps the projective line bijectively onto
/// mu_{q+1} when b != 0 and a/b lies outside F_q.
pub fn bridge_p1_to_mu(qx: &QuadExtCtx, alpha: Fe, beta: Fe) -> Result<RationalFn, MuReduceError> {
    let ext = qx.ext();
    if beta.is_zero() {
        return Err(MuReduceError::ZeroParam);
    }
    if qx.in_base_field(ext.div(alpha, beta).unwrap()) {
        return Err(MuReduceError::ParamInBaseField);
    }
    Ok(RationalFn::new(
        Poly::from_coeffs(ext, vec![qx.frobenius_q(alpha), qx.frobenius_q(beta)]),
        Poly::from_coeffs(ext, vec![alpha, beta]),
    ))
}

/// (g X + g^q)/(d X + d^q): maps mu_{q+1} bijectively onto the projective
/// line when d != 0 and g/d lies outside F_q.
pub fn bridge_mu_to_p1(qx: &QuadExtCtx, gamma: Fe, delta: Fe) -> Result<RationalFn, MuReduceError> {
    let ext = qx.ext();
    if delta.is_zero() {
        return Err(MuReduceError::ZeroParam);
    }
    if qx.in_base_field(ext.div(gamma, delta).unwrap()) {
        return Err(MuReduceError::ParamInBaseField);
    }
    Ok(RationalFn::new(
        Poly::from_coeffs(ext, vec![qx.frobenius_q(gamma), gamma]),
        Poly::from_coeffs(ext, vec![qx.frobenius_q(delta), delta]),
    ))
}

/// theta(X) = (zX - z^q)/(X - 1) and its inverse (X - z^q)/(X - z), for any
/// z outside the base field: a mutually inverse bijection pair between
/// mu_{q+1} and the projective line over F_q.
pub fn theta_bridge(qx: &QuadExtCtx, z: Fe) -> Result<(RationalFn, RationalFn), MuReduceError> {
    let ext = qx.ext();
    if qx.in_base_field(z) {
        return Err(MuReduceError::ParamInBaseField);
    }
    let zq = qx.frobenius_q(z);
    let m1 = ext.from_int(-1);
    let theta = RationalFn::new(
        Poly::from_coeffs(ext, vec![ext.neg(zq), z]),
        Poly::from_coeffs(ext, vec![m1, ext.one()]),
    );
    let theta_inv = RationalFn::new(
        Poly::from_coeffs(ext, vec![ext.neg(zq), ext.one()]),
        Poly::from_coeffs(ext, vec![ext.neg(z), ext.one()]),
    );
    Ok((theta, theta_inv))
}
