//! Linear-equivalence classifier for the quartic family: a permutation
//! member is equivalent, through F_q-vector-space isomorphisms, to the
//! monomial X^{q+2} on F_{q^2}, to the coordinatewise cube on F_q x F_q,
//! or to its twist (X^3 - eXY^2, Y^3) with e a nonsquare; the classifier
//! searches the isomorphism pairs and returns the first verified witness.

use crate::gf::linear::{iso_params_valid, JoinIso, LinearQPoly};
use crate::gf::quad::QuadExtCtx;
use crate::gf::Fe;

use super::quartic::{QuarticCoeffs, QuarticTables};
use super::{SearchCaps, TheoremError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarticClass {
    /// f = rho o X^{q+2} o eta^{-1} with rho, eta automorphisms of F_{q^2}.
    MonomialQ2 {
        rho: LinearQPoly,
        eta: LinearQPoly,
    },
    /// f = rho o (X^3, Y^3) o eta^{-1} with rho, eta: F_q x F_q -> F_{q^2}.
    CubePair {
        rho: JoinIso,
        eta: JoinIso,
    },
    /// f = rho o (X^3 - eXY^2, Y^3) o eta^{-1}, e a nonsquare, 3 | q.
    TwistedCubePair {
        rho: JoinIso,
        eta: JoinIso,
        e: Fe,
    },
    NotPermutation,
}

impl QuarticClass {
    /// Re-verifies the stored witness pointwise.
    pub fn verify(&self, qx: &QuadExtCtx, tables: &QuarticTables, co: QuarticCoeffs) -> bool {
        match *self {
            QuarticClass::MonomialQ2 { rho, eta } => monomial_matches(qx, tables, co, &rho, &eta),
            QuarticClass::CubePair { rho, eta } => pair_matches(qx, tables, co, &rho, &eta, None),
            QuarticClass::TwistedCubePair { rho, eta, e } => {
                pair_matches(qx, tables, co, &rho, &eta, Some(e))
            }
            QuarticClass::NotPermutation => !tables.is_permutation(qx, co),
        }
    }
}

/// f(eta(y)) = rho(y^{q+2}) for all y.
fn monomial_matches(
    qx: &QuadExtCtx,
    tables: &QuarticTables,
    co: QuarticCoeffs,
    rho: &LinearQPoly,
    eta: &LinearQPoly,
) -> bool {
    let ext = qx.ext();
    for y in ext.elems() {
        let lhs = tables.eval(qx, co, eta.apply(qx, y));
        let rhs = rho.apply(qx, ext.pow(y, qx.q() + 2));
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// f(eta(x, y)) = rho(x^3 - e x y^2, y^3) for all pairs; e = None encodes
/// the untwisted cube pair.
fn pair_matches(
    qx: &QuadExtCtx,
    tables: &QuarticTables,
    co: QuarticCoeffs,
    rho: &JoinIso,
    eta: &JoinIso,
    e: Option<Fe>,
) -> bool {
    let base = qx.base();
    for x in base.elems() {
        let x3 = base.pow(x, 3);
        for y in base.elems() {
            let y3 = base.pow(y, 3);
            let gx = match e {
                None => x3,
                Some(e) => base.sub(x3, base.mul(e, base.mul(x, base.mul(y, y)))),
            };
            let lhs = tables.eval(qx, co, eta.apply(qx, x, y));
            let rhs = rho.apply(qx, gx, y3);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn invertible_linear(qx: &QuadExtCtx) -> Vec<LinearQPoly> {
    let ext = qx.ext();
    let mut out = vec![];
    for a in ext.elems() {
        for b in ext.elems() {
            let l = LinearQPoly::new(a, b);
            if l.is_invertible(qx) {
                out.push(l);
            }
        }
    }
    out
}

fn join_isos(qx: &QuadExtCtx) -> Vec<JoinIso> {
    let ext = qx.ext();
    let mut out = vec![];
    for a in ext.elems() {
        for b in ext.elems() {
            if iso_params_valid(qx, a, b) {
                out.push(JoinIso { a, b });
            }
        }
    }
    out
}

/// Classifies one member of the quartic family, trying the monomial class,
/// then the cube pair, then the twisted cube pair over all nonsquares, and
/// returning the first witness found in deterministic parameter order.
pub fn thm17_classify(
    qx: &QuadExtCtx,
    tables: &QuarticTables,
    co: QuarticCoeffs,
    caps: &SearchCaps,
) -> Result<QuarticClass, TheoremError> {
    classify_inner(qx, tables, co, caps, false).map(|v| v.into_iter().next().unwrap())
}

/// Like `thm17_classify` but keeps searching and returns every class with
/// a witness; used to observe whether the classes overlap.
pub fn thm17_classify_all(
    qx: &QuadExtCtx,
    tables: &QuarticTables,
    co: QuarticCoeffs,
    caps: &SearchCaps,
) -> Result<Vec<QuarticClass>, TheoremError> {
    classify_inner(qx, tables, co, caps, true)
}

fn classify_inner(
    qx: &QuadExtCtx,
    tables: &QuarticTables,
    co: QuarticCoeffs,
    caps: &SearchCaps,
    all: bool,
) -> Result<Vec<QuarticClass>, TheoremError> {
    let q = qx.q();
    if q > caps.classify_q {
        return Err(TheoremError::CapExceeded {
            q,
            cap: caps.classify_q,
        });
    }
    if !tables.is_permutation(qx, co) {
        return Ok(vec![QuarticClass::NotPermutation]);
    }

    let mut found = vec![];
    if q % 3 != 1 {
        let linear = invertible_linear(qx);
        'mono: for rho in &linear {
            for eta in &linear {
                if monomial_matches(qx, tables, co, rho, eta) {
                    found.push(QuarticClass::MonomialQ2 {
                        rho: *rho,
                        eta: *eta,
                    });
                    if !all {
                        return Ok(found);
                    }
                    break 'mono;
                }
            }
        }
        let joins = join_isos(qx);
        'cube: for rho in &joins {
            for eta in &joins {
                if pair_matches(qx, tables, co, rho, eta, None) {
                    found.push(QuarticClass::CubePair {
                        rho: *rho,
                        eta: *eta,
                    });
                    if !all {
                        return Ok(found);
                    }
                    break 'cube;
                }
            }
        }
        if q % 3 == 0 {
            let base = qx.base();
            'twist: for e in base.elems() {
                if e.is_zero() || base.is_square(e) {
                    continue;
                }
                for rho in &joins {
                    for eta in &joins {
                        if pair_matches(qx, tables, co, rho, eta, Some(e)) {
                            found.push(QuarticClass::TwistedCubePair {
                                rho: *rho,
                                eta: *eta,
                                e,
                            });
                            if !all {
                                return Ok(found);
                            }
                            break 'twist;
                        }
                    }
                }
            }
        }
    }
    if found.is_empty() {
        return Err(TheoremError::Unclassified);
    }
    Ok(found)
}
