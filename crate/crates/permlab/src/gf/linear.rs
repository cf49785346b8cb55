//! F_q-linear maps of F_{q^2}: the polynomials aX^q + bX, and the vector
//! space isomorphisms between F_{q^2} and F_q x F_q.

use super::quad::QuadExtCtx;
use super::{Fe, GfError};

/// L(X) = a X^q + b X acting on F_{q^2}; an F_q-linear endomorphism,
/// invertible exactly when a^{q+1} != b^{q+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearQPoly {
    pub a: Fe,
    pub b: Fe,
}

impl LinearQPoly {
    pub fn new(a: Fe, b: Fe) -> Self {
        LinearQPoly { a, b }
    }

    pub fn apply(&self, qx: &QuadExtCtx, x: Fe) -> Fe {
        let ext = qx.ext();
        ext.add(ext.mul(self.a, qx.frobenius_q(x)), ext.mul(self.b, x))
    }

    pub fn is_invertible(&self, qx: &QuadExtCtx) -> bool {
        qx.norm(self.a) != qx.norm(self.b)
    }

    /// The inverse map (a X^q - b^q X) / (a^{q+1} - b^{q+1}), itself of the
    /// same shape.
    pub fn inverse(&self, qx: &QuadExtCtx) -> Result<LinearQPoly, GfError> {
        let ext = qx.ext();
        let delta = ext.sub(qx.norm(self.a), qx.norm(self.b));
        if delta.is_zero() {
            return Err(GfError::NonInvertibleLinear);
        }
        let di = ext.inv(delta)?;
        Ok(LinearQPoly {
            a: ext.mul(self.a, di),
            b: ext.neg(ext.mul(qx.frobenius_q(self.b), di)),
        })
    }

    pub fn apply_inverse(&self, qx: &QuadExtCtx, x: Fe) -> Result<Fe, GfError> {
        Ok(self.inverse(qx)?.apply(qx, x))
    }
}

/// x -> (ax + (ax)^q, bx + (bx)^q), an F_q-vector-space isomorphism
/// F_{q^2} -> F_q x F_q when a, b != 0 and a^{q-1} != b^{q-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitIso {
    pub a: Fe,
    pub b: Fe,
}

/// (x, y) -> ax + by, an F_q-vector-space isomorphism F_q x F_q -> F_{q^2}
/// under the same parameter constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JoinIso {
    pub a: Fe,
    pub b: Fe,
}

pub fn iso_params_valid(qx: &QuadExtCtx, a: Fe, b: Fe) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    let ext = qx.ext();
    ext.pow(a, qx.q() - 1) != ext.pow(b, qx.q() - 1)
}

impl SplitIso {
    pub fn new(qx: &QuadExtCtx, a: Fe, b: Fe) -> Result<SplitIso, GfError> {
        if !iso_params_valid(qx, a, b) {
            return Err(GfError::BadIsoParams);
        }
        Ok(SplitIso { a, b })
    }

    /// Both coordinates are traces, hence land in the embedded base field.
    pub fn apply(&self, qx: &QuadExtCtx, x: Fe) -> (Fe, Fe) {
        let ext = qx.ext();
        let ax = ext.mul(self.a, x);
        let bx = ext.mul(self.b, x);
        let u = ext.add(ax, qx.frobenius_q(ax));
        let v = ext.add(bx, qx.frobenius_q(bx));
        (
            qx.try_project(u).expect("trace lies in the base field"),
            qx.try_project(v).expect("trace lies in the base field"),
        )
    }
}

impl JoinIso {
    pub fn new(qx: &QuadExtCtx, a: Fe, b: Fe) -> Result<JoinIso, GfError> {
        if !iso_params_valid(qx, a, b) {
            return Err(GfError::BadIsoParams);
        }
        Ok(JoinIso { a, b })
    }

    pub fn apply(&self, qx: &QuadExtCtx, x: Fe, y: Fe) -> Fe {
        let ext = qx.ext();
        ext.add(ext.mul(self.a, qx.embed(x)), ext.mul(self.b, qx.embed(y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use std::collections::HashSet;

    fn quad(p: u64, k: u32) -> QuadExtCtx {
        QuadExtCtx::build(FieldSpec::new(p, k)).unwrap()
    }

    #[test]
    fn identity_and_frobenius_shapes() {
        let qx = quad(2, 1);
        let ext = qx.ext();
        let id = LinearQPoly::new(ext.zero(), ext.one());
        let fr = LinearQPoly::new(ext.one(), ext.zero());
        for x in ext.elems() {
            assert_eq!(id.apply(&qx, x), x);
            assert_eq!(fr.apply(&qx, x), qx.frobenius_q(x));
            // the q-power map is its own inverse on F_{q^2}
            assert_eq!(fr.apply_inverse(&qx, fr.apply(&qx, x)).unwrap(), x);
        }
    }

    #[test]
    fn q2_a1_b_omega_is_singular() {
        // a^{q+1} = 1 and b^{q+1} = omega*omega^2 = 1, so not invertible;
        // the kernel contains a nonzero solution of x^q = -omega x
        let qx = quad(2, 1);
        let ext = qx.ext();
        let w = ext.el(2).unwrap();
        let l = LinearQPoly::new(ext.one(), w);
        assert!(!l.is_invertible(&qx));
        assert!(l.inverse(&qx).is_err());
        let kernel: Vec<Fe> = ext
            .elems()
            .filter(|&x| l.apply(&qx, x).is_zero() && !x.is_zero())
            .collect();
        assert!(!kernel.is_empty());
    }

    #[test]
    fn invertible_maps_are_bijections_and_singular_ones_are_not() {
        // exhaustive over all (a, b) for q <= 9
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let qx = quad(p, k);
            let ext = qx.ext();
            for a in ext.elems() {
                for b in ext.elems() {
                    let l = LinearQPoly::new(a, b);
                    let image: HashSet<u32> = ext.elems().map(|x| l.apply(&qx, x).id()).collect();
                    if l.is_invertible(&qx) {
                        assert_eq!(image.len() as u64, ext.size());
                        let inv = l.inverse(&qx).unwrap();
                        for x in ext.elems() {
                            assert_eq!(inv.apply(&qx, l.apply(&qx, x)), x);
                        }
                    } else {
                        assert!((image.len() as u64) < ext.size());
                    }
                }
            }
        }
    }

    #[test]
    fn linear_maps_commute_with_base_scaling() {
        let qx = quad(3, 1);
        let ext = qx.ext();
        for a in ext.elems() {
            for b in ext.elems() {
                let l = LinearQPoly::new(a, b);
                for s in qx.base().elems() {
                    let se = qx.embed(s);
                    for x in ext.elems() {
                        assert_eq!(l.apply(&qx, ext.mul(se, x)), ext.mul(se, l.apply(&qx, x)));
                    }
                }
            }
        }
    }

    #[test]
    fn split_iso_f4_example() {
        // q=2, a=1, b=omega: x -> (x + x^2, wx + (wx)^2) is a bijection
        let qx = quad(2, 1);
        let ext = qx.ext();
        let iso = SplitIso::new(&qx, ext.one(), ext.el(2).unwrap()).unwrap();
        let images: HashSet<(u32, u32)> = ext
            .elems()
            .map(|x| {
                let (u, v) = iso.apply(&qx, x);
                (u.id(), v.id())
            })
            .collect();
        assert_eq!(images.len(), 4);
    }

    #[test]
    fn equal_params_rejected() {
        let qx = quad(2, 1);
        let w = qx.ext().el(2).unwrap();
        assert!(SplitIso::new(&qx, w, w).is_err());
        assert!(JoinIso::new(&qx, w, w).is_err());
    }

    #[test]
    fn join_iso_f4_example() {
        let qx = quad(2, 1);
        let ext = qx.ext();
        let iso = JoinIso::new(&qx, ext.one(), ext.el(2).unwrap()).unwrap();
        let mut seen = HashSet::new();
        for x in qx.base().elems() {
            for y in qx.base().elems() {
                seen.insert(iso.apply(&qx, x, y).id());
            }
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn split_then_join_roundtrip() {
        for (p, k) in [(2, 1), (3, 1), (2, 2)] {
            let qx = quad(p, k);
            let ext = qx.ext();
            for a in ext.elems() {
                for b in ext.elems() {
                    if !iso_params_valid(&qx, a, b) {
                        continue;
                    }
                    let split = SplitIso::new(&qx, a, b).unwrap();
                    let join = JoinIso::new(&qx, a, b).unwrap();
                    // composing the two directions with matching parameters
                    // is a bijection of F_{q^2}
                    let image: HashSet<u32> = ext
                        .elems()
                        .map(|x| {
                            let (u, v) = split.apply(&qx, x);
                            join.apply(&qx, u, v).id()
                        })
                        .collect();
                    assert_eq!(image.len() as u64, ext.size());
                }
            }
        }
    }
}
