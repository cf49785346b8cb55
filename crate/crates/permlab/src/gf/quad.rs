//! The quadratic extension view: F_{q^2} built as F_p^{2k} with F_q located
//! as the fixed field of x -> x^q, plus the subgroup of (q+1)-th roots of
//! unity and isomorphisms between two representations of the same field.

use super::{Fe, FieldCtx, FieldSpec, GfError};

/// A base field F_q together with its quadratic extension F_{q^2}, the
/// embedding, and the q-power Frobenius.
pub struct QuadExtCtx {
    base: FieldCtx,
    ext: FieldCtx,
    /// embed[base_id] = ext_id
    embed: Vec<u32>,
    /// project[ext_id] = base_id + 1, or 0 when the element is outside F_q
    project: Vec<u32>,
    /// frob[ext_id] = (x^q)'s id
    frob: Vec<u32>,
    mu: MuSubgroup,
}

/// The set of x in F_{q^2} with x^{q+1} = 1; exactly q+1 elements.
pub struct MuSubgroup {
    elements: Vec<Fe>,
    member: Vec<bool>,
}

impl MuSubgroup {
    pub fn elements(&self) -> &[Fe] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Fe) -> bool {
        self.member[x.id() as usize]
    }
}

impl QuadExtCtx {
    /// Builds F_q and F_{q^2} with default moduli.
    pub fn build(base_spec: FieldSpec) -> Result<QuadExtCtx, GfError> {
        Self::build_with_moduli(base_spec, None, None)
    }

    pub fn build_with_moduli(
        base_spec: FieldSpec,
        base_modulus: Option<&[u64]>,
        ext_modulus: Option<&[u64]>,
    ) -> Result<QuadExtCtx, GfError> {
        let base = FieldCtx::build(base_spec, base_modulus)?;
        let ext = FieldCtx::build(FieldSpec::new(base_spec.p, base_spec.k * 2), ext_modulus)?;
        Self::pair(base, ext)
    }

    /// Pairs an already-built base field with an already-built extension of
    /// the square size. The embedding sends the base generator's minimal
    /// polynomial to its smallest root in the extension.
    pub fn pair(base: FieldCtx, ext: FieldCtx) -> Result<QuadExtCtx, GfError> {
        if ext.size() != base.size() * base.size() || ext.characteristic() != base.characteristic()
        {
            return Err(GfError::IncompatibleFields);
        }
        let q = base.size();
        let embed_gen = find_root(&ext, base.modulus()).ok_or(GfError::NotAnExtension)?;

        let p = base.characteristic();
        let mut embed = vec![0u32; q as usize];
        for bid in 0..q {
            // write the base element in digits and evaluate at the root
            let mut acc = ext.zero();
            let mut e = bid;
            let mut pw = ext.one();
            while e > 0 {
                let digit = ext.from_int((e % p) as i64);
                acc = ext.add(acc, ext.mul(digit, pw));
                pw = ext.mul(pw, embed_gen);
                e /= p;
            }
            embed[bid as usize] = acc.id();
        }

        let mut project = vec![0u32; ext.size() as usize];
        for (bid, &eid) in embed.iter().enumerate() {
            project[eid as usize] = bid as u32 + 1;
        }

        let mut frob = vec![0u32; ext.size() as usize];
        for x in ext.elems() {
            frob[x.id() as usize] = ext.pow(x, q).id();
        }

        // mu_{q+1}: all x with x^{q+1} = 1
        let mut elements = vec![];
        let mut member = vec![false; ext.size() as usize];
        for x in ext.elems() {
            if !x.is_zero() && ext.pow(x, q + 1) == ext.one() {
                member[x.id() as usize] = true;
                elements.push(x);
            }
        }
        debug_assert_eq!(elements.len() as u64, q + 1);

        Ok(QuadExtCtx {
            base,
            ext,
            embed,
            project,
            frob,
            mu: MuSubgroup { elements, member },
        })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn ext(&self) -> &FieldCtx {
        &self.ext
    }

    pub fn q(&self) -> u64 {
        self.base.size()
    }

    pub fn embed(&self, x: Fe) -> Fe {
        assert!(self.base.owns(x), "embed expects a base-field element");
        self.ext.el(self.embed[x.id() as usize] as u64).unwrap()
    }

    /// Inverse of the embedding; None when x lies outside the base field.
    pub fn try_project(&self, x: Fe) -> Option<Fe> {
        assert!(self.ext.owns(x), "project expects an extension element");
        if x.is_zero() {
            return Some(self.base.zero());
        }
        match self.project[x.id() as usize] {
            0 => None,
            b => Some(self.base.el((b - 1) as u64).unwrap()),
        }
    }

    pub fn in_base_field(&self, x: Fe) -> bool {
        self.frobenius_q(x) == x
    }

    /// x -> x^q, the order-2 automorphism fixing exactly the base field.
    pub fn frobenius_q(&self, x: Fe) -> Fe {
        assert!(self.ext.owns(x), "frobenius_q expects an extension element");
        self.ext.el(self.frob[x.id() as usize] as u64).unwrap()
    }

    /// Norm to the base field as an extension element: x^{q+1}.
    pub fn norm(&self, x: Fe) -> Fe {
        self.ext.mul(x, self.frobenius_q(x))
    }

    pub fn mu_subgroup(&self) -> &MuSubgroup {
        &self.mu
    }
}

fn find_root(ext: &FieldCtx, modulus: &[u64]) -> Option<Fe> {
    for x in ext.elems() {
        let mut acc = ext.zero();
        let mut pw = ext.one();
        for &c in modulus {
            if c != 0 {
                acc = ext.add(acc, ext.mul(ext.from_int(c as i64), pw));
            }
            pw = ext.mul(pw, x);
        }
        if acc.is_zero() {
            return Some(x);
        }
    }
    None
}

/// All ring isomorphisms from `src` to `dst` (same p, same size), one per
/// root of src's modulus in dst, each as an id-indexed table.
pub fn field_isomorphisms(src: &FieldCtx, dst: &FieldCtx) -> Result<Vec<Vec<u32>>, GfError> {
    if src.size() != dst.size() || src.characteristic() != dst.characteristic() {
        return Err(GfError::IncompatibleFields);
    }
    let p = src.characteristic();
    let mut out = vec![];
    for root in dst.elems() {
        let mut acc = dst.zero();
        let mut pw = dst.one();
        for &c in src.modulus() {
            if c != 0 {
                acc = dst.add(acc, dst.mul(dst.from_int(c as i64), pw));
            }
            pw = dst.mul(pw, root);
        }
        if !acc.is_zero() {
            continue;
        }
        let mut map = vec![0u32; src.size() as usize];
        for sid in 0..src.size() {
            let mut acc = dst.zero();
            let mut e = sid;
            let mut pw = dst.one();
            while e > 0 {
                let digit = dst.from_int((e % p) as i64);
                acc = dst.add(acc, dst.mul(digit, pw));
                pw = dst.mul(pw, root);
                e /= p;
            }
            map[sid as usize] = acc.id();
        }
        out.push(map);
    }
    if out.is_empty() {
        return Err(GfError::NotAnExtension);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(p: u64, k: u32) -> QuadExtCtx {
        QuadExtCtx::build(FieldSpec::new(p, k)).unwrap()
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)] {
            let qx = quad(p, k);
            let b = qx.base();
            for x in b.elems() {
                for y in b.elems() {
                    assert_eq!(
                        qx.embed(b.add(x, y)),
                        qx.ext().add(qx.embed(x), qx.embed(y))
                    );
                    assert_eq!(
                        qx.embed(b.mul(x, y)),
                        qx.ext().mul(qx.embed(x), qx.embed(y))
                    );
                }
                // embedded elements are exactly the Frobenius fixed points
                assert_eq!(qx.frobenius_q(qx.embed(x)), qx.embed(x));
                assert_eq!(qx.try_project(qx.embed(x)), Some(x));
            }
            let fixed = qx.ext().elems().filter(|&x| qx.frobenius_q(x) == x).count() as u64;
            assert_eq!(fixed, qx.q());
        }
    }

    #[test]
    fn frobenius_q_is_an_involution() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let qx = quad(p, k);
            for x in qx.ext().elems() {
                assert_eq!(qx.frobenius_q(qx.frobenius_q(x)), x);
            }
        }
    }

    #[test]
    fn frobenius_in_f4_squares_omega() {
        let qx = quad(2, 1);
        let w = qx.ext().el(2).unwrap();
        let w2 = qx.ext().el(3).unwrap();
        assert_eq!(qx.frobenius_q(w), w2);
    }

    #[test]
    fn mu_3_in_f4_by_cubing() {
        let qx = quad(2, 1);
        // oracle: cube every nonzero element of F_4 and keep those equal to 1
        let ext = qx.ext();
        let expect: Vec<Fe> = ext
            .elems()
            .filter(|&x| !x.is_zero() && ext.pow(x, 3) == ext.one())
            .collect();
        assert_eq!(qx.mu_subgroup().elements(), &expect[..]);
        assert_eq!(qx.mu_subgroup().len(), 3);
    }

    #[test]
    fn mu_has_q_plus_one_elements_and_is_a_group() {
        for (p, k) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (3, 2),
            (13, 1),
            (2, 4),
        ] {
            let qx = quad(p, k);
            let mu = qx.mu_subgroup();
            assert_eq!(mu.len() as u64, qx.q() + 1);
            assert!(mu.contains(qx.ext().one()));
            if qx.q() <= 16 {
                for &x in mu.elements() {
                    assert!(mu.contains(qx.ext().inv(x).unwrap()));
                    for &y in mu.elements() {
                        assert!(mu.contains(qx.ext().mul(x, y)));
                    }
                }
            }
        }
    }

    #[test]
    fn two_representations_of_f9_are_isomorphic() {
        let a = FieldCtx::build(FieldSpec::new(3, 2), Some(&[1, 0, 1])).unwrap();
        let b = FieldCtx::build(FieldSpec::new(3, 2), Some(&[2, 1, 1])).unwrap();
        let isos = field_isomorphisms(&a, &b).unwrap();
        assert_eq!(isos.len(), 2);
        for iso in &isos {
            for x in a.elems() {
                for y in a.elems() {
                    let fx = b.el(iso[x.id() as usize] as u64).unwrap();
                    let fy = b.el(iso[y.id() as usize] as u64).unwrap();
                    assert_eq!(iso[a.add(x, y).id() as usize], b.add(fx, fy).id());
                    assert_eq!(iso[a.mul(x, y).id() as usize], b.mul(fx, fy).id());
                }
            }
        }
    }
}
