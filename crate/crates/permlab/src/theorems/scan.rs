//! Brute-force campaign over X^9 + aX^5 + bX^3 + cX^2 + dX in
//! characteristic 3 with ac != 0: the claim is that no such polynomial
//! permutes, and the scan reports any violation it finds.

use crate::gf::{Fe, FieldCtx};
use crate::poly::Poly;
use crate::sampling;

use super::TheoremError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome {
    pub tuples_tested: u64,
    pub permutations_found: u64,
    /// Element ids (a, b, c, d) of the first permutation seen, if any.
    pub first_permutation: Option<[u64; 4]>,
}

pub fn prop43_poly(ctx: &FieldCtx, a: Fe, b: Fe, c: Fe, d: Fe) -> Poly {
    let mut coeffs = vec![ctx.zero(); 10];
    coeffs[9] = ctx.one();
    coeffs[5] = a;
    coeffs[3] = b;
    coeffs[2] = c;
    coeffs[1] = d;
    Poly::from_coeffs(ctx, coeffs)
}

/// Iterates (a, b, c, d) with ac != 0, exhaustively or by seeded sampling,
/// asserting the polynomial is not a permutation; requires 3 | q.
pub fn prop43_scan(ctx: &FieldCtx, mode: ScanMode) -> Result<ScanOutcome, TheoremError> {
    let q = ctx.size();
    if q % 3 != 0 {
        return Err(TheoremError::CharThreeRequired);
    }
    // monomial value tables keep the inner loop to four multiplications
    let pows: Vec<[Fe; 4]> = ctx
        .elems()
        .map(|x| [ctx.pow(x, 9), ctx.pow(x, 5), ctx.pow(x, 3), ctx.pow(x, 2)])
        .collect();
    let space = (q - 1) * q * (q - 1) * q;
    let decode = |idx: u64| {
        let d = idx % q;
        let rest = idx / q;
        let c = rest % (q - 1) + 1;
        let rest = rest / (q - 1);
        let b = rest % q;
        let a = rest / q % (q - 1) + 1;
        [a, b, c, d]
    };

    let mut seen = vec![false; q as usize];
    let mut is_perm = |ids: [u64; 4]| -> bool {
        let [a, b, c, d] = ids.map(|i| ctx.el(i).unwrap());
        seen.iter_mut().for_each(|s| *s = false);
        for (i, x) in ctx.elems().enumerate() {
            let p = &pows[i];
            let mut y = p[0];
            y = ctx.add(y, ctx.mul(a, p[1]));
            y = ctx.add(y, ctx.mul(b, p[2]));
            y = ctx.add(y, ctx.mul(c, p[3]));
            y = ctx.add(y, ctx.mul(d, x));
            let yid = y.id() as usize;
            if seen[yid] {
                return false;
            }
            seen[yid] = true;
        }
        true
    };

    let mut outcome = ScanOutcome {
        tuples_tested: 0,
        permutations_found: 0,
        first_permutation: None,
    };
    let mut run = |ids: [u64; 4], outcome: &mut ScanOutcome| {
        outcome.tuples_tested += 1;
        if is_perm(ids) {
            outcome.permutations_found += 1;
            if outcome.first_permutation.is_none() {
                outcome.first_permutation = Some(ids);
            }
        }
    };
    match mode {
        ScanMode::Exhaustive => {
            for idx in 0..space {
                run(decode(idx), &mut outcome);
            }
        }
        ScanMode::Sample { count, seed } => {
            for i in 0..count {
                run(decode(sampling::draw_below(seed, i, space)), &mut outcome);
            }
        }
    }
    Ok(outcome)
}
