//! Base-p digit machinery, exact multinomial coefficients, the
//! Lucas/Dickson no-carry coprimality criterion, and enumerative checkers
//! for two combinatorial statements about weighted base-3 tuple families.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatError {
    #[error("parts sum to {got}, expected {expected}")]
    PartsSumMismatch { expected: u64, got: u64 },
    #[error("exponent {got} is below this statement's hypothesis ({min})")]
    ExponentTooSmall { min: u32, got: u32 },
}

/// Base-p digits of a nonnegative integer, low-to-high, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitsBaseP {
    pub p: u64,
    pub digits: Vec<u64>,
}

impl DigitsBaseP {
    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }
}

pub fn base_p_digits(mut m: u64, p: u64) -> DigitsBaseP {
    assert!(p >= 2);
    let mut digits = vec![];
    while m > 0 {
        digits.push(m % p);
        m /= p;
    }
    DigitsBaseP { p, digits }
}

/// Exact multinomial coefficient (m; parts) as a big integer, via iterated
/// exact binomials over the partial sums.
pub fn multinomial_exact(m: u64, parts: &[u64]) -> Result<BigUint, CombinatError> {
    let got: u64 = parts.iter().sum();
    if got != m {
        return Err(CombinatError::PartsSumMismatch { expected: m, got });
    }
    let mut acc = BigUint::from(1u32);
    let mut total = 0u64;
    for &part in parts {
        total += part;
        acc *= binomial(total, part);
    }
    Ok(acc)
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        acc /= BigUint::from(i);
    }
    acc
}

/// True iff the multinomial coefficient (m; parts) is coprime to the prime
/// p: at every digit position the base-p digits of the parts must add up to
/// the digit of m without carries. For p = 2 this is the same as the parts'
/// base-2 term multisets being pairwise disjoint.
pub fn multinomial_coprime_p(m: u64, parts: &[u64], p: u64) -> Result<bool, CombinatError> {
    let got: u64 = parts.iter().sum();
    if got != m {
        return Err(CombinatError::PartsSumMismatch { expected: m, got });
    }
    let md = base_p_digits(m, p);
    let pd: Vec<DigitsBaseP> = parts.iter().map(|&x| base_p_digits(x, p)).collect();
    let width = md
        .digits
        .len()
        .max(pd.iter().map(|d| d.digits.len()).max().unwrap_or(0));
    for j in 0..width {
        let sum: u64 = pd.iter().map(|d| d.digit(j)).sum();
        if sum != md.digit(j) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which weighted base-3 tuple family to check.
///
/// `FiveSlot` (exponent >= 3): tuples (n1, n2, n3, n5, n9) with
/// n1 + 2 n2 + 3 n3 + 5 n5 + 9 n9 = Q - 1 whose base-3 term multiset is one
/// copy of each 3^i for 1 <= i <= l-2 plus a partition of 2; the claim is
/// that n5's expansion contains Q/9 and n9's contains Q/27.
///
/// `FourSlot` (exponent >= 5): tuples (n1, n2, n5, n9) with
/// n1 + 2 n2 + 5 n5 + 9 n9 = Q - 1 whose term multiset is one copy of each
/// 3^i for 0 <= i <= l-2 with i != 2, plus either one 2*9 or two 9s; the
/// claim is that n5 contains Q/9 and, when l >= 6, n9 contains Q/27.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TupleFamily {
    FiveSlot,
    FourSlot,
}

/// A tuple violating the checked conclusion; n3 is always 0 for FourSlot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleCounterexample {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    pub n5: u64,
    pub n9: u64,
}

/// Enumerates every tuple satisfying the family's hypotheses and checks the
/// conclusion; returns the first violating tuple if any.
pub fn base3_tuple_lemma(
    family: TupleFamily,
    ell: u32,
) -> Result<Option<TupleCounterexample>, CombinatError> {
    let min = match family {
        TupleFamily::FiveSlot => 3,
        TupleFamily::FourSlot => 5,
    };
    if ell < min {
        return Err(CombinatError::ExponentTooSmall { min, got: ell });
    }
    let q: u64 = 3u64.pow(ell);
    let target = q - 1;

    // Required digit sum at each base-3 position across the whole tuple.
    // Multiset equality of terms is exactly this per-position condition:
    // "one copy of 3^i" forces digit sum 1 there, and the partition-of-2
    // (or 2*9-vs-two-9s) alternative forces digit sum 2.
    let width = (ell - 1) as usize;
    let mut required = vec![1u64; width];
    match family {
        TupleFamily::FiveSlot => required[0] = 2,
        TupleFamily::FourSlot => required[2] = 2,
    }
    let forced_digit_count: u64 = required.iter().sum();

    let pow3 = |i: usize| 3u64.pow(i as u32);
    let pos_n5 = (ell - 2) as usize;
    let pos_n9 = (ell - 3) as usize;
    let check_n9 = match family {
        TupleFamily::FiveSlot => true,
        TupleFamily::FourSlot => ell >= 6,
    };

    let digit_sums_match = |tuple: &[u64; 5]| -> bool {
        if tuple.iter().map(|&n| digit_sum_base3(n)).sum::<u64>() != forced_digit_count {
            return false;
        }
        if tuple.iter().any(|&n| n >= pow3(width)) {
            return false;
        }
        required
            .iter()
            .enumerate()
            .all(|(i, &want)| tuple.iter().map(|&n| n / pow3(i) % 3).sum::<u64>() == want)
    };

    let with_n3 = family == TupleFamily::FiveSlot;
    for n9 in 0..=target / 9 {
        let r9 = target - 9 * n9;
        for n5 in 0..=r9 / 5 {
            let r5 = r9 - 5 * n5;
            let n3_max = if with_n3 { r5 / 3 } else { 0 };
            for n3 in 0..=n3_max {
                let r3 = r5 - 3 * n3;
                for n2 in 0..=r3 / 2 {
                    let n1 = r3 - 2 * n2;
                    let tuple = [n1, n2, n3, n5, n9];
                    if !digit_sums_match(&tuple) {
                        continue;
                    }
                    let ok_n5 = n5 / pow3(pos_n5) % 3 >= 1;
                    let ok_n9 = !check_n9 || n9 / pow3(pos_n9) % 3 >= 1;
                    if !(ok_n5 && ok_n9) {
                        return Ok(Some(TupleCounterexample { n1, n2, n3, n5, n9 }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn digit_sum_base3(mut n: u64) -> u64 {
    let mut c = 0;
    while n > 0 {
        c += n % 3;
        n /= 3;
    }
    c
}
