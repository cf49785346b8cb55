//! Executable predicates for the classification statements this laboratory
//! verifies: coefficient tests for which members of several polynomial and
//! bivariate-map families are bijections or complete mappings, the witness
//! searches backing the conjugacy and linear-equivalence claims, and the
//! supporting numeric criteria.

mod classify;
mod deg3;
mod pairmap;
mod quartic;
mod scan;

pub use classify::{thm17_classify, thm17_classify_all, QuarticClass};
pub use deg3::{
    canon_rational, depressed_cubic_permutes, monomial_permutes, normalize_deg3, weil_threshold,
    Deg3Class, Deg3Normalization,
};
pub use pairmap::{
    hu_family, hv_family, pair_map_eval, thm14_predicate, thm15_predicate, PairMapCoeffs,
    PairMapTables,
};
pub use quartic::{
    quartic_poly, thm11_predicate, thm11_witness_search, thm12_predicate, thm13_poly,
    thm13_predicate, ConjugacyWitness, QuarticCoeffs, QuarticTables, Thm11Verdict, Thm13Coeffs,
};
pub use scan::{prop43_poly, prop43_scan, ScanMode, ScanOutcome};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoremError {
    #[error("q = {q} exceeds the search cap {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("this statement requires e = 0")]
    EMustBeZero,
    #[error("this statement requires e != 0")]
    EMustBeNonzero,
    #[error("this statement requires 3 | q")]
    CharThreeRequired,
    #[error("required coefficient is zero")]
    CoefficientZero,
    #[error("degree must be at least 3")]
    DegreeTooSmall,
    #[error("the map must permute the projective line")]
    NotAPermutation,
    #[error("a permutation of this family failed to match any canonical class")]
    Unclassified,
}

/// Caps on the enumerative witness searches; raise explicitly (or through
/// the PERMLAB_SEARCH_CAP environment variable in the CLI) for larger q.
#[derive(Debug, Clone, Copy)]
pub struct SearchCaps {
    /// Largest q for the conjugacy witness search.
    pub witness_q: u64,
    /// Largest q for the linear-equivalence and degree-three normal-form
    /// searches.
    pub classify_q: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            witness_q: 8,
            classify_q: 9,
        }
    }
}

impl SearchCaps {
    pub fn unlimited() -> Self {
        SearchCaps {
            witness_q: u64::MAX,
            classify_q: u64::MAX,
        }
    }

    pub fn with_q(q: u64) -> Self {
        SearchCaps {
            witness_q: q,
            classify_q: q,
        }
    }
}
