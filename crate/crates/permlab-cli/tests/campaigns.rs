//! Campaign-level invariants beyond the acceptance list: the degree-3
//! normal-form classification over whole polynomial families, and a probe
//! of how the quartic equivalence classes overlap.

use permlab::gf::{FieldSpec, QuadExtCtx};
use permlab::theorems::{
    thm17_classify_all, QuarticClass, QuarticCoeffs, QuarticTables, SearchCaps,
};

use permlab_cli::campaign::run_campaign;
use permlab_cli::config::{CampaignConfig, Mode, TheoremId};

#[test]
fn lemma55_campaign_classifies_every_cubic_permutation() {
    // every degree-3 polynomial permutation of the projective line over
    // F_q normalizes to a verified canonical class
    for q in [3u64, 5, 8, 9] {
        let mut cfg = CampaignConfig::new(TheoremId::Lemma55, vec![q]).unwrap();
        cfg.mode = Mode::Exhaustive;
        cfg.search_cap = Some(9);
        let out = run_campaign(&cfg).unwrap();
        assert!(
            out.all_clean,
            "normalization failed at q={q}: {:?}",
            out.records
        );
        assert_eq!(out.records[0].tuples_tested, (q - 1) * q * q * q);
    }
}

#[test]
fn thm17_class_overlap_probe_q3() {
    // the classifier reports the first match in canonical order; this probe
    // records whether any permutation member matches several classes
    let qx = QuadExtCtx::build(FieldSpec::new(3, 1)).unwrap();
    let tables = QuarticTables::new(&qx);
    let ext = qx.ext();
    let caps = SearchCaps::default();
    let n = ext.size();
    let mut permutations = 0u64;
    let mut multi = 0u64;
    for idx in 0..n * n * n * n {
        let ids = [
            idx / (n * n * n) % n,
            idx / (n * n) % n,
            idx / n % n,
            idx % n,
        ];
        let co = QuarticCoeffs {
            a: ext.el(ids[0]).unwrap(),
            b: ext.el(ids[1]).unwrap(),
            c: ext.el(ids[2]).unwrap(),
            d: ext.el(ids[3]).unwrap(),
        };
        if !tables.is_permutation(&qx, co) {
            continue;
        }
        permutations += 1;
        let classes = thm17_classify_all(&qx, &tables, co, &caps).unwrap();
        assert!(!classes.is_empty(), "unclassified permutation at {ids:?}");
        assert!(!classes.contains(&QuarticClass::NotPermutation));
        for class in &classes {
            assert!(class.verify(&qx, &tables, co), "witness fails at {ids:?}");
        }
        if classes.len() > 1 {
            multi += 1;
        }
    }
    println!("q=3: {permutations} permutation members, {multi} matching more than one class");
    assert!(permutations > 0);
}
