//! The acceptance suite: every criterion the artifact must meet, each as
//! one test printing a single pass/fail line (run with -- --nocapture to
//! see them). Campaign criteria run through the same engine the CLI uses.

use std::time::{Duration, Instant};

use permlab::combinat::{base3_tuple_lemma, multinomial_coprime_p, multinomial_exact, TupleFamily};
use permlab::gf::{FieldCtx, FieldSpec, QuadExtCtx};
use permlab::permcheck::{coeff_profile, hermite_permutes, is_permutation_poly};
use permlab::poly::Poly;
use permlab::sampling;
use permlab::theorems::weil_threshold;

use permlab_cli::campaign::run_campaign;
use permlab_cli::config::{CampaignConfig, Mode, TheoremId};

fn report(n: u32, desc: &str, ok: bool, elapsed: Duration, budget: Duration) {
    let within = elapsed <= budget;
    println!(
        "ACCEPTANCE {n:02} {}: {desc} ({:.1}s of {:.0}s budget)",
        if ok && within { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(ok, "criterion {n} failed: {desc}");
    assert!(
        within,
        "criterion {n} exceeded its time budget: {:?} > {:?}",
        elapsed, budget
    );
}

fn jobs() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

fn campaign(theorem: TheoremId, qs: Vec<u64>, mode: Mode, cap: Option<u64>) -> bool {
    let mut cfg = CampaignConfig::new(theorem, qs).unwrap();
    cfg.mode = mode;
    cfg.jobs = jobs();
    cfg.search_cap = cap;
    let out = run_campaign(&cfg).expect("campaign must run");
    for r in &out.records {
        if r.disagreements != 0 {
            eprintln!("counterexample record: {r:?}");
        }
    }
    out.all_clean
}

#[test]
fn criterion_01_thm13_exhaustive_all_q_to_16() {
    let start = Instant::now();
    // single-threaded by construction: jobs = 1
    let mut cfg =
        CampaignConfig::new(TheoremId::Thm13, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]).unwrap();
    cfg.jobs = 1;
    let out = run_campaign(&cfg).unwrap();
    let ok = out.all_clean
        && out
            .records
            .iter()
            .map(|r| r.q)
            .eq([2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
        && out
            .records
            .iter()
            .all(|r| r.tuples_tested == r.q * r.q * r.q * r.q);
    report(
        1,
        "X^{q+2}+bX^q+cX test matches brute force for all (b,c), q <= 16",
        ok,
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_02_thm14_exhaustive() {
    let start = Instant::now();
    let ok = campaign(
        TheoremId::Thm14,
        vec![2, 3, 4, 5, 7, 8, 9],
        Mode::Exhaustive,
        None,
    );
    report(
        2,
        "bivariate cubic map test matches brute force over all q^4 tuples",
        ok,
        start.elapsed(),
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_03_thm15_exhaustive_and_sampled() {
    let start = Instant::now();
    let exhaustive = campaign(TheoremId::Thm15, vec![3, 9], Mode::Exhaustive, None);
    let sampled = campaign(
        TheoremId::Thm15,
        vec![27],
        Mode::Sample {
            n: 100_000,
            seed: 1729,
        },
        None,
    );
    report(
        3,
        "twisted bivariate map test: exhaustive q in {3,9}, 1e5 samples at q=27",
        exhaustive && sampled,
        start.elapsed(),
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_04_thm11_thm12_three_way_agreement() {
    let start = Instant::now();
    let mut ok = true;
    for theorem in [TheoremId::Thm11, TheoremId::Thm12] {
        ok &= campaign(theorem, vec![2, 3, 4, 5], Mode::Exhaustive, Some(9));
        ok &= campaign(
            theorem,
            vec![7, 8, 9],
            Mode::Sample {
                n: 100_000,
                seed: 1729,
            },
            Some(9),
        );
    }
    report(
        4,
        "complete-mapping tests (structure and coefficients) match brute force",
        ok,
        start.elapsed(),
        Duration::from_secs(1800),
    );
}

#[test]
fn criterion_05_prop43_no_permutations() {
    let start = Instant::now();
    let ok = campaign(TheoremId::Prop43, vec![3, 9, 27], Mode::Exhaustive, None);
    report(
        5,
        "X^9+aX^5+bX^3+cX^2+dX with ac != 0 never permutes, q in {3,9,27}",
        ok,
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_06_hermite_agreement() {
    let start = Instant::now();
    let mut ok = true;
    for (p, k) in [(2u64, 2u32), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2)] {
        let f = FieldCtx::build(FieldSpec::new(p, k), None).unwrap();
        let q = f.size();
        for i in 0..1000u64 {
            let ids: Vec<u64> = (0..q)
                .map(|j| sampling::draw_below(0xBEEF ^ (p << 8) ^ k as u64, i * 64 + j, q))
                .collect();
            let poly = Poly::from_ids(&f, &ids);
            if hermite_permutes(&f, &poly) != is_permutation_poly(&f, &poly) {
                eprintln!("hermite disagreement at q={q}, poly {poly:?}");
                ok = false;
            }
        }
    }
    report(
        6,
        "Hermite criterion agrees with brute force (1000 polys x 7 fields)",
        ok,
        start.elapsed(),
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_07_obstruction_coefficient_closed_forms() {
    let start = Instant::now();
    let mut ok = true;
    // even q: the X^{N-1} coefficient of f^{2q-1} reduced is b^{3q/2}
    for (p, k) in [(2u64, 3u32), (2, 4)] {
        let qx = QuadExtCtx::build(FieldSpec::new(p, k)).unwrap();
        let ext = qx.ext();
        let q = qx.q();
        for i in 0..100u64 {
            let b = ext
                .el(sampling::draw_below(q, i, ext.size() - 1) + 1)
                .unwrap();
            let c = ext.el(sampling::draw_below(q + 1, i, ext.size())).unwrap();
            let mut coeffs = vec![ext.zero(); (q + 2) as usize + 1];
            coeffs[(q + 2) as usize] = ext.one();
            coeffs[q as usize] = b;
            coeffs[1] = c;
            let f = Poly::from_coeffs(ext, coeffs);
            let got = coeff_profile(ext, &f, 2 * q - 1);
            let want = ext.pow(b, 3 * q / 2);
            if got != want || got.is_zero() {
                eprintln!("even-q profile mismatch at q={q} sample {i}");
                ok = false;
            }
        }
    }
    // odd q: the coefficient of f^{q-1} is binom(q-1; (q-1)/2) b^{(q-1)/2}
    for (p, k) in [(5u64, 1u32), (7, 1), (3, 2)] {
        let qx = QuadExtCtx::build(FieldSpec::new(p, k)).unwrap();
        let ext = qx.ext();
        let q = qx.q();
        let binom = multinomial_exact(q - 1, &[(q - 1) / 2, (q - 1) / 2]).unwrap();
        let binom_mod = ext.from_int((binom % p).try_into().unwrap());
        for i in 0..100u64 {
            let b = ext
                .el(sampling::draw_below(2 * q, i, ext.size() - 1) + 1)
                .unwrap();
            let c = ext
                .el(sampling::draw_below(2 * q + 1, i, ext.size()))
                .unwrap();
            let mut coeffs = vec![ext.zero(); (q + 2) as usize + 1];
            coeffs[(q + 2) as usize] = ext.one();
            coeffs[q as usize] = b;
            coeffs[1] = c;
            let f = Poly::from_coeffs(ext, coeffs);
            let got = coeff_profile(ext, &f, q - 1);
            let want = ext.mul(binom_mod, ext.pow(b, (q - 1) / 2));
            if got != want || got.is_zero() {
                eprintln!("odd-q profile mismatch at q={q} sample {i}");
                ok = false;
            }
        }
    }
    report(
        7,
        "Hermite obstruction coefficients equal their closed forms, nonzero",
        ok,
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_08_mu_reduction_chain() {
    let start = Instant::now();
    let exhaustive = campaign(TheoremId::Lemma51Chain, vec![2, 3], Mode::Exhaustive, None);
    let sampled = campaign(
        TheoremId::Lemma51Chain,
        vec![2, 3, 4, 5, 8, 9],
        Mode::Sample {
            n: 1000,
            seed: 1729,
        },
        None,
    );
    report(
        8,
        "permutation iff power criterion iff (q != 1 mod 3 and fraction criterion)",
        exhaustive && sampled,
        start.elapsed(),
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_09_multinomial_coprimality() {
    let start = Instant::now();
    let mut ok = true;
    let mut cases = 0u64;
    for p in [2u64, 3, 5] {
        for i in 0..4000u64 {
            let m = sampling::draw_below(p ^ 0xA5A5, i, 200) + 1;
            let nparts = sampling::draw_below(p ^ 0x5A5A, i, 4) + 2;
            let mut parts = vec![];
            let mut left = m;
            for j in 0..nparts - 1 {
                let take = sampling::draw_below(i.wrapping_mul(97) ^ p, j, left + 1);
                parts.push(take);
                left -= take;
            }
            parts.push(left);
            let coprime = multinomial_coprime_p(m, &parts, p).unwrap();
            let exact = multinomial_exact(m, &parts).unwrap();
            if coprime != (exact.clone() % p != 0u32.into()) {
                eprintln!("multinomial mismatch: m={m} parts={parts:?} p={p}");
                ok = false;
            }
            cases += 1;
        }
    }
    report(
        9,
        "no-carry criterion iff exact multinomial nonzero mod p (12000 cases)",
        ok && cases >= 10_000,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_10_base3_tuple_families() {
    let start = Instant::now();
    let mut ok = true;
    for ell in [3, 4, 5] {
        if let Some(ce) = base3_tuple_lemma(TupleFamily::FiveSlot, ell).unwrap() {
            eprintln!("five-slot counterexample at l={ell}: {ce:?}");
            ok = false;
        }
    }
    for ell in [5, 6] {
        if let Some(ce) = base3_tuple_lemma(TupleFamily::FourSlot, ell).unwrap() {
            eprintln!("four-slot counterexample at l={ell}: {ce:?}");
            ok = false;
        }
    }
    report(
        10,
        "base-3 tuple family checkers find zero counterexamples",
        ok,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_11_equivalence_classification() {
    let start = Instant::now();
    let ok = campaign(TheoremId::Thm17, vec![2, 3, 4], Mode::Exhaustive, Some(9));
    report(
        11,
        "every permutation member classifies with a verified witness, q <= 4",
        ok,
        start.elapsed(),
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_12_degree9_threshold_interval() {
    let start = Instant::now();
    let w = weil_threshold(9).unwrap();
    report(
        12,
        "degree-9 threshold lies in (1793, 1794)",
        w > 1793.0 && w < 1794.0,
        start.elapsed(),
        Duration::from_secs(5),
    );
}
