//! The campaign engine: for each q it builds the field contexts once,
//! stripes the coefficient space across worker threads by index residue,
//! compares the claim's predicate against the brute-force oracle on every
//! tuple, and merges stripe results deterministically (the counterexample
//! with the lowest tuple position wins).

use std::time::Instant;

use anyhow::{bail, Context, Result};

use permlab::gf::{FieldCtx, FieldSpec, QuadExtCtx};
use permlab::permcheck::{is_permutation_poly, rational_permutes, RatDomain, RationalFn};
use permlab::poly::Poly;
use permlab::sampling;
use permlab::theorems::{
    normalize_deg3, prop43_poly, thm11_predicate, thm12_predicate, thm13_predicate,
    thm14_predicate, thm15_predicate, thm17_classify, PairMapCoeffs, PairMapTables, QuarticClass,
    QuarticCoeffs, QuarticTables, SearchCaps, TheoremError, Thm13Coeffs,
};

use crate::config::{prime_power, CampaignConfig, Mode, TheoremId};
use crate::report::{campaign_id, read_records, write_report, Counterexample, ReportRecord};

/// Verdict pair for one tuple.
#[derive(Debug, Clone, Copy)]
struct Verdicts {
    predicate: bool,
    oracle: bool,
}

impl Verdicts {
    fn agree(&self) -> bool {
        self.predicate == self.oracle
    }
}

struct StripeResult {
    tested: u64,
    agreements: u64,
    /// (position in campaign order, tuple ids, verdicts)
    first_disagreement: Option<(u64, Vec<u64>, Verdicts)>,
}

/// (tested, agreements, disagreements, first counterexample).
type QSummary = (u64, u64, u64, Option<(Vec<u64>, Verdicts)>);

/// Runs `check` over the whole space (exhaustively or by seeded sampling),
/// striping positions across `jobs` threads by residue class.
fn run_striped(
    space: u64,
    mode: Mode,
    jobs: usize,
    decode: &(dyn Fn(u64) -> Vec<u64> + Sync),
    check: &(dyn Fn(u64) -> Result<Verdicts, TheoremError> + Sync),
) -> Result<QSummary, TheoremError> {
    let total_positions = match mode {
        Mode::Exhaustive => space,
        Mode::Sample { n, .. } => n,
    };
    let index_at = |pos: u64| match mode {
        Mode::Exhaustive => pos,
        Mode::Sample { seed, .. } => sampling::draw_below(seed, pos, space),
    };

    let worker = |stripe: usize| -> Result<StripeResult, TheoremError> {
        let mut res = StripeResult {
            tested: 0,
            agreements: 0,
            first_disagreement: None,
        };
        let mut pos = stripe as u64;
        while pos < total_positions {
            let idx = index_at(pos);
            let v = check(idx)?;
            res.tested += 1;
            if v.agree() {
                res.agreements += 1;
            } else if res.first_disagreement.is_none() {
                res.first_disagreement = Some((pos, decode(idx), v));
            }
            pos += jobs as u64;
        }
        Ok(res)
    };

    let stripes: Vec<Result<StripeResult, TheoremError>> = if jobs == 1 {
        vec![worker(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs).map(|w| scope.spawn(move || worker(w))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };

    let mut tested = 0;
    let mut agreements = 0;
    let mut best: Option<(u64, Vec<u64>, Verdicts)> = None;
    for s in stripes {
        let s = s?;
        tested += s.tested;
        agreements += s.agreements;
        if let Some((pos, ids, v)) = s.first_disagreement {
            if best.as_ref().is_none_or(|(bp, _, _)| pos < *bp) {
                best = Some((pos, ids, v));
            }
        }
    }
    let disagreements = tested - agreements;
    Ok((
        tested,
        agreements,
        disagreements,
        best.map(|(_, ids, v)| (ids, v)),
    ))
}

/// Mixed-radix decoding of a tuple index into element ids, most
/// significant digit first.
fn decode_radix(mut idx: u64, radices: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; radices.len()];
    for (i, &r) in radices.iter().enumerate().rev() {
        out[i] = idx % r;
        idx /= r;
    }
    out
}

pub struct CampaignOutcome {
    pub records: Vec<ReportRecord>,
    pub all_clean: bool,
}

/// Runs the configured campaign over every q, appends one record per q to
/// the report file (when configured), and reports whether every record had
/// zero disagreements.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignOutcome> {
    let existing = match &cfg.out {
        Some(path) => read_records(path)?,
        None => vec![],
    };
    let id = campaign_id(cfg, &existing);
    let caps = match cfg.search_cap {
        Some(q) => SearchCaps::with_q(q),
        None => SearchCaps::default(),
    };

    let mut records = vec![];
    for &q in &cfg.qs {
        if cfg.resume
            && existing
                .iter()
                .any(|r| r.campaign == id && r.q == q && r.theorem == cfg.theorem.as_str())
        {
            continue;
        }
        let started = Instant::now();
        let (tested, agreements, disagreements, ce) = run_one_q(cfg, q, &caps)
            .with_context(|| format!("campaign {} at q={q}", cfg.theorem))?;
        let (samples, seed) = match cfg.mode {
            Mode::Exhaustive => (None, None),
            Mode::Sample { n, seed } => (Some(n), Some(seed)),
        };
        records.push(ReportRecord {
            campaign: id.clone(),
            theorem: cfg.theorem.as_str().into(),
            q,
            tuples_tested: tested,
            agreements,
            disagreements,
            counterexample: ce.map(|(tuple, v)| Counterexample {
                tuple,
                predicate: v.predicate,
                oracle: v.oracle,
            }),
            wall_ms: started.elapsed().as_millis() as u64,
            mode: cfg.mode.name().into(),
            samples,
            seed,
        });
    }

    if let Some(path) = &cfg.out {
        write_report(&records, path)?;
    }
    let all_clean = records.iter().all(|r| r.disagreements == 0);
    Ok(CampaignOutcome { records, all_clean })
}

fn build_base(q: u64) -> Result<FieldCtx> {
    let (p, k) = prime_power(q).with_context(|| format!("q={q} is not a prime power"))?;
    Ok(FieldCtx::build(FieldSpec::new(p, k), None)?)
}

fn build_quad(q: u64) -> Result<QuadExtCtx> {
    let (p, k) = prime_power(q).with_context(|| format!("q={q} is not a prime power"))?;
    Ok(QuadExtCtx::build(FieldSpec::new(p, k))?)
}

fn run_one_q(cfg: &CampaignConfig, q: u64, caps: &SearchCaps) -> Result<QSummary> {
    match cfg.theorem {
        TheoremId::Thm13 => {
            let qx = build_quad(q)?;
            let n = qx.ext().size();
            // f(x) = x^{q+2} + b x^q + c x via per-element monomial tables
            let ext = qx.ext();
            let xq2: Vec<_> = ext.elems().map(|x| ext.pow(x, q + 2)).collect();
            let xq: Vec<_> = ext.elems().map(|x| ext.pow(x, q)).collect();
            let radices = [n, n];
            let check = |idx: u64| {
                let ids = decode_radix(idx, &radices);
                let co = Thm13Coeffs {
                    b: ext.el(ids[0]).unwrap(),
                    c: ext.el(ids[1]).unwrap(),
                };
                let mut seen = vec![false; n as usize];
                let mut oracle = true;
                for x in ext.elems() {
                    let i = x.id() as usize;
                    let y = ext
                        .add(ext.add(xq2[i], ext.mul(co.b, xq[i])), ext.mul(co.c, x))
                        .id() as usize;
                    if seen[y] {
                        oracle = false;
                        break;
                    }
                    seen[y] = true;
                }
                Ok(Verdicts {
                    predicate: thm13_predicate(&qx, co),
                    oracle,
                })
            };
            Ok(run_striped(
                n * n,
                cfg.mode,
                cfg.jobs,
                &|i| decode_radix(i, &radices),
                &check,
            )?)
        }
        TheoremId::Thm11 | TheoremId::Thm12 => {
            let qx = build_quad(q)?;
            let tables = QuarticTables::new(&qx);
            let n = qx.ext().size();
            let radices = [n, n, n, n];
            let is_thm11 = cfg.theorem == TheoremId::Thm11;
            let check = |idx: u64| {
                let ids = decode_radix(idx, &radices);
                let ext = qx.ext();
                let co = QuarticCoeffs {
                    a: ext.el(ids[0]).unwrap(),
                    b: ext.el(ids[1]).unwrap(),
                    c: ext.el(ids[2]).unwrap(),
                    d: ext.el(ids[3]).unwrap(),
                };
                let predicate = if is_thm11 {
                    thm11_predicate(&qx, &tables, co, caps)?.is_complete_mapping
                } else {
                    thm12_predicate(&qx, &tables, co)
                };
                Ok(Verdicts {
                    predicate,
                    oracle: tables.is_complete_mapping(&qx, co),
                })
            };
            Ok(run_striped(
                n * n * n * n,
                cfg.mode,
                cfg.jobs,
                &|i| decode_radix(i, &radices),
                &check,
            )?)
        }
        TheoremId::Thm17 => {
            let qx = build_quad(q)?;
            let tables = QuarticTables::new(&qx);
            let n = qx.ext().size();
            let radices = [n, n, n, n];
            let check = |idx: u64| {
                let ids = decode_radix(idx, &radices);
                let ext = qx.ext();
                let co = QuarticCoeffs {
                    a: ext.el(ids[0]).unwrap(),
                    b: ext.el(ids[1]).unwrap(),
                    c: ext.el(ids[2]).unwrap(),
                    d: ext.el(ids[3]).unwrap(),
                };
                let oracle = tables.is_permutation(&qx, co);
                let predicate = match thm17_classify(&qx, &tables, co, caps) {
                    Ok(QuarticClass::NotPermutation) => false,
                    Ok(class) => class.verify(&qx, &tables, co),
                    Err(TheoremError::Unclassified) => false,
                    Err(e) => return Err(e),
                };
                Ok(Verdicts { predicate, oracle })
            };
            Ok(run_striped(
                n * n * n * n,
                cfg.mode,
                cfg.jobs,
                &|i| decode_radix(i, &radices),
                &check,
            )?)
        }
        TheoremId::Thm14 => {
            let base = build_base(q)?;
            let tables = PairMapTables::new(&base);
            let radices = [q, q, q, q];
            let check = |idx: u64| {
                let ids = decode_radix(idx, &radices);
                let co = PairMapCoeffs {
                    a: base.el(ids[0]).unwrap(),
                    b: base.el(ids[1]).unwrap(),
                    c: base.el(ids[2]).unwrap(),
                    d: base.el(ids[3]).unwrap(),
                    e: base.zero(),
                };
                Ok(Verdicts {
                    predicate: thm14_predicate(&base, co)?,
                    oracle: tables.is_bijection(&base, co),
                })
            };
            Ok(run_striped(
                q * q * q * q,
                cfg.mode,
                cfg.jobs,
                &|i| decode_radix(i, &radices),
                &check,
            )?)
        }
        TheoremId::Thm15 => {
            if q % 3 != 0 {
                bail!("thm15 campaigns need 3 | q, got q={q}");
            }
            let base = build_base(q)?;
            let tables = PairMapTables::new(&base);
            // e ranges over nonzero ids only
            let radices = [q, q, q, q, q - 1];
            let decode = move |idx: u64| {
                let mut ids = decode_radix(idx, &radices);
                ids[4] += 1;
                ids
            };
            let check = |idx: u64| {
                let ids = decode(idx);
                let co = PairMapCoeffs {
                    a: base.el(ids[0]).unwrap(),
                    b: base.el(ids[1]).unwrap(),
                    c: base.el(ids[2]).unwrap(),
                    d: base.el(ids[3]).unwrap(),
                    e: base.el(ids[4]).unwrap(),
                };
                Ok(Verdicts {
                    predicate: thm15_predicate(&base, co)?,
                    oracle: tables.is_bijection(&base, co),
                })
            };
            Ok(run_striped(
                q * q * q * q * (q - 1),
                cfg.mode,
                cfg.jobs,
                &decode,
                &check,
            )?)
        }
        TheoremId::Prop43 => {
            if q % 3 != 0 {
                bail!("prop43 campaigns need 3 | q, got q={q}");
            }
            let base = build_base(q)?;
            // (a, b, c, d) with a, c nonzero; the claim is "never a
            // permutation", so the predicate is constant false
            let radices = [q - 1, q, q - 1, q];
            let decode = move |idx: u64| {
                let mut ids = decode_radix(idx, &radices);
                ids[0] += 1;
                ids[2] += 1;
                ids
            };
            let check = |idx: u64| {
                let ids = decode(idx);
                let f = prop43_poly(
                    &base,
                    base.el(ids[0]).unwrap(),
                    base.el(ids[1]).unwrap(),
                    base.el(ids[2]).unwrap(),
                    base.el(ids[3]).unwrap(),
                );
                Ok(Verdicts {
                    predicate: false,
                    oracle: is_permutation_poly(&base, &f),
                })
            };
            Ok(run_striped(
                (q - 1) * q * (q - 1) * q,
                cfg.mode,
                cfg.jobs,
                &decode,
                &check,
            )?)
        }
        TheoremId::Lemma51Chain => {
            let qx = build_quad(q)?;
            let tables = QuarticTables::new(&qx);
            let n = qx.ext().size();
            let radices = [n, n, n, n];
            let check = |idx: u64| {
                let ids = decode_radix(idx, &radices);
                let ext = qx.ext();
                let co = QuarticCoeffs {
                    a: ext.el(ids[0]).unwrap(),
                    b: ext.el(ids[1]).unwrap(),
                    c: ext.el(ids[2]).unwrap(),
                    d: ext.el(ids[3]).unwrap(),
                };
                let brute = tables.is_permutation(&qx, co);
                let f = permlab::theorems::quartic_poly(&qx, co);
                let (power, fraction) = match permlab::mureduce::split_xr_form(ext, &f, q) {
                    Ok(form) => (
                        permlab::mureduce::mu_power_criterion(&qx, &form),
                        permlab::mureduce::mu_fraction_criterion(&qx, &form)
                            .expect("form is valid"),
                    ),
                    Err(_) => (false, false),
                };
                // three-way equivalence; a counterexample row of
                // (false, true) means the chain broke at this tuple
                let chain = power == brute && (q % 3 != 1 && fraction) == brute;
                Ok(Verdicts {
                    predicate: chain,
                    oracle: true,
                })
            };
            Ok(run_striped(
                n * n * n * n,
                cfg.mode,
                cfg.jobs,
                &|i| decode_radix(i, &radices),
                &check,
            )?)
        }
        TheoremId::Lemma55 => {
            let qx = build_quad(q)?;
            let base = qx.base();
            // monic-free degree-3 polynomials: leading coefficient nonzero
            let radices = [q - 1, q, q, q];
            let decode = move |idx: u64| {
                let mut ids = decode_radix(idx, &radices);
                ids[0] += 1;
                ids
            };
            let check = |idx: u64| {
                let ids = decode(idx);
                let h = RationalFn::from_poly(
                    Poly::from_coeffs(
                        base,
                        vec![
                            base.el(ids[3]).unwrap(),
                            base.el(ids[2]).unwrap(),
                            base.el(ids[1]).unwrap(),
                            base.el(ids[0]).unwrap(),
                        ],
                    ),
                    base,
                );
                let oracle = rational_permutes(base, &h, RatDomain::ProjLine).unwrap();
                let predicate = match normalize_deg3(&qx, &h, caps) {
                    Ok(norm) => norm.verify(&qx, &h),
                    Err(TheoremError::NotAPermutation) => false,
                    Err(e) => return Err(e),
                };
                Ok(Verdicts { predicate, oracle })
            };
            Ok(run_striped(
                (q - 1) * q * q * q,
                cfg.mode,
                cfg.jobs,
                &decode,
                &check,
            )?)
        }
    }
}
