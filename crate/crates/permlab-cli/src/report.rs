//! Append-only JSON Lines campaign reports with stable key order, plus the
//! campaign-id scheme that makes identical configs reproducible and
//! re-runs distinguishable.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use crate::config::{CampaignConfig, Mode};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Counterexample {
    /// Coefficient element ids in campaign tuple order.
    pub tuple: Vec<u64>,
    pub predicate: bool,
    pub oracle: bool,
}

/// One campaign result row; disagreements = 0 exactly when no
/// counterexample is present.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportRecord {
    pub campaign: String,
    pub theorem: String,
    pub q: u64,
    pub tuples_tested: u64,
    pub agreements: u64,
    pub disagreements: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    pub wall_ms: u64,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Hash of the semantic config: theorem, q list, mode, and search cap.
/// Jobs and the output path are excluded so stripe counts never change
/// report identity.
pub fn config_hash(cfg: &CampaignConfig) -> String {
    let mut h = 0xC0FFEEu64;
    let mut feed = |v: u64| h = mix(h ^ v);
    feed(cfg.theorem.as_str().len() as u64);
    for b in cfg.theorem.as_str().bytes() {
        feed(b as u64);
    }
    for &q in &cfg.qs {
        feed(q);
    }
    match cfg.mode {
        Mode::Exhaustive => feed(1),
        Mode::Sample { n, seed } => {
            feed(2);
            feed(n);
            feed(seed);
        }
    }
    feed(cfg.search_cap.unwrap_or(0));
    format!("{h:016x}")
}

/// Campaign id = <config hash>-r<run index>, where the run index counts
/// existing runs of the same hash in the output file. A fresh file always
/// yields -r0, so identical configs produce identical bytes; re-running
/// into the same file appends under a distinct id.
pub fn campaign_id(cfg: &CampaignConfig, existing: &[ReportRecord]) -> String {
    let hash = config_hash(cfg);
    let mut runs = std::collections::HashSet::new();
    for r in existing {
        if let Some(rest) = r.campaign.strip_prefix(&hash) {
            if let Some(idx) = rest.strip_prefix("-r").and_then(|s| s.parse::<u64>().ok()) {
                runs.insert(idx);
            }
        }
    }
    if cfg.resume {
        if let Some(&last) = runs.iter().max().as_ref() {
            return format!("{hash}-r{last}");
        }
    }
    let next = runs.iter().max().map_or(0, |m| m + 1);
    let next = if runs.is_empty() { 0 } else { next };
    format!("{hash}-r{next}")
}

pub fn read_records(path: &Path) -> Result<Vec<ReportRecord>> {
    if !path.exists() {
        return Ok(vec![]);
    }
    let file = std::fs::File::open(path).with_context(|| format!("open {}", path.display()))?;
    let mut out = vec![];
    for line in BufReader::new(file).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).with_context(|| format!("parse line: {line}"))?);
    }
    Ok(out)
}

/// Appends one JSON object per record; an empty record list leaves the
/// file untouched.
pub fn write_report(records: &[ReportRecord], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Ok(());
    }
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("open {} for append", path.display()))?;
    for r in records {
        serde_json::to_writer(&mut file, r)?;
        file.write_all(b"\n")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::TheoremId;

    fn record(campaign: &str, q: u64) -> ReportRecord {
        ReportRecord {
            campaign: campaign.into(),
            theorem: "thm13".into(),
            q,
            tuples_tested: 16,
            agreements: 16,
            disagreements: 0,
            counterexample: None,
            wall_ms: 5,
            mode: "exhaustive".into(),
            samples: None,
            seed: None,
        }
    }

    #[test]
    fn round_trip_one_record() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.jsonl");
        write_report(&[], &path).unwrap();
        assert!(!path.exists());
        write_report(&[record("abc-r0", 2)], &path).unwrap();
        let back = read_records(&path).unwrap();
        assert_eq!(back, vec![record("abc-r0", 2)]);
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(!text.contains("counterexample"));
    }

    #[test]
    fn counterexample_row_carries_both_verdicts() {
        let mut r = record("abc-r0", 3);
        r.disagreements = 1;
        r.counterexample = Some(Counterexample {
            tuple: vec![0, 0, 2, 0],
            predicate: true,
            oracle: false,
        });
        let line = serde_json::to_string(&r).unwrap();
        assert!(line.contains("\"predicate\":true"));
        assert!(line.contains("\"oracle\":false"));
        let back: ReportRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn ids_are_stable_and_rerun_distinct() {
        let cfg = CampaignConfig::new(TheoremId::Thm13, vec![2, 3]).unwrap();
        let id0 = campaign_id(&cfg, &[]);
        assert!(id0.ends_with("-r0"));
        let id1 = campaign_id(&cfg, &[record(&id0, 2)]);
        assert_ne!(id0, id1);
        assert!(id1.ends_with("-r1"));
        // resume reuses the latest run id
        let mut cfg_resume = cfg.clone();
        cfg_resume.resume = true;
        assert_eq!(campaign_id(&cfg_resume, &[record(&id0, 2)]), id0);
        // a different theorem hashes differently
        let other = CampaignConfig::new(TheoremId::Thm14, vec![2, 3]).unwrap();
        assert_ne!(config_hash(&cfg), config_hash(&other));
    }
}
