//! Campaign configuration: the claim registry, q lists, run modes, and the
//! flat key=value config file with CLI override semantics.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

/// Seed used for sampled campaigns when none is given.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("unknown theorem id '{0}'")]
    UnknownTheorem(String),
    #[error("q = {0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("malformed q list entry '{0}'")]
    BadQEntry(String),
    #[error("unknown mode '{0}' (expected 'exhaustive' or 'sample')")]
    BadMode(String),
    #[error("unknown config key '{0}'")]
    UnknownKey(String),
    #[error("malformed value for '{key}': '{value}'")]
    BadValue { key: String, value: String },
    #[error("missing required setting '{0}'")]
    Missing(&'static str),
    #[error("sample count must be at least 1")]
    ZeroSamples,
    #[error("jobs must be at least 1")]
    ZeroJobs,
}

/// The checkable claims the verifier knows by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    Thm11,
    Thm12,
    Thm13,
    Thm14,
    Thm15,
    Thm17,
    Prop43,
    Lemma51Chain,
    Lemma55,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Thm11,
        TheoremId::Thm12,
        TheoremId::Thm13,
        TheoremId::Thm14,
        TheoremId::Thm15,
        TheoremId::Thm17,
        TheoremId::Prop43,
        TheoremId::Lemma51Chain,
        TheoremId::Lemma55,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Thm11 => "thm11",
            TheoremId::Thm12 => "thm12",
            TheoremId::Thm13 => "thm13",
            TheoremId::Thm14 => "thm14",
            TheoremId::Thm15 => "thm15",
            TheoremId::Thm17 => "thm17",
            TheoremId::Prop43 => "prop43",
            TheoremId::Lemma51Chain => "lemma51chain",
            TheoremId::Lemma55 => "lemma55",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase();
        let norm = norm
            .strip_prefix("thm")
            .map(|r| format!("thm{r}"))
            .unwrap_or(norm);
        for t in TheoremId::ALL {
            if t.as_str() == norm {
                return Ok(t);
            }
        }
        // bare numbers name the coefficient theorems
        match norm.as_str() {
            "11" => Ok(TheoremId::Thm11),
            "12" => Ok(TheoremId::Thm12),
            "13" => Ok(TheoremId::Thm13),
            "14" => Ok(TheoremId::Thm14),
            "15" => Ok(TheoremId::Thm15),
            "17" => Ok(TheoremId::Thm17),
            _ => Err(ConfigError::UnknownTheorem(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { n: u64, seed: u64 },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sample { .. } => "sample",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignConfig {
    pub theorem: TheoremId,
    pub qs: Vec<u64>,
    pub mode: Mode,
    pub jobs: usize,
    /// Overrides the witness/equivalence search caps when set.
    pub search_cap: Option<u64>,
    pub out: Option<PathBuf>,
    pub resume: bool,
}

impl CampaignConfig {
    pub fn new(theorem: TheoremId, qs: Vec<u64>) -> Result<Self, ConfigError> {
        for &q in &qs {
            prime_power(q).ok_or(ConfigError::NotAPrimePower(q))?;
        }
        Ok(CampaignConfig {
            theorem,
            qs,
            mode: Mode::Exhaustive,
            jobs: 1,
            search_cap: None,
            out: None,
            resume: false,
        })
    }
}

/// Some((p, k)) when q = p^k with p prime and k >= 1.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Parses "2,3,4" and "2..16" (prime powers inside the range) into a q
/// list; explicit entries must be prime powers themselves.
pub fn parse_q_list(s: &str) -> Result<Vec<u64>, ConfigError> {
    let mut out = vec![];
    for entry in s.split(',') {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        if let Some((lo, hi)) = entry.split_once("..") {
            let lo: u64 = lo
                .trim()
                .parse()
                .map_err(|_| ConfigError::BadQEntry(entry.to_string()))?;
            let hi: u64 = hi
                .trim()
                .parse()
                .map_err(|_| ConfigError::BadQEntry(entry.to_string()))?;
            for q in lo..=hi {
                if prime_power(q).is_some() {
                    out.push(q);
                }
            }
        } else {
            let q: u64 = entry
                .parse()
                .map_err(|_| ConfigError::BadQEntry(entry.to_string()))?;
            prime_power(q).ok_or(ConfigError::NotAPrimePower(q))?;
            out.push(q);
        }
    }
    Ok(out)
}

/// The subset of settings a config file may carry; CLI flags override
/// whatever the file sets.
#[derive(Debug, Default, Clone)]
pub struct FileSettings {
    pub theorem: Option<TheoremId>,
    pub qs: Option<Vec<u64>>,
    pub mode: Option<String>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub search_cap: Option<u64>,
}

/// Flat key=value file; '#' starts a comment, blank lines are skipped.
/// Keys: theorem, q_list, mode, samples, seed, jobs, out, search_cap.
pub fn parse_config_text(text: &str) -> Result<FileSettings, ConfigError> {
    let mut s = FileSettings::default();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::BadValue {
            key: line.into(),
            value: "".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let bad = || ConfigError::BadValue {
            key: key.into(),
            value: value.into(),
        };
        match key {
            "theorem" => s.theorem = Some(value.parse()?),
            "q_list" => s.qs = Some(parse_q_list(value)?),
            "mode" => match value {
                "exhaustive" | "sample" => s.mode = Some(value.to_string()),
                _ => return Err(ConfigError::BadMode(value.to_string())),
            },
            "samples" => s.samples = Some(value.parse().map_err(|_| bad())?),
            "seed" => s.seed = Some(value.parse().map_err(|_| bad())?),
            "jobs" => s.jobs = Some(value.parse().map_err(|_| bad())?),
            "out" => s.out = Some(PathBuf::from(value)),
            "search_cap" => s.search_cap = Some(value.parse().map_err(|_| bad())?),
            other => return Err(ConfigError::UnknownKey(other.to_string())),
        }
    }
    Ok(s)
}

/// Command-line values that take precedence over a config file.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub theorem: Option<TheoremId>,
    pub qs: Option<Vec<u64>>,
    pub mode: Option<String>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub search_cap: Option<u64>,
    pub resume: bool,
}

/// Resolves file settings plus overrides into a validated config.
/// Defaults: mode=exhaustive, jobs=1, seed=DEFAULT_SEED for sample mode.
pub fn resolve_config(file: FileSettings, ov: Overrides) -> Result<CampaignConfig, ConfigError> {
    let theorem = ov
        .theorem
        .or(file.theorem)
        .ok_or(ConfigError::Missing("theorem"))?;
    let qs = ov.qs.or(file.qs).ok_or(ConfigError::Missing("q_list"))?;
    let mode_name = ov.mode.or(file.mode).unwrap_or_else(|| "exhaustive".into());
    let mode = match mode_name.as_str() {
        "exhaustive" => Mode::Exhaustive,
        "sample" => {
            let n = ov
                .samples
                .or(file.samples)
                .ok_or(ConfigError::Missing("samples"))?;
            if n == 0 {
                return Err(ConfigError::ZeroSamples);
            }
            Mode::Sample {
                n,
                seed: ov.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            }
        }
        other => return Err(ConfigError::BadMode(other.to_string())),
    };
    let jobs = ov.jobs.or(file.jobs).unwrap_or(1);
    if jobs == 0 {
        return Err(ConfigError::ZeroJobs);
    }
    let mut cfg = CampaignConfig::new(theorem, qs)?;
    cfg.mode = mode;
    cfg.jobs = jobs;
    cfg.search_cap = ov.search_cap.or(file.search_cap);
    cfg.out = ov.out.or(file.out);
    cfg.resume = ov.resume;
    Ok(cfg)
}
