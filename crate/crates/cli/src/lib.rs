//! Sweep planning, parallel execution and report rendering for `qcong`.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;
use thiserror::Error;

use qcong_core::congruence::{
    is_prime, run_check, Check, Options, Status, Theorem, VerificationRecord, DEFAULT_MAX_DEGREE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown theorem tag `{0}`")]
    UnknownTheorem(String),
    #[error("no theorem selected")]
    NoTheorem,
    #[error("invalid range `{0}`: expected A..B with 1 ≤ A ≤ B")]
    BadRange(String),
    #[error("--jobs must be at least 1")]
    NoJobs,
    #[error("could not start the worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// Everything one sweep needs. Tags and bounds are checked by [`run`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub theorems: Vec<String>,
    pub lo: i64,
    pub hi: i64,
    pub jobs: usize,
    pub format: Format,
    pub dump_remainders: bool,
    pub max_degree: usize,
}

impl SweepConfig {
    pub fn new(theorems: &[&str], lo: i64, hi: i64) -> Self {
        SweepConfig {
            theorems: theorems.iter().map(|s| s.to_string()).collect(),
            lo,
            hi,
            jobs: 1,
            format: Format::default(),
            dump_remainders: false,
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }

    /// The concrete checks, in theorem order, or the first configuration error.
    pub fn plan(&self) -> Result<Vec<Check>, ConfigError> {
        if self.lo < 1 || self.lo > self.hi {
            return Err(ConfigError::BadRange(format!("{}..{}", self.lo, self.hi)));
        }
        if self.jobs == 0 {
            return Err(ConfigError::NoJobs);
        }
        let theorems = parse_theorems(&self.theorems.join(","))?;
        Ok(theorems
            .into_iter()
            .flat_map(|t| expand(t, self.lo as u64, self.hi as u64))
            .collect())
    }
}

/// Comma-separated tags, deduplicated, in canonical theorem order.
pub fn parse_theorems(s: &str) -> Result<Vec<Theorem>, ConfigError> {
    let mut out = Vec::new();
    for tag in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let t = Theorem::from_str(tag).map_err(|_| ConfigError::UnknownTheorem(tag.into()))?;
        out.push(t);
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(ConfigError::NoTheorem);
    }
    Ok(out)
}

/// `A..B` (inclusive) or a single `N`.
pub fn parse_range(s: &str) -> Result<(i64, i64), ConfigError> {
    let bad = || ConfigError::BadRange(s.to_string());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo < 1 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// The parameter tuples one theorem is checked at for `lo ≤ n ≤ hi`. For the
/// classical congruences the range bounds the prime.
pub fn expand(theorem: Theorem, lo: u64, hi: u64) -> Vec<Check> {
    let one = |n: u64| Check::new(theorem, vec![n as i64]);
    let primes = |min: u64| (lo.max(min)..=hi).filter(|&p| is_prime(p));
    match theorem {
        Theorem::Lemma32 => (lo..=hi)
            .flat_map(|n| (1..n).map(move |k| Check::new(theorem, vec![n as i64, k as i64])))
            .collect(),
        Theorem::Classical11 => primes(5).map(one).collect(),
        Theorem::Classical12 => primes(5)
            .flat_map(|p| (1..=2).map(move |e| Check::new(theorem, vec![p as i64, e])))
            .collect(),
        Theorem::Classical13 => [1u64, 3, 5]
            .into_iter()
            .flat_map(|k| primes(k + 1).map(move |p| Check::new(theorem, vec![k as i64, p as i64])))
            .collect(),
        _ => (lo..=hi).map(one).collect(),
    }
}

/// Runs the sweep on `jobs` workers. Returns the exit code and the records
/// sorted by (theorem, params).
pub fn run(config: &SweepConfig) -> (i32, Vec<VerificationRecord>) {
    match try_run(config) {
        Ok(records) => {
            let code = if records.iter().any(|r| r.status == Status::Fails) {
                EXIT_FAILS
            } else {
                EXIT_OK
            };
            (code, records)
        }
        Err(_) => (EXIT_INVALID, Vec::new()),
    }
}

pub fn try_run(config: &SweepConfig) -> Result<Vec<VerificationRecord>, ConfigError> {
    let checks = config.plan()?;
    let opts = Options {
        max_degree: config.max_degree,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| ConfigError::Pool(e.to_string()))?;
    let mut records: Vec<VerificationRecord> =
        pool.install(|| checks.par_iter().map(|c| run_check(c, &opts)).collect());
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(records)
}

fn params_text(params: &[i64]) -> String {
    params
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

pub fn summary_line(records: &[VerificationRecord]) -> String {
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    format!(
        "{} holds / {} fails / {} skipped",
        count(Status::Holds),
        count(Status::Fails),
        count(Status::Skipped)
    )
}

/// Renders the records in the requested format.
pub fn emit_report(records: &[VerificationRecord], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(records).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "theorem",
                "params",
                "status",
                "remainder_digest",
                "elapsed_ms",
            ])
            .expect("in-memory write");
            for r in records {
                w.write_record([
                    r.theorem.tag().to_string(),
                    params_text(&r.params),
                    r.status.to_string(),
                    r.remainder_digest.clone().unwrap_or_default(),
                    r.elapsed_ms.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:<12} {:<12} {:<8} {:>10}  remainder_digest",
                "theorem", "params", "status", "elapsed_ms"
            );
            for r in records {
                let _ = writeln!(
                    s,
                    "{:<12} {:<12} {:<8} {:>10}  {}",
                    r.theorem.tag(),
                    params_text(&r.params),
                    r.status.to_string(),
                    r.elapsed_ms,
                    r.remainder_digest.as_deref().unwrap_or("-")
                );
            }
            let _ = writeln!(s, "{}", summary_line(records));
            s
        }
    }
}

/// Full remainders of the failing records that have one.
pub fn emit_remainders(records: &[VerificationRecord]) -> String {
    let mut s = String::new();
    for r in records {
        if let Some(rem) = &r.remainder {
            let _ = writeln!(s, "{} [{}]: {rem}", r.theorem.tag(), params_text(&r.params));
        }
    }
    s
}
