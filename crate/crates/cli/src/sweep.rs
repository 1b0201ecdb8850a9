//! Random sweeps over node tuples.
//!
//! Tuples are drawn up front from a ChaCha8 stream, so the report depends
//! only on `n` and the seed; timings are kept out of the report.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use zeta7_core::curvefactory::assemble_bundle;
use zeta7_core::diophantine::{solve, BetaParams};
use zeta7_core::exactcore::format_rational;

use crate::config::ConfigError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(n: usize, seed: u64) -> Result<Self, ConfigError> {
        if n == 0 {
            return Err(ConfigError::EmptySweep);
        }
        Ok(Self { n, seed })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub index: usize,
    pub params: Vec<String>,
    pub pass: bool,
    /// Names of failing checks, or the solver error.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: String,
    pub n: usize,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<SweepEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepTiming {
    pub total: Duration,
    pub mean: Duration,
    pub max: Duration,
}

fn run_one(index: usize, p: &BetaParams) -> (SweepEntry, Duration) {
    let start = Instant::now();
    let failures = match solve(p)
        .map_err(|e| e.to_string())
        .and_then(|out| assemble_bundle(Some(p), &out.s7, &out.q4).map_err(|e| e.to_string()))
    {
        Ok(b) => b.report.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect(),
        Err(e) => vec![e],
    };
    let entry = SweepEntry {
        index,
        params: p.beta.iter().map(format_rational).collect(),
        pass: failures.is_empty(),
        failures,
    };
    (entry, start.elapsed())
}

pub fn run_sweep(cfg: SweepConfig) -> (SweepReport, SweepTiming) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let tuples: Vec<BetaParams> = (0..cfg.n).map(|_| BetaParams::sample(&mut rng)).collect();
    let results: Vec<(SweepEntry, Duration)> = tuples.par_iter().enumerate().map(|(i, p)| run_one(i, p)).collect();
    let max = results.iter().map(|(_, d)| *d).max().unwrap_or_default();
    let sum: Duration = results.iter().map(|(_, d)| *d).sum();
    let entries: Vec<SweepEntry> = results.into_iter().map(|(e, _)| e).collect();
    let passed = entries.iter().filter(|e| e.pass).count();
    let report = SweepReport {
        schema_version: crate::document::SCHEMA_VERSION.to_string(),
        n: cfg.n,
        seed: cfg.seed,
        passed,
        failed: cfg.n - passed,
        entries,
    };
    let timing = SweepTiming {
        total: start.elapsed(),
        mean: sum / cfg.n as u32,
        max,
    };
    (report, timing)
}
