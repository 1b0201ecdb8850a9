use std::path::PathBuf;

use thiserror::Error;
use zeta7_core::diophantine::BetaParams;
use zeta7_core::exactcore::{parse_rational, ParseRationalError, Rational};

use crate::suite::Suite;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("bad rational: {0}")]
    Rational(#[from] ParseRationalError),
    #[error("expected {expected} comma-separated values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("sweep size must be at least 1")]
    EmptySweep,
    #[error("cannot read fixtures: {0}")]
    Fixtures(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Known-typo checks fail the run.
    Strict,
    /// Known-typo checks are reported as warnings.
    #[default]
    Report,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Solve { beta: Box<BetaParams> },
    VerifyPaper { only: Option<Suite> },
    Sweep { n: usize, seed: u64 },
    Reps,
    Polarization,
    Coverings { list: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub json: Option<PathBuf>,
    pub strictness: Strictness,
}

/// Comma-separated exact rationals (`p/q`, integers, or terminating
/// decimals).
pub fn parse_rationals(text: &str) -> Result<Vec<Rational>, ConfigError> {
    text.split(',')
        .map(|s| parse_rational(s).map_err(ConfigError::from))
        .collect()
}

/// Exactly four nodes. Degeneracy is not checked here.
pub fn parse_beta(text: &str) -> Result<BetaParams, ConfigError> {
    let v = parse_rationals(text)?;
    let got = v.len();
    let beta: [Rational; 4] = v.try_into().map_err(|_| ConfigError::Arity { expected: 4, got })?;
    Ok(BetaParams::new(beta))
}
