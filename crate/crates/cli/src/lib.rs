//! Library half of the `zeta7` tool: argument values, the JSON document
//! schema, the fixture manifest, and the command implementations.

pub mod commands;
pub mod config;
pub mod document;
pub mod exit;
pub mod fixtures;
pub mod suite;
pub mod sweep;

pub use config::{parse_beta, parse_rationals, ConfigError, RunConfig, Strictness};
pub use document::{BundleDocument, CheckDocument, DocumentError, TermDocument, SCHEMA_VERSION};
pub use exit::ExitStatus;
pub use fixtures::{Manifest, FIXTURES_ENV};
pub use suite::{verify_paper, Status, Suite, SuiteCheck, VerifyReport};
pub use sweep::{run_sweep, SweepConfig, SweepReport, SweepTiming};
