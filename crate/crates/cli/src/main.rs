use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zeta7_cli::commands::{coverings_cmd, polarization_cmd, reps_cmd, solve_cmd, sweep_cmd, verify_paper_cmd, Outcome};
use zeta7_cli::{parse_beta, ExitStatus, Manifest, Strictness, Suite, SweepConfig};

/// Genus-3 curves with real multiplication by Q(ζ7)+: construction and
/// verification.
#[derive(Debug, Parser)]
#[command(name = "zeta7", version)]
struct Cli {
    /// Also write the machine-readable result to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Build and check the curve bundle for four interpolation nodes.
    Solve {
        /// Four rationals, e.g. `1,2,3,5` or `1/2,2,0.75,5`.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Run the fixed verification suite.
    VerifyPaper {
        /// Treat known fixture issues as failures.
        #[arg(long)]
        strict: bool,
        /// Run a single suite.
        #[arg(long, value_enum)]
        only: Option<Suite>,
    },
    /// Build bundles for random node tuples.
    Sweep {
        #[arg(short, long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Representation-theoretic decompositions and orbit table.
    Reps,
    /// Gram matrix of the trace pairing and its elementary divisors.
    Polarization,
    /// Enumerate the covering classes.
    Coverings {
        /// Print every class representative.
        #[arg(long)]
        list: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitStatus::Usage.into()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitStatus::Usage
            } else {
                ExitStatus::Success
            };
            let _ = e.print();
            return code.into();
        }
    };
    let outcome: Outcome = match cli.command {
        Cmd::Solve { beta } => match parse_beta(&beta) {
            Ok(p) => solve_cmd(&p),
            Err(e) => return usage(e),
        },
        Cmd::VerifyPaper { strict, only } => {
            let manifest = match Manifest::load() {
                Ok(m) => m,
                Err(e) => return usage(e),
            };
            let strictness = if strict { Strictness::Strict } else { Strictness::Report };
            verify_paper_cmd(only, strictness, &manifest)
        }
        Cmd::Sweep { n, seed } => match SweepConfig::new(n, seed) {
            Ok(cfg) => {
                let (outcome, timing) = sweep_cmd(cfg);
                eprint!("{timing}");
                outcome
            }
            Err(e) => return usage(e),
        },
        Cmd::Reps => reps_cmd(),
        Cmd::Polarization => polarization_cmd(),
        Cmd::Coverings { list } => coverings_cmd(list),
    };
    print!("{}", outcome.text);
    if let Some(path) = cli.json {
        if let Err(e) = std::fs::write(&path, format!("{}\n", outcome.json)) {
            return usage(format!("cannot write {}: {e}", path.display()));
        }
    }
    outcome.status.into()
}
