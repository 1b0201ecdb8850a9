//! Command bodies. Each returns the text for stdout, the JSON document for
//! `--json`, and the exit status; `main` only does I/O.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;
use zeta7_core::curvefactory::{appendix_consistency, assemble_bundle};
use zeta7_core::dihedral::{
    decompose, enumerate_coverings, induce, lefschetz_h1, projective_fixed_points, sym_power_char, Irrep, Subgroup,
    SubgroupCharacter,
};
use zeta7_core::diophantine::{solve, BetaParams, SolverError};
use zeta7_core::polarization::{gram, integer_determinant, lattice_basis, smith_normal_form};

use crate::config::Strictness;
use crate::document::{BundleDocument, SCHEMA_VERSION};
use crate::exit::ExitStatus;
use crate::fixtures::Manifest;
use crate::suite::{verify_paper, Status, Suite};
use crate::sweep::{run_sweep, SweepConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: ExitStatus,
    pub text: String,
    pub json: String,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn solve_cmd(beta: &BetaParams) -> Outcome {
    let out = match solve(beta) {
        Ok(out) => out,
        Err(e) => {
            let status = match e {
                SolverError::NotDivisible => ExitStatus::VerificationFailed,
                _ => ExitStatus::Degenerate,
            };
            return Outcome {
                status,
                text: format!("error: {e}\n"),
                json: to_json(&json!({ "schema_version": SCHEMA_VERSION, "error": e.to_string() })),
            };
        }
    };
    let bundle = match assemble_bundle(Some(beta), &out.s7, &out.q4) {
        Ok(b) => b,
        Err(e) => {
            return Outcome {
                status: ExitStatus::VerificationFailed,
                text: format!("error: {e}\n"),
                json: to_json(&json!({ "schema_version": SCHEMA_VERSION, "error": e.to_string() })),
            }
        }
    };
    let kappa = appendix_consistency(&beta.beta).ok().and_then(|r| r.kappa_normalized);
    let doc = BundleDocument::from_bundle(&bundle, kappa.as_ref());
    let mut text = String::new();
    writeln!(text, "s7 = {}", out.s7).unwrap();
    writeln!(text, "F6 = {}", out.f6).unwrap();
    for c in &doc.checks {
        writeln!(text, "{} {}: {}", mark(c.pass), c.name, c.detail).unwrap();
    }
    if let Some(k) = &doc.kappa {
        writeln!(text, "kappa * 4 D^6 = {k}").unwrap();
    }
    Outcome {
        status: if doc.all_pass() {
            ExitStatus::Success
        } else {
            ExitStatus::VerificationFailed
        },
        text,
        json: doc.to_json(),
    }
}

pub fn verify_paper_cmd(only: Option<Suite>, strictness: Strictness, manifest: &Manifest) -> Outcome {
    let report = verify_paper(only, manifest);
    let mut text = String::new();
    for c in &report.checks {
        writeln!(text, "{} [{}] {}: {}", c.status, c.suite, c.name, c.detail).unwrap();
    }
    writeln!(
        text,
        "{} passed, {} failed, {} warnings",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Warn)
    )
    .unwrap();
    Outcome {
        status: report.exit_status(strictness),
        text,
        json: to_json(&report),
    }
}

/// The report is deterministic; timings go to the separate `timing` text.
pub fn sweep_cmd(cfg: SweepConfig) -> (Outcome, String) {
    let (report, timing) = run_sweep(cfg);
    let mut text = String::new();
    for e in report.entries.iter().filter(|e| !e.pass) {
        writeln!(
            text,
            "FAIL #{} beta=({}): {}",
            e.index,
            e.params.join(","),
            e.failures.join(", ")
        )
        .unwrap();
    }
    writeln!(
        text,
        "{}/{} bundles pass (seed {})",
        report.passed, report.n, report.seed
    )
    .unwrap();
    let timing = format!(
        "total {:.3?}, mean {:.3?}, max {:.3?} per bundle\n",
        timing.total, timing.mean, timing.max
    );
    let outcome = Outcome {
        status: if report.failed == 0 {
            ExitStatus::Success
        } else {
            ExitStatus::VerificationFailed
        },
        text,
        json: to_json(&report),
    };
    (outcome, timing)
}

pub fn reps_cmd() -> Outcome {
    let mut ok = true;
    let mut text = String::new();
    let mut record = |label: &str, got: Option<[i64; 5]>, expected: [i64; 5]| {
        let pass = got == Some(expected);
        ok &= pass;
        match got {
            Some(m) => writeln!(text, "{} {label} = {m:?}", mark(pass)).unwrap(),
            None => writeln!(text, "{} {label}: not a character", mark(pass)).unwrap(),
        }
        json!({ "name": label, "multiplicities": got, "pass": pass })
    };
    let v = Irrep::Alt.character().add(&Irrep::Chi(1).character());
    let rows = vec![
        record("h1", lefschetz_h1(6, 0, 8).ok(), [0, 4, 2, 2, 2]),
        record(
            "Sym^11",
            decompose(&sym_power_char(&v, 11)).as_character().ok(),
            [3, 9, 11, 11, 11],
        ),
        record(
            "Sym^14",
            decompose(&sym_power_char(&v, 14)).as_character().ok(),
            [13, 5, 17, 17, 17],
        ),
        record(
            "Ind_1(1)",
            induce(&SubgroupCharacter::trivial(Subgroup::Trivial))
                .ok()
                .and_then(|f| decompose(&f).as_character().ok()),
            [1, 1, 2, 2, 2],
        ),
        record(
            "Ind_t(sgn)",
            induce(&SubgroupCharacter::sign())
                .ok()
                .and_then(|f| decompose(&f).as_character().ok()),
            [0, 1, 1, 1, 1],
        ),
    ];
    text.push_str("multiplicities ordered as 1, alt, chi1, chi2, chi3\n");
    let orbits: Vec<_> = projective_fixed_points()
        .iter()
        .map(|r| {
            writeln!(
                text,
                "{:>9}  stabilizer {:<4} orbit {}",
                r.label,
                r.stabilizer_name(),
                r.orbit_size
            )
            .unwrap();
            json!({ "point": r.label, "stabilizer": r.stabilizer_name(), "orbit_size": r.orbit_size })
        })
        .collect();
    Outcome {
        status: if ok {
            ExitStatus::Success
        } else {
            ExitStatus::VerificationFailed
        },
        text,
        json: to_json(&json!({ "schema_version": SCHEMA_VERSION, "decompositions": rows, "orbits": orbits })),
    }
}

pub fn polarization_cmd() -> Outcome {
    let basis = lattice_basis();
    let g = match gram(&basis) {
        Ok(g) => g,
        Err(e) => {
            return Outcome {
                status: ExitStatus::VerificationFailed,
                text: format!("FAIL {e}\n"),
                json: to_json(&json!({ "schema_version": SCHEMA_VERSION, "error": e.to_string() })),
            }
        }
    };
    let divisors = smith_normal_form(&g.entries);
    let det = integer_determinant(&g.entries);
    let unimodular = divisors.len() == 12 && divisors.iter().all(|d| *d == 1.into());
    let pass = g.is_antisymmetric() && unimodular;
    let mut text = String::new();
    for row in &g.entries {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        writeln!(text, "{}", cells.join(" ")).unwrap();
    }
    let divs: Vec<String> = divisors.iter().map(ToString::to_string).collect();
    writeln!(text, "elementary divisors: {}", divs.join(" ")).unwrap();
    writeln!(text, "det = {det}").unwrap();
    writeln!(text, "{} principal polarization", mark(pass)).unwrap();
    let gram_json: Vec<Vec<String>> = g
        .entries
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    Outcome {
        status: if pass {
            ExitStatus::Success
        } else {
            ExitStatus::VerificationFailed
        },
        text,
        json: to_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "gram": gram_json,
            "elementary_divisors": divs,
            "determinant": det.to_string(),
            "pass": pass,
        })),
    }
}

pub fn coverings_cmd(list: bool) -> Outcome {
    let classes = enumerate_coverings();
    let expected = (7usize.pow(4) - 1) / 6;
    let pass = classes.len() == expected;
    let mut text = String::new();
    if list {
        for c in &classes {
            let digits: Vec<String> = c.representative.iter().map(ToString::to_string).collect();
            writeln!(text, "({})", digits.join(",")).unwrap();
        }
    }
    writeln!(
        text,
        "{} {} covering classes (|P^3(F7)| = {expected})",
        mark(pass),
        classes.len()
    )
    .unwrap();
    let reps: Vec<[u8; 6]> = classes.iter().map(|c| c.representative).collect();
    Outcome {
        status: if pass {
            ExitStatus::Success
        } else {
            ExitStatus::VerificationFailed
        },
        text,
        json: to_json(&json!({ "schema_version": SCHEMA_VERSION, "count": classes.len(), "classes": reps })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_exit_codes() {
        assert_eq!(
            solve_cmd(&BetaParams::from_ints([1, 2, 3, 5])).status,
            ExitStatus::Success
        );
        assert_eq!(
            solve_cmd(&BetaParams::from_ints([1, 1, 3, 5])).status,
            ExitStatus::Degenerate
        );
        assert_eq!(
            solve_cmd(&BetaParams::from_ints([0, 1, 3, 5])).status,
            ExitStatus::Degenerate
        );
    }

    #[test]
    fn coverings_count() {
        let o = coverings_cmd(false);
        assert_eq!(o.status, ExitStatus::Success);
        assert!(o.text.contains("400 covering classes"));
    }

    #[test]
    fn reps_all_pass() {
        assert_eq!(reps_cmd().status, ExitStatus::Success);
    }
}
