use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use zeta7_cli::BundleDocument;

fn zeta7(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeta7"))
        .args(args)
        .env_remove("ZETA7_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn solve_writes_a_passing_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bundle.json");
    let o = zeta7(&["solve", "--beta", "1,2,3,5", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = BundleDocument::from_json(&text).unwrap();
    assert!(doc.all_pass());
    assert_eq!(
        doc.params.as_deref(),
        Some(&["1/1", "2/1", "3/1", "5/1"].map(String::from)[..])
    );
    assert_eq!(doc.s7.len(), 8);
    assert_eq!(doc.f6.len(), 7);
    assert_eq!(doc.kappa.as_deref(), Some("1/1"));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(v.get("genus8_TXZ").is_some());
    assert!(v["s7"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c.as_str().unwrap().contains('/')));
}

#[test]
fn solve_accepts_rational_nodes() {
    let o = zeta7(&["solve", "--beta", "1/2,2,3,5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn solve_rejects_colliding_nodes() {
    let o = zeta7(&["solve", "--beta", "1,1,3,5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = zeta7(&["solve", "--beta", "1,-1,3,5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(zeta7(&["solve", "--beta", "1,2,3"]).status.code(), Some(1));
    assert_eq!(zeta7(&["solve", "--beta", "1,2,3,x"]).status.code(), Some(1));
    assert_eq!(zeta7(&["solve"]).status.code(), Some(1));
    assert_eq!(zeta7(&["sweep", "-n", "0"]).status.code(), Some(1));
    assert_eq!(zeta7(&["nonsense"]).status.code(), Some(1));
    assert_eq!(zeta7(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_paper_passes_with_one_warning() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = zeta7(&["verify-paper", "--json", path.to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL "), "{out}");
    let v = read_json(&path);
    let checks = v["checks"].as_array().unwrap();
    let warns: Vec<&str> = checks
        .iter()
        .filter(|c| c["status"] == "WARN")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(warns, ["V(0) equals BASE"]);
    assert!(checks.iter().all(|c| c["status"] != "FAIL"));
}

#[test]
fn strict_mode_fails_on_the_known_issue() {
    let o = zeta7(&["verify-paper", "--strict", "--only", "appendix"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn only_runs_one_suite() {
    let o = zeta7(&["verify-paper", "--only", "polarization"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out
        .lines()
        .filter(|l| l.starts_with("PASS"))
        .all(|l| l.contains("[polarization]")));
    assert!(out.contains("elementary divisors all 1"));
}

#[test]
fn fixtures_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = include_str!("../fixtures/manifest.json").replace("\"known_issue\"", "\"ignored\"");
    std::fs::write(dir.path().join("manifest.json"), manifest).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_zeta7"))
        .args(["verify-paper", "--only", "appendix"])
        .env("ZETA7_FIXTURES", dir.path())
        .output()
        .unwrap();
    // without the known-issue entry the V(0) mismatch is a failure
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL [appendix] V(0) equals BASE"));

    let missing = dir.path().join("absent");
    let o = Command::new(env!("CARGO_BIN_EXE_zeta7"))
        .args(["verify-paper"])
        .env("ZETA7_FIXTURES", &missing)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let run = |p: &Path| zeta7(&["sweep", "-n", "3", "--seed", "7", "--json", p.to_str().unwrap()]);
    let (oa, ob) = (run(&a), run(&b));
    assert_eq!(oa.status.code(), Some(0));
    assert_eq!(stdout(&oa), stdout(&ob));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v = read_json(&a);
    assert_eq!(v["passed"], 3);
    assert_eq!(v["seed"], 7);
}

#[test]
fn reps_polarization_and_coverings() {
    let o = zeta7(&["reps"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Sym^14 = [13, 5, 17, 17, 17]"));

    let o = zeta7(&["polarization"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("det = 1"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = zeta7(&["coverings", "--list", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 401);
    assert_eq!(read_json(&path)["count"], 400);
}
