use std::io::Write;
use std::process::{Command, Output, Stdio};

use jordan_strata::jclass::{ClassDatum, ClassPoset};
use jordan_strata::loglike::{EtaleCertificate, VerificationReport};
use jordan_strata::rootcore::PrimeVerdict;
use serde_json::Value;

fn jstrata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jstrata")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden_dir() -> String {
    format!("{}/../../golden/v1", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn primes_e8_at_5() {
    let out = jstrata(&["primes", "E", "8", "--p", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: PrimeVerdict = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!v.good && v.bad && v.torsion);
}

#[test]
fn induce_borel() {
    let out = jstrata(&["induce", "gl", "--blocks", "1,1,1", "--parts", "1;1;1"]);
    assert_eq!(json(&out), "3");
    let out = jstrata(&["induce", "gl", "--parts", "2,1;2", "--format", "table"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "4,1");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "lem-ss", "--map", "gl", "--n", "4", "--p", "101", "--samples", "1000", "--seed", "7"];
    let a = jstrata(&args);
    let b = jstrata(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: VerificationReport = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!((report.samples, report.failures), (1000, 0));
}

#[test]
fn usage_errors_exit_two_with_json() {
    for args in
        [&["nonsense"][..], &["primes", "E", "8"], &["primes", "E", "8", "--p", "4"], &["induce", "sp", "--parts", "1"]]
    {
        let out = jstrata(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
        assert!(err["error"].is_string() && err["message"].is_string());
    }
    let out = jstrata(&["primes", "E", "8", "--p", "4"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "not_prime");
}

#[test]
fn golden_mismatch_exits_one() {
    let out = jstrata(&["poset", "--n", "3", "--golden-dir", &golden_dir()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["matches_golden"], true);

    let dir = std::env::temp_dir().join(format!("jstrata-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let wrong = jstrata(&["poset", "--n", "2"]);
    std::fs::write(dir.join("poset_liealg_3.json"), &wrong.stdout).unwrap();
    let out = jstrata(&["poset", "--n", "3", "--golden-dir", dir.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn outputs_round_trip_through_schemas() {
    let classes: Vec<ClassDatum> = serde_json::from_slice(&jstrata(&["classes", "--n", "4"]).stdout).unwrap();
    assert_eq!(classes.len(), 14);
    let poset: ClassPoset = serde_json::from_slice(&jstrata(&["poset", "--n", "3", "--mode", "group"]).stdout).unwrap();
    assert_eq!(poset, ClassPoset::build(3, jordan_strata::jclass::Mode::Group).unwrap());
    let cert: EtaleCertificate = serde_json::from_slice(&jstrata(&["etale", "--n", "2", "--p", "7"]).stdout).unwrap();
    assert!(cert.in_locus && cert.fiber_size == 2);
    let sheets: Vec<ClassDatum> = serde_json::from_slice(&jstrata(&["sheets", "--n", "5"]).stdout).unwrap();
    assert_eq!(sheets.len(), 7);
}

#[test]
fn closure_examples() {
    let closure = jstrata(&["closure", "--class", "1;1", "--pattern", "1,1"]);
    assert_eq!(json(&closure)["contains"], true);
    let reg = jstrata(&["reg-closure", "--class", "1;1", "--pattern", "1,1"]);
    assert_eq!(json(&reg)["contains"], false);
    let reg = jstrata(&["reg-closure", "--class", "[[1,[1]],[1,[1]]]", "--pattern", "2"]);
    assert_eq!(json(&reg)["contains"], true);
    let no = jstrata(&["closure", "--class", "1,1;1", "--pattern", "3"]);
    assert_eq!(json(&no)["contains"], false);
    let dim = jstrata(&["dim", "--class", "2"]);
    assert_eq!(json(&dim)["dim_class"], 3);
}

#[test]
fn normality_examples() {
    assert_eq!(json(&jstrata(&["normal-gl", "--class", "2;2"]))["normal"], true);
    assert_eq!(json(&jstrata(&["normal-gl", "--class", "2;1,1"]))["normal"], false);
}

#[test]
fn root_systems() {
    let out = json(&jstrata(&["subsystem", "C2", "--theta", "1/2,0", "--p", "7"]));
    assert_eq!(out["type"], "A1xA1");
    assert_eq!(out["rationally_closed"], false);
    let out = json(&jstrata(&["rational-closure", "C2", "--roots", "2,1;0,1"]));
    assert_eq!(out["closure"]["type"], "C2");
    let out = json(&jstrata(&["pseudo-levi", "G2"]));
    let types: Vec<&str> = out.as_array().unwrap().iter().map(|p| p["type"].as_str().unwrap()).collect();
    assert!(types.contains(&"A2") && types.contains(&"A1xA1~"), "{types:?}");
}

#[test]
fn loglike_apply_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jstrata"))
        .args(["loglike-apply", "--map", "sp4", "--matrix", "-", "--format", "table"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"4 5\n1 0 0 0\n0 4 0 0\n0 0 1 0\n0 0 0 4\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "4 5\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n\n");
}

#[test]
fn reports_and_acceptance() {
    assert_eq!(json(&jstrata(&["sp4-report", "--p", "7"]))["holds"], true);
    assert_eq!(json(&jstrata(&["sl2-char2"]))["holds"], true);
    let out = jstrata(&["accept", "--only", "11", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("sl2-char2"));
    assert_eq!(jstrata(&["accept", "--only", "12"]).status.code(), Some(2));
}
