//! End-to-end contract tests for the `jetbounds` binary: exit codes, report
//! schema, and byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jetbounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// Drops the wall-time line so deterministic runs compare byte-identical.
fn strip_elapsed(json: &str) -> String {
    json.lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn bound_values_and_exit_codes() {
    let ok = run(&["bound", "kobayashi", "--n", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("12338"));

    let ok = run(&["bound", "debarre", "--N", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("25015"));

    // precondition violations are usage errors
    let usage = run(&["bound", "kobayashi", "--n", "1"]);
    assert_eq!(usage.status.code(), Some(2));

    // unknown flags are usage errors too (clap's own exit code)
    let unknown = run(&["bound", "kobayashi", "--wat", "1"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn witness_presence_drives_exit_code() {
    let found = run(&["witness", "kobayashi", "--n", "2", "--d", "12338"]);
    assert_eq!(found.status.code(), Some(0));
    let text = stdout(&found);
    assert!(text.contains("2054"), "expected r in output: {text}");

    let absent = run(&["witness", "kobayashi", "--n", "2", "--d", "100"]);
    assert_eq!(absent.status.code(), Some(1));
    assert!(stdout(&absent).contains("absent"));

    let found = run(&["witness", "debarre", "--N", "2", "--c", "1", "--d", "117"]);
    assert_eq!(found.status.code(), Some(0));

    let bad = run(&["witness", "kobayashi", "--n", "2", "--d", "not-a-number"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn scale_guard_has_its_own_exit_code() {
    let guard = run(&["verify", "lemma31", "--N", "5", "--delta", "2"]);
    assert_eq!(guard.status.code(), Some(3));

    let guard = run(&["verify", "lemma31", "--N", "2", "--delta", "7"]);
    assert_eq!(guard.status.code(), Some(3));
}

#[test]
fn json_reports_are_deterministic_modulo_wall_time() {
    let args = [
        "witness", "debarre", "--N", "3", "--c", "2", "--d", "25015", "--format", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip_elapsed(&stdout(&a)), strip_elapsed(&stdout(&b)));

    let seeded = [
        "verify",
        "wronskian",
        "--n",
        "2",
        "--k",
        "2",
        "--trials",
        "20",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = run(&seeded);
    let b = run(&seeded);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip_elapsed(&stdout(&a)), strip_elapsed(&stdout(&b)));
}

#[test]
fn json_schema_fields_are_stable() {
    let out = run(&[
        "verify", "lemma31", "--N", "2", "--delta", "3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["schema"], "1");
    assert_eq!(v["command"], "verify lemma31 --N 2 --delta 3");
    assert!(v["config"]["seed"].is_u64());
    assert!(v["elapsed_ms"].is_u64());
    let checks = v["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for c in checks {
        for field in ["name", "inputs", "expected", "got", "pass"] {
            assert!(c.get(field).is_some(), "missing field {field}");
        }
    }
    // multiplicities are exact integer strings, never JSON numbers
    let mult = checks
        .iter()
        .find(|c| c["name"] == "lemma31 multiplicity")
        .expect("multiplicity check present");
    assert_eq!(mult["got"], "3");
}

#[test]
fn csv_flattens_one_check_per_row() {
    let out = run(&["bound", "prior", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("name,inputs,expected,got,pass"));
    assert_eq!(text.lines().count(), 5); // header + 3 priors + comparison bound
    assert!(text.contains("400"));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("jetbounds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "bound",
        "kobayashi",
        "--n",
        "3",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("4147263"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_exit_code_reflects_failures() {
    // all-pass suites exit 0
    let ok = run(&["verify", "stabilization", "--delta", "2", "--grid", "3"]);
    assert_eq!(ok.status.code(), Some(0));

    // a cap small enough to trip the span guard exits 3
    let guard = run(&[
        "verify",
        "stabilization",
        "--delta",
        "4",
        "--grid",
        "1",
        "--cap-subsets",
        "2",
    ]);
    assert_eq!(guard.status.code(), Some(3));
}
