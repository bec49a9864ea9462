//! End-to-end tests against the compiled binary: exit codes, report
//! determinism, input diagnostics, and the verify-paper gate
//! (criterion 10 of the acceptance suite).

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toricsplit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(contents.as_bytes()).expect("write temp");
    f
}

const TWISTED_CUBIC: &str = "matrix 2 4\n3 2 1 0\n0 1 2 3\n";

/// The catalogue records three support-graph values for the
/// nonsimplicial example that direct computation refutes, so
/// verify-paper reports exactly those three mismatches and exits 1.
/// Everything else in the catalogue matches. This pins the documented
/// state; see NOTES.md for the refuting witnesses.
#[test]
fn criterion_10_verify_paper_documented_mismatches() {
    let out = run(&["verify-paper", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&out)).expect("json report");
    assert_eq!(report["failed"], Value::from(3));
    let failed: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == Value::Bool(false))
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        failed,
        [
            "ex4_5 gamma edges",
            "ex4_5 delta01",
            "ex4_5 bar lower bound"
        ]
    );
    let passed = report["passed"].as_u64().unwrap();
    assert!(
        passed >= 70,
        "expected a full sweep, got {passed} passing checks"
    );
    println!(
        "criterion 10: fail as stated (verify-paper exits 1: three recorded \
         support-graph values are refuted by computation, see NOTES.md); \
         the other {passed} checks match"
    );
}

#[test]
fn verify_paper_budget_exhaustion_exits_3() {
    let out = run(&["verify-paper", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("budget"),
        "stderr should name the budget: {err}"
    );
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let f = write_temp(TWISTED_CUBIC);
    let path = f.path().to_str().unwrap();
    for cmd in [
        "kernel", "circuits", "graver", "markov", "gamma", "delta", "split",
    ] {
        for format in ["text", "json"] {
            let a = run(&[cmd, path, "--format", format]);
            let b = run(&[cmd, path, "--format", format]);
            assert_eq!(a.status.code(), Some(0), "{cmd} exits 0");
            assert_eq!(
                a.stdout, b.stdout,
                "{cmd} --format {format} is deterministic"
            );
        }
    }
}

#[test]
fn json_reports_parse_and_carry_the_command() {
    let f = write_temp(TWISTED_CUBIC);
    let path = f.path().to_str().unwrap();
    for cmd in ["kernel", "split", "bar-bounds"] {
        let out = run(&[cmd, path, "--format", "json"]);
        let report: Value = serde_json::from_str(&stdout(&out)).expect("valid json");
        assert_eq!(report["command"], Value::String(cmd.to_string()));
    }
}

#[test]
fn split_on_twisted_cubic() {
    let f = write_temp(TWISTED_CUBIC);
    let out = run(&["split", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["split"]["value"], Value::from(3));
    assert_eq!(report["split"]["kind"], Value::from("exact"));
    assert_eq!(report["split_rad"]["lower"], Value::from(2));
    assert_eq!(report["split_rad"]["upper"], Value::from(3));
    let cert = &report["certificate"];
    assert_eq!(cert["r"], Value::from(3));
    assert_eq!(cert["parts"].as_array().unwrap().len(), 3);
}

#[test]
fn kernel_of_identity_is_empty() {
    let f = write_temp("matrix 2 2\n1 0\n0 1\n");
    let out = run(&["kernel", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["rank"], Value::from(2));
    assert_eq!(report["kernel_dimension"], Value::from(0));
    assert_eq!(report["kernel_basis"].as_array().unwrap().len(), 0);
}

#[test]
fn malformed_inputs_exit_2_with_line_diagnostics() {
    let cases = [
        ("matrix 2 3\n1 2 3\n4 x 6\n", "line 3"),
        ("matrix 2 3\n1 2 3\n", "line 2"),
        ("bipartite 2 2\n1 3\n", "line 2"),
    ];
    for (contents, needle) in cases {
        let f = write_temp(contents);
        let cmd = if contents.starts_with("matrix") {
            "kernel"
        } else {
            "graph-gens"
        };
        let out = run(&[cmd, f.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2));
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "expected `{needle}` in: {err}");
    }
    let out = run(&["kernel", "/nonexistent/input.matrix"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nonpointed_configuration_is_an_input_error() {
    let f = write_temp("matrix 1 2\n1 -1\n");
    let out = run(&["graver", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("pointed"),
        "stderr should explain pointedness: {err}"
    );
}

#[test]
fn kmn_split_3_3() {
    let out = run(&["kmn-split", "3", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["counts"], serde_json::json!([3, 3, 3]));
    let subgraphs = report["subgraphs"].as_array().unwrap();
    assert_eq!(subgraphs.len(), 3);
    for s in subgraphs {
        assert!(!s["edges"].as_array().unwrap().is_empty());
    }
}

#[test]
fn family_reports_respect_characteristic_and_flag_disputes() {
    let out = run(&["family", "ex4_5", "--char", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = report["catalogue"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["disputed"] == Value::Bool(true)));

    // The symmetric curve's radical splitting number depends on the
    // characteristic, so the --char filter must select one of its rows.
    let by_char = |c: &str| -> Vec<String> {
        let out = run(&[
            "family",
            "symmetric-curve",
            "4",
            "9",
            "--char",
            c,
            "--format",
            "json",
        ]);
        let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
        report["catalogue"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|r| r["quantity"] == Value::String("split_rad".into()))
            .map(|r| r["characteristic"].as_str().unwrap().to_string())
            .collect()
    };
    assert_eq!(by_char("0"), ["0"]);
    assert_eq!(by_char("5"), ["p > 0"]);
    assert_eq!(by_char("any").len(), 2);

    let out = run(&["family", "symmetric-curve", "4", "9", "--format", "json"]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mu = report["catalogue"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["quantity"] == Value::String("mu".into()))
        .unwrap();
    assert_eq!(mu["value"], Value::from(7));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let input = write_temp(TWISTED_CUBIC);
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = run(&[
        "kernel",
        input.path().to_str().unwrap(),
        "--format",
        "json",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    let report: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(report["command"], Value::String("kernel".into()));
}
