//! Behavior of the command-line binary: formats, exit codes, contracts.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dmu-adjacency"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn compute_reports_published_values() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout_ok(&["compute", "D4-", "A1", "--format", "json"])).unwrap();
    assert_eq!(json["J"], "14");
    assert_eq!(json["I0"], "14");
    assert_eq!(json["N"], "2");
    assert_eq!(json["germ"], "D4-");

    let json: serde_json::Value =
        serde_json::from_str(&stdout_ok(&["compute", "D5", "1", "--format", "json"])).unwrap();
    assert_eq!(json["J"], "6");

    let json: serde_json::Value =
        serde_json::from_str(&stdout_ok(&["compute", "D4+", "A1^2", "--format", "json"])).unwrap();
    assert_eq!(json["J"], "1");
}

#[test]
fn json_reports_roundtrip_byte_identically() {
    for args in [
        vec!["compute", "D6-", "A1^2 A3", "--format", "json"],
        vec!["table", "D5", "--format", "json"],
        vec!["verify", "--max-mu", "4", "--quiet", "--format", "json"],
        vec!["closed-forms", "--max-k", "3", "--format", "json"],
    ] {
        let printed = stdout_ok(&args);
        let parsed: serde_json::Value = serde_json::from_str(&printed).unwrap();
        let reprinted = serde_json::to_string(&parsed).unwrap();
        assert_eq!(printed.trim_end(), reprinted, "for {args:?}");
    }
}

#[test]
fn csv_table_contract() {
    let csv = stdout_ok(&["table", "D5", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("type,codim,J,I0,I1,I2term,I3term,N"));
    assert!(csv.lines().any(|line| line.starts_with("A1,2,15,")));
}

#[test]
fn table_contains_trivial_type_row() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout_ok(&["table", "D4+", "--format", "json"])).unwrap();
    let entries = json["entries"].as_array().unwrap();
    let row = entries.iter().find(|row| row["type"] == "1").unwrap();
    assert_eq!(row["J"], "3");
    assert_eq!(row["codim"], "0");

    let json: serde_json::Value =
        serde_json::from_str(&stdout_ok(&["table", "D6-", "--format", "json"])).unwrap();
    let entries = json["entries"].as_array().unwrap();
    let row = entries.iter().find(|row| row["type"] == "A1").unwrap();
    assert_eq!(row["J"], "34");
}

#[test]
fn include_zero_keeps_nonadjacent_rows() {
    let with = stdout_ok(&["table", "D4+", "--include-zero", "--format", "csv"]);
    let without = stdout_ok(&["table", "D4+", "--format", "csv"]);
    assert!(with.lines().any(|line| line.starts_with("A1^3,6,0,")));
    assert!(!without.contains("A1^3"));
    assert!(with.lines().count() > without.lines().count());
}

#[test]
fn default_format_is_json_when_redirected() {
    let out = stdout_ok(&["compute", "D4-", "A1"]);
    assert!(out.starts_with('{'), "expected json, got: {out}");
}

#[test]
fn formats_carry_identical_numbers() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout_ok(&["compute", "D6-", "A1", "--format", "json"])).unwrap();
    let csv = stdout_ok(&["compute", "D6-", "A1", "--format", "csv"]);
    let markdown = stdout_ok(&["compute", "D6-", "A1", "--format", "markdown"]);
    assert_eq!(json["J"], "34");
    let row = csv.lines().nth(1).unwrap();
    assert_eq!(row.split(',').nth(3), Some("34"));
    assert!(markdown.contains("| J | 34 |"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(exit_code(&[]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
    assert_eq!(exit_code(&["compute", "D4+"]), 2);
    assert_eq!(exit_code(&["compute", "D6", "A1"]), 2); // sign required
    assert_eq!(exit_code(&["compute", "D3+", "A1"]), 2); // below the series
    assert_eq!(exit_code(&["compute", "D4+", "B2"]), 2);
    assert_eq!(exit_code(&["compute", "D4+", "D4 A1"]), 2); // non-A factor
    assert_eq!(exit_code(&["compute", "D4±", "A1"]), 2); // ascii only
    assert_eq!(exit_code(&["table", "D4"]), 2);
    assert_eq!(exit_code(&["table", "D4+", "--format", "yaml"]), 2);
    assert_eq!(exit_code(&["verify", "--max-mu", "3"]), 2);
    assert_eq!(exit_code(&["verify", "--cap", "0"]), 2);
    assert_eq!(exit_code(&["closed-forms", "--max-k", "1"]), 2);
    assert_eq!(exit_code(&["--no-such-flag"]), 2);
}

#[test]
fn verify_passes_and_is_quiet_on_request() {
    let out = run(&["verify", "--max-mu", "5", "--quiet", "--format", "json"]);
    assert!(out.status.success());
    assert!(
        out.stderr.is_empty(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(json["result"], "pass");
    assert_eq!(json["checks"][1]["fail"], "0");

    // progress lines appear without --quiet
    let out = run(&["verify", "--max-mu", "4", "--format", "json"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("checking D4+"));
}

#[test]
fn verify_cap_exhaustion_exits_4() {
    assert_eq!(
        exit_code(&["verify", "--max-mu", "6", "--cap", "5", "--quiet"]),
        4
    );
}

#[test]
fn closed_forms_pass() {
    let json: serde_json::Value = serde_json::from_str(&stdout_ok(&[
        "closed-forms",
        "--max-k",
        "6",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["result"], "pass");
    assert_eq!(json["maxK"], "6");
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("USAGE"));
}
