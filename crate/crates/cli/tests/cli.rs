//! End-to-end tests of the `regulus` binary: exit codes, output values, and
//! the JSON report schema.

use std::process::{Command, Output};

use serde::{Deserialize, Serialize};
use serde_json::Value;

// Mirror of the report schema with unknown keys rejected, so any drift in
// the emitted document fails here.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
struct ReportDoc {
    suite: String,
    order: u64,
    nmax: Option<u64>,
    results: Vec<ResultDoc>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
struct ResultDoc {
    name: String,
    status: String,
    first_mismatch: Option<MismatchDoc>,
    elapsed_ms: u64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
struct MismatchDoc {
    exponent: u64,
    lhs: String,
    rhs: String,
}

fn regulus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regulus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn bl_exact_values() {
    let out = regulus(&["bl", "13", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = regulus(&["bl", "2", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");

    // b_2(100): partitions into odd parts, a 7-digit exact value
    let out = regulus(&["bl", "2", "100"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "444793");
}

#[test]
fn bl_modular_value_at_the_first_family_offset() {
    let out = regulus(&["bl", "13", "1200", "--mod"]);
    assert!(out.status.success());
    // 9 = 9 * b_13(0): the multiplier the dissection chain actually yields
    assert_eq!(stdout(&out).trim(), "9");
}

#[test]
fn bl_modular_requires_prime() {
    let out = regulus(&["bl", "6", "10", "--mod"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not prime"));
}

#[test]
fn bl_exact_cap_is_enforced() {
    let out = regulus(&["bl", "2", "200000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds the exact cap"));
}

#[test]
fn check_pass_and_fail_exit_codes() {
    let out = regulus(&["check", "id-2.3", "--order", "300"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS  id-2.3"));

    let out = regulus(&["check", "t13-6.3", "--order", "50"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  t13-6.3"));
    assert!(text.contains("first mismatch at 3: got 9, claimed 2"));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = regulus(&["check", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown check"));
}

#[test]
fn max_order_guard_rejects_oversized_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_regulus"))
        .args(["check", "t13-6.3", "--order", "2000"])
        .env("REGULUS_MAX_ORDER", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of desk scale"));
}

#[test]
fn suite_filter_counts_and_json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = regulus(&[
        "suite",
        "--filter",
        "t17-*",
        "--order",
        "300",
        "--nmax",
        "40",
        "--json",
        path.to_str().unwrap(),
        "--threads",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("4 of 4 checks passed"));

    let raw = std::fs::read_to_string(&path).unwrap();
    let doc: Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(doc["suite"], "t17-*");
    assert_eq!(doc["order"], 300);
    assert_eq!(doc["nmax"], 40);
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    let names: Vec<&str> = results
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["t17-gf", "t17-quintic-expand", "t17-3.3", "t17-3.4"]
    );
    for r in results {
        assert_eq!(r["status"], "pass");
        assert!(r["first_mismatch"].is_null());
        assert!(r["elapsed_ms"].is_u64());
    }

    // typed round trip with the key set pinned exactly
    let typed: ReportDoc = serde_json::from_str(&raw).unwrap();
    let reserialized: Value = serde_json::to_value(&typed).unwrap();
    assert_eq!(reserialized, doc);
}

#[test]
fn suite_json_records_failures_with_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = regulus(&[
        "suite",
        "--filter",
        "t13-6.3",
        "--order",
        "40",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["name"], "t13-6.3");
    assert_eq!(results[0]["status"], "fail");
    let mismatch = &results[0]["first_mismatch"];
    assert_eq!(mismatch["exponent"], 3);
    assert_eq!(mismatch["lhs"], "9");
    assert_eq!(mismatch["rhs"], "2");
}

#[test]
fn empty_filter_matches_nothing_and_passes() {
    let out = regulus(&["suite", "--filter", "", "--order", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 of 0 checks passed"));
}

#[test]
fn id_suite_has_eight_checks() {
    let out = regulus(&["suite", "--filter", "id-*", "--order", "150"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("8 of 8 checks passed"));
}
