//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn conjcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn gamma_json_output_matches_the_schema() {
    let out = conjcover(&["--format", "json", "gamma", "dihedral:7"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma"], 4);
    assert_eq!(v["order"], 14);
    assert!(v["witness"]["base_generators"].is_array());
    assert!(v["witness"]["conjugators"].is_array());
    assert!(v["bounds"]["lower"].is_number());
    assert!(v["bounds"]["upper"].is_number());
    assert!(v["bounds"]["rank_plus_one"].is_number());
}

#[test]
fn infinite_gamma_serializes_as_the_string_infinity() {
    let out = conjcover(&["--format", "json", "gamma", "cyclic:12"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma"], "infinity");
    assert!(v["witness"].is_null());
}

#[test]
fn gamma_with_oracle_cross_check() {
    let out = conjcover(&["gamma", "sym:3", "--oracle"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle agrees"));
}

#[test]
fn rank_subcommand_accepts_stabilizers_and_generators() {
    let out = conjcover(&[
        "--format",
        "json",
        "rank",
        "alt:5",
        "--subgroup",
        "stabilizer:1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["subgroup_order"], 12);

    let out = conjcover(&["--format", "json", "rank", "sym:3", "--subgroup", "(1 2)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], 2);
}

#[test]
fn factor_methods_verify() {
    for (spec, method, length) in [
        ("dihedral:7", "dihedral", 4u64),
        ("agl1:7:2", "solvable", 6),
        ("sym:4", "rank", 3),
        ("sym:3", "bfs", 3),
    ] {
        let out = conjcover(&["--format", "json", "factor", spec, "--method", method]);
        assert!(out.status.success(), "{spec} via {method}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["verified"], true, "{spec} via {method}");
        assert_eq!(v["length"], length, "{spec} via {method}");
    }
}

#[test]
fn unknown_suite_name_is_a_usage_error() {
    let out = conjcover(&["suite", "not-a-suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn suite_reports_are_byte_identical_and_thread_independent() {
    let single = conjcover(&["--format", "json", "suite", "xn-lemma"]);
    let again = conjcover(&["--format", "json", "suite", "xn-lemma"]);
    let threaded = conjcover(&[
        "--format",
        "json",
        "--threads",
        "4",
        "suite",
        "solvable-bounds",
    ]);
    let sequential = conjcover(&["--format", "json", "suite", "solvable-bounds"]);
    assert!(single.status.success());
    assert_eq!(stdout(&single), stdout(&again));
    assert_eq!(stdout(&threaded), stdout(&sequential));
}

#[test]
fn order_cap_environment_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_conjcover"))
        .args(["gamma", "sym:5"])
        .env("CONJCOVER_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too large"));

    // An explicit --cap flag overrides the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_conjcover"))
        .args(["--cap", "200", "gamma", "sym:5"])
        .env("CONJCOVER_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn survey_emits_a_row_per_corpus_entry() {
    let out = conjcover(&["--format", "json", "survey", "--max-order", "30"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.len() > 20);
    let d14 = rows.iter().find(|r| r["name"] == "D_14").unwrap();
    assert_eq!(d14["gamma"], 4);
    let c12 = rows.iter().find(|r| r["name"] == "C_12").unwrap();
    assert_eq!(c12["gamma"], "infinity");
}

#[test]
fn xset_command_reports_cardinality_and_coverage() {
    let out = conjcover(&["--format", "json", "xset", "5", "--mod", "19"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cardinality"], 31);
    assert_eq!(v["covers_residues"], true);
}
