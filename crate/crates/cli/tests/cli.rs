use std::process::Command;

use gpkd_cli::{run, EXIT_BUDGET, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};
use serde_json::Value;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gpkd(args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("gpkd").chain(args.iter().copied()), &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn ok(args: &[&str]) -> String {
    let o = gpkd(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    o.stdout
}

#[test]
fn cycle_formula_and_check() {
    assert_eq!(ok(&["formula", "--family", "cycle", "--n", "16", "--k", "3", "--d", "5"]), "5\n");
    assert_eq!(ok(&["check", "--graph", "cycle:16", "--k", "3", "--d", "5", "--set", "0,3,6,9,12"]), "valid\n");
    let bad = ok(&["check", "--graph", "cycle:16", "--k", "3", "--d", "5", "--set", "0,2,4"]);
    assert!(bad.starts_with("invalid: geodesic"), "{bad}");
}

#[test]
fn tables_match_golden_files() {
    let path = ok(&["table", "--graph", "path:14", "--kmax", "15", "--csv"]);
    assert_eq!(path, include_str!("golden/table1.csv"));
    let cycle = ok(&["table", "--graph", "cycle:14", "--kmax", "9", "--csv"]);
    assert_eq!(cycle, include_str!("golden/table2.csv"));
    let closed = ok(&["table", "--graph", "cycle:14", "--kmax", "9", "--csv", "--formula"]);
    assert_eq!(closed, cycle);
}

#[test]
fn compute_json_round_trips_through_check() {
    for (graph, k) in [("grid:4x4", "3"), ("prism:7", "4"), ("cycle:11", "2")] {
        let report: Value = serde_json::from_str(&ok(&["compute", "--graph", graph, "--k", k, "--json"])).unwrap();
        let witness: Vec<String> =
            report["witness"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap().to_string()).collect();
        assert_eq!(witness.len() as u64, report["value"].as_u64().unwrap());
        let d = report["requested_d"].to_string();
        let check = ok(&["check", "--graph", graph, "--k", k, "--d", &d, "--set", &witness.join(","), "--json"]);
        let check: Value = serde_json::from_str(&check).unwrap();
        assert_eq!(check["valid"], Value::Bool(true), "{graph}");
    }
}

#[test]
fn methods_agree() {
    let value = |method: &str| {
        let v: Value =
            serde_json::from_str(&ok(&["compute", "--graph", "grid:3x5", "--k", "4", "--d", "4", "--method", method, "--json"]))
                .unwrap();
        v["value"].as_u64().unwrap()
    };
    assert_eq!(value("brute"), value("bnb"));
}

#[test]
fn grid_pairs_are_one_based() {
    let by_pair = ok(&["check", "--graph", "grid:3x3", "--k", "3", "--set", "1.1,3.3", "--json"]);
    let by_label = ok(&["check", "--graph", "grid:3x3", "--k", "3", "--set", "0,8", "--json"]);
    assert_eq!(by_pair, by_label);
    let o = gpkd(&["check", "--graph", "grid:3x3", "--k", "3", "--set", "4.1"]);
    assert_eq!(o.code, EXIT_INVALID);
    let o = gpkd(&["check", "--graph", "cycle:9", "--k", "3", "--set", "1.1"]);
    assert_eq!(o.code, EXIT_INVALID);
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["formula", "--family", "cycle", "--n", "10", "--k", "2", "--d", "6"][..],
        &["compute", "--graph", "path:5", "--k", "1"],
        &["compute", "--graph", "blob:5", "--k", "3"],
        &["check", "--graph", "path:5", "--k", "3", "--set", "0,9"],
        &["compute", "--graph", "path:5", "--k", "3", "--d", "0"],
        &["compute", "--k", "3"],
        &["compute", "--graph-file", "/nonexistent/graph.txt", "--k", "3"],
    ] {
        let o = gpkd(args);
        assert_eq!(o.code, EXIT_INVALID, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let hint = gpkd(&["formula", "--family", "cycle", "--n", "10", "--k", "2", "--d", "6"]);
    assert!(hint.stderr.contains("compute"), "{}", hint.stderr);
}

#[test]
fn exhausted_budget_exits_3() {
    let o = gpkd(&["compute", "--graph", "grid:6x6", "--k", "3", "--method", "bnb", "--node-budget", "5", "--no-warm-start"]);
    assert_eq!(o.code, EXIT_BUDGET, "{}", o.stderr);
}

#[test]
fn graph_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.txt");
    std::fs::write(&path, "5 4\n0 1\n0 2\n0 3\n0 4\n").unwrap();
    let file = path.to_str().unwrap();
    let report: Value = serde_json::from_str(&ok(&["compute", "--graph-file", file, "--k", "2", "--d", "1", "--json"])).unwrap();
    assert_eq!(report["value"], 4);
    assert_eq!(report["witness"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn export_writes_dot_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    ok(&["export", "--graph", "grid:2x3", "--set", "1.1,2.3", "--output", dot.to_str().unwrap()]);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.matches("fillcolor=black").count(), 2);
    let csv = ok(&["export", "--graph", "grid:2x3", "--set", "0,5", "--format", "csv"]);
    assert_eq!(csv, "vertex,row,col\n0,0,0\n5,1,2\n");
}

#[test]
fn constructions_are_valid() {
    let diamond = ok(&["construct", "--kind", "diamond", "--r", "2", "--rows", "5", "--cols", "5"]);
    assert_eq!(diamond.trim().split(',').count(), 9);
    assert_eq!(ok(&["check", "--graph", "grid:5x5", "--k", "4", "--set", diamond.trim()]), "valid\n");
    let thin: Value =
        serde_json::from_str(&ok(&["construct", "--kind", "thin-a", "--n", "12", "--k", "4", "--d", "5", "--json"])).unwrap();
    assert_eq!(thin["size"], 12);
    let jset = ok(&["construct", "--kind", "jset", "--n", "16", "--m", "5"]);
    assert_eq!(ok(&["check", "--graph", "cycle:16", "--k", "3", "--d", "5", "--set", jset.trim()]), "valid\n");
    let o = gpkd(&["construct", "--kind", "thin-b", "--n", "5"]);
    assert_eq!(o.code, EXIT_INVALID);
}

#[test]
fn verify_passes_on_families_and_random_graphs() {
    for family in ["path", "cycle", "prism"] {
        let out = ok(&["verify", "--family", family, "--n-max", "8", "--k-max", "5", "--d-max", "6"]);
        assert!(out.ends_with(", 0 mismatches\n"), "{out}");
    }
    let out = ok(&["verify", "--random", "--count", "25", "--n-max", "9", "--seed", "7"]);
    assert_eq!(out, "checked 25 points, 0 mismatches\n");
}

#[test]
fn help_goes_to_stdout() {
    let o = gpkd(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("compute"));
    assert_eq!(EXIT_MISMATCH, 1);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gpkd");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["formula", "--family", "prism", "--n", "6", "--k", "4", "--d", "5"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&o.stdout), "6\n");
    assert_eq!(status(&["formula", "--family", "path"]).status.code(), Some(EXIT_INVALID));
    let o = status(&["compute", "--graph", "torus:6x6", "--k", "3", "--method", "bnb", "--node-budget", "3", "--no-warm-start"]);
    assert_eq!(o.status.code(), Some(EXIT_BUDGET));
}
