use std::fs;

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(assert_cmd::cargo::cargo_bin!("mpoly-topo"));
    cmd.env_remove("MPOLY_TOPO_FORMAT").env("RUST_LOG", "warn");
    cmd
}

fn stdout_of(args: &[&str]) -> String {
    let out = bin().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).unwrap()
}

fn edge_file(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_family_text() {
    bin()
        .args(["compute", "--family", "vphy", "--params", "m=2,n=2", "--format", "text"])
        .assert()
        .success()
        .stdout("50.9117\n");
    bin()
        .args(["compute", "--family", "path", "--params", "n=3"])
        .assert()
        .success()
        .stdout("4.4721\n");
}

#[test]
fn compute_graph_matches_family() {
    let dir = TempDir::new().unwrap();
    let p3 = edge_file(&dir, "p3.edges", "0 1\n1 2");
    let graph = stdout_of(&["compute", "--graph", &p3]);
    assert_eq!(graph, stdout_of(&["compute", "--family", "path", "--params", "n=3"]));
    let doc = json_of(&["compute", "--graph", &p3, "--format", "json"]);
    assert_eq!(doc["exact"], "2*sqrt(5)");
    assert_eq!(doc["agreement"], true);
    assert!(doc["routes"]["direct"].is_number());
    assert!(doc["routes"].get("closed").is_none());
}

#[test]
fn text_value_equals_json_value() {
    for (family, params) in [
        ("vphy", "m=2,n=2"),
        ("boron", "a=3,b=2"),
        ("petim", "n=10"),
        ("tadpole", "n=5,m=4"),
        ("rregular", "n=8,r=3"),
    ] {
        let text = stdout_of(&["compute", "--family", family, "--params", params]);
        let doc = json_of(&["compute", "--family", family, "--params", params, "--format", "json"]);
        assert_eq!(text.trim(), format!("{:.4}", doc["hso"].as_f64().unwrap()), "{family}");
        assert_eq!(doc["agreement"], true);
    }
}

#[test]
fn compute_json_fields() {
    let doc = json_of(&["compute", "--family", "cycle", "--params", "n=9", "--format", "json"]);
    assert_eq!(doc["input"], "cycle{n=9}");
    assert_eq!(doc["exact"], "9*sqrt(2)");
    for route in ["direct", "pipeline", "closed"] {
        assert!((doc["routes"][route].as_f64().unwrap() - 12.727922061357855).abs() < 1e-12);
    }
    assert!(doc.get("table_match").is_none());
}

#[test]
fn compute_flags_table_erratum_without_failing() {
    let doc = json_of(&["compute", "--family", "dpzn", "--params", "n=1", "--format", "json"]);
    assert_eq!(doc["table_expected"], "243.6667");
    assert_eq!(doc["table_match"], false);
    assert_eq!(doc["hso"].as_f64().unwrap(), 201.2403);
    bin()
        .args(["compute", "--family", "dpzn", "--params", "n=1", "--fail-on-mismatch"])
        .assert()
        .code(1)
        .stdout("201.2403\n");
}

#[test]
fn compute_csv() {
    bin()
        .args(["compute", "--family", "pah", "--params", "n=1", "--format", "csv"])
        .assert()
        .success()
        .stdout(
            "input,hso_float,hso_exact,agreement,table_expected,match\n\
             pah{n=1},27.4589,6*sqrt(2) + 6*sqrt(10),true,27.4589,true\n",
        );
}

#[test]
fn format_from_environment() {
    let out = bin()
        .env("MPOLY_TOPO_FORMAT", "json")
        .args(["compute", "--family", "cycle", "--params", "n=5"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let doc: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(doc["exact"], "5*sqrt(2)");
}

#[test]
fn exit_codes() {
    bin().args(["compute", "--family", "hexagon", "--params", "n=1"]).assert().code(64);
    bin().args(["compute", "--family", "pah", "--params", "k=1"]).assert().code(64);
    bin().args(["compute"]).assert().code(64);
    bin().args(["frobnicate"]).assert().code(64);
    bin().args(["compute", "--family", "pah", "--params", "n=0"]).assert().code(3);
    bin()
        .args(["compute", "--family", "rregular", "--params", "n=5,r=3"])
        .assert()
        .code(3)
        .stderr(predicate::str::contains("odd"));
    bin().args(["compute", "--graph", "/definitely/not/here.edges"]).assert().code(66);
    bin().args(["--help"]).assert().success();
}

#[test]
fn malformed_edge_lists() {
    let dir = TempDir::new().unwrap();
    for (name, body, needle) in [
        ("loop", "0 1\n2 2\n", "line 2"),
        ("dup", "0 1\n1 0\n", "duplicate"),
        ("token", "0 x\n", "\"x\""),
        ("arity", "0 1 2\n", "expected 2"),
        ("empty", "# nothing\n", "no edges"),
        ("gap", "0 2\n", "degree 0"),
    ] {
        let path = edge_file(&dir, name, body);
        bin()
            .args(["compute", "--graph", &path])
            .assert()
            .code(65)
            .stderr(predicate::str::contains(needle));
    }
}

#[test]
fn disconnected_graph_warns() {
    let dir = TempDir::new().unwrap();
    let path = edge_file(&dir, "two.edges", "# two copies of K2\n0 1\n2 3\n");
    bin()
        .args(["compute", "--graph", &path])
        .assert()
        .success()
        .stdout("2.8284\n")
        .stderr(predicate::str::contains("disconnected"));
}

#[test]
fn tadpole_single_tail_warns() {
    bin()
        .args(["compute", "--family", "tadpole", "--params", "n=3,m=1"])
        .assert()
        .success()
        .stderr(predicate::str::contains("direct route skipped"));
}

#[test]
fn table_benzenoid_diagonal() {
    let out = stdout_of(&["table", "--family", "benzenoid", "--range", "1..3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "family,m,n,hso_float,hso_exact,table_expected,match,in_domain");
    let values: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(values, ["12.8680", "49.9176", "103.9378"]);
    assert!(lines[1].ends_with(",12.8680,true,false"));
}

#[test]
fn table_petaa_and_vphx() {
    let out = stdout_of(&["table", "--family", "petaa", "--range", "1..2"]);
    assert!(out.contains("petaa,1,126.6894,"));
    assert!(out.contains("petaa,2,287.2420,"));
    let out = stdout_of(&["table", "--family", "vphx", "--range", "2..2"]);
    assert!(out.contains("vphx,2,2,51.1918,26*sqrt(2) + 4*sqrt(13),49.9176,false,true"));
}

#[test]
fn table_cross_and_json() {
    let rows = json_of(&["table", "--family", "vphy", "--range", "1..3", "--cross", "--format", "json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[1]["params"]["m"], 1);
    assert_eq!(rows[1]["params"]["n"], 2);
    assert_eq!(rows[8]["hso"].as_f64().unwrap(), 114.5513);
}

#[test]
fn table_errors() {
    bin().args(["table", "--family", "pah", "--range", "5..2"]).assert().code(64);
    bin().args(["table", "--family", "pah", "--range", "one..two"]).assert().code(64);
    bin().args(["table", "--family", "path", "--published"]).assert().code(64);
    bin().args(["table"]).assert().code(64);
}

#[test]
fn published_tables_flag_only_the_known_errata() {
    let rows = json_of(&["table", "--published", "--format", "json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 120);
    let flagged: Vec<&str> = rows
        .iter()
        .filter(|r| r["table_match"] == false)
        .map(|r| r["input"].as_str().unwrap())
        .collect();
    assert_eq!(flagged.len(), 19);
    assert!(flagged.iter().all(|s| s.starts_with("vphx") || s.starts_with("dpzn")));
    assert!(!flagged.contains(&"vphx{m=1,n=1}"));
    bin().args(["table", "--published", "--fail-on-mismatch"]).assert().code(1);
    bin().args(["table", "--published", "--family", "pah", "--fail-on-mismatch"]).assert().success();
}

#[test]
fn grid_points() {
    let out = stdout_of(&["grid", "--family", "vphy", "--params", "m=5,n=5", "--x", "0..1", "--y", "0..1", "--steps", "2"]);
    assert_eq!(out, "x,y,value\n0.0,0.0,0.0\n0.0,1.0,0.0\n1.0,0.0,0.0\n1.0,1.0,225.0\n");
    let out = stdout_of(&["grid", "--family", "pah", "--params", "n=5", "--steps", "3"]);
    assert_eq!(out.lines().count(), 10);
    assert!(out.lines().nth(1).unwrap().starts_with("0.0,0.0,0"));
    let pts = json_of(&["grid", "--family", "benzenoid", "--params", "m=5,n=5", "--x", "1..2", "--y", "1..2", "--steps", "2", "--format", "json"]);
    assert_eq!(pts[0]["value"].as_f64().unwrap(), 176.0);
}

#[test]
fn grid_errors() {
    let base = ["grid", "--family", "pah", "--params", "n=2"];
    bin().args(base).args(["--steps", "1"]).assert().code(64);
    bin().args(base).args(["--x", "0..inf"]).assert().code(64);
    bin().args(base).args(["--x", "-1..1"]).assert().success();
}

#[test]
fn families_listing() {
    let out = stdout_of(&["families"]);
    assert_eq!(out.lines().count(), 18);
    assert!(out.contains("catalog valid for m ≥ 2"));
    let doc = json_of(&["families", "--format", "json"]);
    let list = doc.as_array().unwrap();
    assert_eq!(list.len(), 18);
    assert_eq!(list[0]["token"], "path");
    assert_eq!(list[14]["params"], serde_json::json!(["m", "n"]));
    assert_eq!(list[8]["routes"], serde_json::json!(["pipeline", "closed"]));
}

#[test]
fn mpoly_outputs() {
    bin()
        .args(["mpoly", "--family", "vphx", "--params", "m=2,n=2"])
        .assert()
        .success()
        .stdout("8*x^2*y^3 + 26*x^3*y^3\n");
    let terms = json_of(&["mpoly", "--family", "pah", "--params", "n=1", "--format", "json"]);
    assert_eq!(terms[0]["i"], 1);
    assert_eq!(terms[0]["j"], 3);
    let part = json_of(&["mpoly", "--family", "tadpole", "--params", "n=5,m=3", "--partition", "--format", "json"]);
    assert_eq!(part, serde_json::json!({"1,2": 1, "2,2": 4, "2,3": 3}));
    let dir = TempDir::new().unwrap();
    let star = edge_file(&dir, "star", "0 1\n0 2\n0 3\n");
    let part = json_of(&["mpoly", "--graph", &star, "--partition", "--format", "json"]);
    assert_eq!(part, serde_json::json!({"1,3": 3}));
}

#[test]
fn mpoly_trace() {
    let out = stdout_of(&["mpoly", "--family", "path", "--params", "n=5", "--trace"]);
    let stages: Vec<&str> = out.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(stages, ["M", "S_x", "P_x", "P_y", "J", "D^1/2_x", "x=1"]);
    assert!(out.ends_with("x=1: 2*sqrt(2) + 2*sqrt(5)\n"));
    let doc = json_of(&["mpoly", "--family", "path", "--params", "n=5", "--trace", "--format", "json"]);
    assert_eq!(doc["stages"].as_array().unwrap().len(), 6);
    assert_eq!(doc["hso"], "2*sqrt(2) + 2*sqrt(5)");
}
