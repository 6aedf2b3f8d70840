use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use avd_cli::{exit, ColoringDocument};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circavd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> u8 {
    o.status.code().expect("exited") as u8
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn color_to(dir: &Path, n: usize, r: usize) -> std::path::PathBuf {
    let path = dir.join(format!("c{n}_{r}.json"));
    let o = run(&[
        "color",
        "--n",
        &n.to_string(),
        "--r",
        &r.to_string(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), exit::OK, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn color_json_document() {
    let o = run(&["color", "--n", "24", "--r", "2", "--format", "json"]);
    assert_eq!(code(&o), exit::OK);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["formatVersion"], 1);
    assert_eq!(v["palette"].as_array().unwrap().len(), 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 48);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(v["provenance"]["u"], 0);
    assert_eq!(v["provenance"]["v"], 2);
}

#[test]
fn color_output_is_byte_stable() {
    let a = run(&["color", "--n", "41", "--r", "2"]);
    let b = run(&["color", "--n", "41", "--r", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn not_covered_and_invalid_input() {
    let o = run(&["color", "--n", "7", "--r", "2"]);
    assert_eq!(code(&o), exit::NOT_COVERED);
    assert!(String::from_utf8_lossy(&o.stderr).contains("n >= 92"));
    assert_eq!(
        code(&run(&["color", "--n", "4", "--r", "2"])),
        exit::INVALID_INPUT
    );
    assert_eq!(
        code(&run(&["color", "--n", "x", "--r", "2"])),
        exit::INVALID_INPUT
    );
    assert_eq!(code(&run(&["color", "--n", "9"])), exit::INVALID_INPUT);
    assert_eq!(code(&run(&["frobnicate"])), exit::INVALID_INPUT);
    assert_eq!(code(&run(&["--help"])), exit::OK);
}

#[test]
fn dot_and_csv() {
    let o = run(&["color", "--n", "9", "--r", "1", "--format", "dot"]);
    assert_eq!(code(&o), exit::OK);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches(" -- ").count(), 9);
    assert!(dot.contains("8 [label=\"8\"]"));
    assert!(dot.contains("color="));
    let colors: std::collections::HashSet<&str> = dot
        .lines()
        .filter_map(|l| l.split("label=\"").nth(1).filter(|_| l.contains(" -- ")))
        .collect();
    assert_eq!(colors.len(), 3);

    let o = run(&["color", "--n", "12", "--r", "2", "--format", "csv"]);
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("u,v,color"));
    assert_eq!(lines.count(), 24);
}

#[test]
fn verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = color_to(dir.path(), 29, 2);
    let text = fs::read_to_string(&path).unwrap();
    let doc = ColoringDocument::parse(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    let o = run(&[
        "verify",
        path.to_str().unwrap(),
        "--checks",
        "proper,avd,palette,shape",
    ]);
    assert_eq!(code(&o), exit::OK, "{}", stdout(&o));
    assert!(stdout(&o).contains("palette=5"));
}

#[test]
fn verify_catches_recolored_edge() {
    let dir = tempfile::tempdir().unwrap();
    let path = color_to(dir.path(), 24, 2);
    let mut doc = ColoringDocument::parse(&fs::read_to_string(&path).unwrap()).unwrap();
    doc.edges[0].2 = doc.edges[1].2;
    fs::write(&path, doc.to_json()).unwrap();
    let o = run(&["verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), exit::VERIFICATION_FAILED);
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["passed"], false);
    assert_eq!(report["violations"][0]["kind"], "improper");
    assert_eq!(report["violations"][0]["vertices"][0], 0);
}

#[test]
fn verify_missing_edge_is_a_verification_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = color_to(dir.path(), 24, 2);
    let mut doc = ColoringDocument::parse(&fs::read_to_string(&path).unwrap()).unwrap();
    doc.edges.pop();
    fs::write(&path, doc.to_json()).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), exit::VERIFICATION_FAILED);
    assert!(stdout(&o).contains("MissingEdge"));
}

#[test]
fn verify_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{ not json").unwrap();
    assert_eq!(
        code(&run(&["verify", path.to_str().unwrap()])),
        exit::PARSE_ERROR
    );
    let good = color_to(dir.path(), 12, 2);
    let mut v: Value = serde_json::from_str(&fs::read_to_string(good).unwrap()).unwrap();
    v["edges"][0][2] = 99.into();
    fs::write(&path, v.to_string()).unwrap();
    assert_eq!(
        code(&run(&["verify", path.to_str().unwrap()])),
        exit::PARSE_ERROR
    );
    v["edges"][0][2] = 0.into();
    v["palette"][0]["name"] = "q^1_1".into();
    fs::write(&path, v.to_string()).unwrap();
    assert_eq!(
        code(&run(&["verify", path.to_str().unwrap()])),
        exit::PARSE_ERROR
    );
}

#[test]
fn verify_gg_on_phi_dist_document() {
    let c = avd_core::phi_dist(1, 2, 0).unwrap();
    let doc = ColoringDocument::from_coloring(&c, avd_cli::Provenance::external());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi.json");
    fs::write(&path, doc.to_json()).unwrap();
    let o = run(&["verify", path.to_str().unwrap(), "--gg-lengths", "1..4"]);
    assert_eq!(code(&o), exit::OK, "{}", stdout(&o));
    assert!(stdout(&o).contains("gg"));
    let o = run(&[
        "verify",
        path.to_str().unwrap(),
        "--checks",
        "periodicity",
        "--period",
        "5",
    ]);
    assert_eq!(code(&o), exit::OK);
}

#[test]
fn oracle_values_and_timeout() {
    for (n, r, k) in [("7", "2", "6"), ("5", "2", "5"), ("6", "1", "3")] {
        let o = run(&["oracle", "--n", n, "--r", r]);
        assert_eq!(code(&o), exit::OK);
        assert_eq!(stdout(&o).trim(), k);
    }
    let o = run(&["oracle", "--n", "12", "--r", "2", "--time-limit", "0"]);
    assert_eq!(code(&o), exit::TIMEOUT);
    assert!(stdout(&o).contains("5 <="));
}

#[test]
fn oracle_witness_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = run(&[
        "oracle",
        "--n",
        "8",
        "--r",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), exit::OK);
    let o = run(&["verify", path.to_str().unwrap(), "--checks", "proper,avd"]);
    assert_eq!(code(&o), exit::OK);
}

#[test]
fn coverage_totals() {
    let last = |args: &[&str]| stdout(&run(args)).lines().last().unwrap().to_string();
    assert_eq!(
        last(&["coverage", "--r", "2", "--lo", "5", "--hi", "67"]),
        "total 29 of 63"
    );
    assert_eq!(
        last(&["coverage", "--r", "2", "--lo", "68", "--hi", "100"]),
        "total 33 of 33"
    );
    let out = stdout(&run(&["coverage", "--r", "1", "--lo", "3", "--hi", "12"]));
    let yes: Vec<&str> = out
        .lines()
        .filter(|l| l.contains(",yes,"))
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(yes, ["3", "6", "9", "12"]);
    assert_eq!(
        code(&run(&["coverage", "--r", "2", "--lo", "9", "--hi", "5"])),
        exit::INVALID_INPUT
    );
}

#[test]
fn export_converts() {
    let dir = tempfile::tempdir().unwrap();
    let path = color_to(dir.path(), 12, 2);
    let csv = dir.path().join("e.csv");
    let o = run(&[
        "export",
        path.to_str().unwrap(),
        "--format",
        "csv",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), exit::OK);
    assert_eq!(fs::read_to_string(csv).unwrap().lines().count(), 25);
    let o = run(&[
        "color", "--n", "12", "--r", "2", "--format", "csv", "--seed", "7",
    ]);
    assert_eq!(code(&o), exit::OK);
}
