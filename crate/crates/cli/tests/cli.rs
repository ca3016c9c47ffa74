use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_escalier"))
        .args(args)
        .env_remove("QB_ORACLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let value = serde_json::from_slice(&out.stdout).expect("stdout is json");
    (value, out.status.code().unwrap())
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn unique_on_three_site_conditions() {
    let (v, code) = run_json(&["unique", "--input", &path("three-sites.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["unique"], true);
    assert_eq!(v["basis"].as_array().unwrap().len(), 8);
    assert!(!v["universal_gb"].as_array().unwrap().is_empty());
}

#[test]
fn not_unique_reports_witness_and_status() {
    let (v, code) = run_json(&["unique", "--input", &path("four-points.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["unique"], false);
    assert_ne!(v["witness"]["escalier_a"], v["witness"]["escalier_b"]);

    let (_, code) = run_json(&["unique", "--input", &path("four-points.json"), "--status-exit"]);
    assert_eq!(code, 3);
}

#[test]
fn xi_family_is_not_cartesian_along_last_axis() {
    let (v, code) = run_json(&["cartesian", "--input", &path("xi3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["cartesian"], false);
    assert_eq!(v["failing_axis"], 3);
}

#[test]
fn single_point_escalier() {
    let (v, code) = run_json(&["escalier", "--input", &path("single-point.json"), "--order", "lex:2,3,1"]);
    assert_eq!(code, 0);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["order", "escalier", "corners", "groebner"]);
    assert_eq!(v["escalier"], serde_json::json!([[0, 0, 0]]));
    assert_eq!(v["corners"].as_array().unwrap().len(), 3);
    assert_eq!(v["order"]["name"], "lex:2,3,1");
}

#[test]
fn domain_error_exit_one() {
    let (v, code) = run_json(&["xi-family", "--dimension", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "dimension_too_small");
    assert!(v["detail"].is_string());
}

#[test]
fn input_errors_exit_two() {
    let (v, code) = run_json(&["unique", "--input", "/nonexistent/conditions.json"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let (_, code) = run_json(&["escalier", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 2);

    let (_, code) = run_json(&["escalier", "--input", &path("three-sites.json"), "--order", "lex:1,1,2"]);
    assert!(code == 1 || code == 2);

    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["unique", "--input", "three-sites.json"],
        vec!["escalier", "--input", "cartesian-grid.json", "--order", "grlex"],
        vec!["cartesian", "--input", "cartesian-grid.json"],
        vec!["enumerate-bases", "--input", "four-points.json"],
    ] {
        let full: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".json") { path(a) } else { a.to_string() })
            .collect();
        let full: Vec<&str> = full.iter().map(String::as_str).collect();
        let a = run(&full);
        let b = run(&full);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn cartesian_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let rec = dir.path().join("rec.json");
    let built = dir.path().join("built.json");

    let out = run(&["cartesian", "--input", &path("cartesian-grid.json"), "-o", rec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rec_value: Value = serde_json::from_slice(&std::fs::read(&rec).unwrap()).unwrap();
    assert_eq!(rec_value["cartesian"], true);

    let out = run(&["make-cartesian", "--input", rec.to_str().unwrap(), "-o", built.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let (original, _) = run_json(&["make-cartesian", "--input", &path("cartesian-description.json")]);
    let rebuilt: Value = serde_json::from_slice(&std::fs::read(&built).unwrap()).unwrap();
    let sorted = |v: &Value| {
        let mut pts = v["points"].as_array().unwrap().clone();
        pts.sort_by_key(|p| p.to_string());
        pts
    };
    assert_eq!(sorted(&original), sorted(&rebuilt));

    let (v, code) = run_json(&["unique", "--input", built.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["unique"], true);
    let mut basis = v["basis"].clone();
    let mut lower = rec_value["description"]["lower_set"].clone();
    let sort = |b: &mut Value| b.as_array_mut().unwrap().sort_by_key(|e| e.to_string());
    sort(&mut basis);
    sort(&mut lower);
    assert_eq!(basis, lower);
}

#[test]
fn escalier_output_feeds_corners() {
    let dir = tempfile::tempdir().unwrap();
    let esc = dir.path().join("esc.json");
    let out = run(&["escalier", "--input", &path("three-sites.json"), "-o", esc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let esc_value: Value = serde_json::from_slice(&std::fs::read(&esc).unwrap()).unwrap();

    let (v, code) = run_json(&["corners", "--input", esc.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut corners = v["corners"].clone();
    let mut expected = esc_value["corners"].clone();
    let sort = |b: &mut Value| b.as_array_mut().unwrap().sort_by_key(|e| e.to_string());
    sort(&mut corners);
    sort(&mut expected);
    assert_eq!(corners, expected);
}

#[test]
fn xi_family_points_are_unique_bases() {
    let dir = tempfile::tempdir().unwrap();
    let xi = dir.path().join("xi4.json");
    let out = run(&["xi-family", "--dimension", "4", "-o", xi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let (v, code) = run_json(&["unique", "--input", xi.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["unique"], true);
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
}

#[test]
fn pretty_output_parses_identically() {
    let compact = run(&["gbasis", "--input", &path("three-sites.json")]);
    let pretty = run(&["--pretty", "gbasis", "--input", &path("three-sites.json")]);
    assert!(pretty.stdout.len() > compact.stdout.len());
    let a: Value = serde_json::from_slice(&compact.stdout).unwrap();
    let b: Value = serde_json::from_slice(&pretty.stdout).unwrap();
    assert_eq!(a, b);
    assert!(a["groebner"].is_array());
}

#[test]
fn oracle_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_escalier"))
        .args(["enumerate-bases", "--input", &path("four-points.json")])
        .env("QB_ORACLE_LIMIT", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "instance_too_large");

    let (v, code) = run_json(&["enumerate-bases", "--input", &path("four-points.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 5);
}

#[test]
fn normal_form_lands_in_escalier() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("p.json");
    std::fs::write(&poly, r#"[{"exp":[0,0],"coef":"0"},{"exp":[2,0],"coef":"1"}]"#).unwrap();
    let (v, code) = run_json(&[
        "normal-form",
        "--input",
        &path("four-points.json"),
        "--order",
        "lex:1,2",
        "--poly",
        poly.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{v}");
    let terms = v.as_array().unwrap();
    assert!(!terms.is_empty());
    for t in terms {
        assert_eq!(t["exp"][0], 0);
        assert!(t["exp"][1].as_u64().unwrap() < 4);
    }
}
