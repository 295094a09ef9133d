//! End-to-end tests of the command-line binary: exit codes, report schema
//! stability (golden files), input validation, and plot-data export.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curve-symmetry"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("curve-symmetry-test-{}-{}", std::process::id(), name));
    std::fs::write(&path, contents).unwrap();
    path
}

fn json_without_timings(stdout: &[u8]) -> Value {
    let mut v: Value = serde_json::from_slice(stdout).expect("valid JSON on stdout");
    v.as_object_mut().unwrap().remove("timings").expect("timings key present");
    v
}

fn golden(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn golden_report_crunode() {
    let out = run(&["--builtin", "crunode", "--digits", "12", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json_without_timings(&out.stdout), golden("crunode.json"));
}

#[test]
fn golden_report_daisy1() {
    let out = run(&["--builtin", "daisy:1", "--digits", "12", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json_without_timings(&out.stdout), golden("daisy1.json"));
}

#[test]
fn planar_input_refused_with_exit_2() {
    let path = temp_file(
        "planar.json",
        r#"{"x": {"num": [0,1], "den": [1]}, "y": {"num": [0,0,1], "den": [1]}, "z": {"num": [0], "den": [1]}}"#,
    );
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("planar"), "stderr: {}", err);
    assert!(err.contains("plane-curve"), "stderr: {}", err);
}

#[test]
fn line_input_refused_with_exit_2() {
    let path = temp_file(
        "line.json",
        r#"{"x": {"num": [0,1], "den": [1]}, "y": {"num": [0,2], "den": [1]}, "z": {"num": [0,3], "den": [1]}}"#,
    );
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
}

#[test]
fn circle_input_refused_with_exit_2() {
    // Unit circle: ((1-t^2)/(1+t^2), 2t/(1+t^2), 0)
    let path = temp_file(
        "circle.json",
        r#"{"x": {"num": [1,0,-1], "den": [1,0,1]}, "y": {"num": [0,2], "den": [1,0,1]}, "z": {"num": [0], "den": [1]}}"#,
    );
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("circle"));
}

#[test]
fn refusal_in_json_format_names_the_degeneracy() {
    let path = temp_file(
        "planar2.json",
        r#"{"x": {"num": [0,1], "den": [1]}, "y": {"num": [0,0,1], "den": [1]}, "z": {"num": [0], "den": [1]}}"#,
    );
    let out = run(&["--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["degeneracy"]["kind"], "planar");
    assert!(v["degeneracy"]["note"].as_str().unwrap().contains("plane-curve"));
    assert!(v["direct"].is_null());
}

#[test]
fn malformed_file_exits_1_with_position() {
    let path = temp_file("broken.json", "{\"x\": [1,");
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line") && err.contains("column"), "stderr: {}", err);
}

#[test]
fn float_coefficients_rejected() {
    let path = temp_file(
        "float.json",
        r#"{"x": {"num": [0.5], "den": [1]}, "y": {"num": [0,1], "den": [1]}, "z": {"num": [1], "den": [1]}}"#,
    );
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr)
        .contains("floating point not accepted; use exact rationals"));
}

#[test]
fn zero_denominator_rejected() {
    let path = temp_file(
        "zeroden.json",
        r#"{"x": {"num": [0,1], "den": [0]}, "y": {"num": [0,1], "den": [1]}, "z": {"num": [1], "den": [1]}}"#,
    );
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero denominator"));
}

#[test]
fn unknown_builtin_exits_1() {
    let out = run(&["--builtin", "space-rose"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown builtin"));
}

#[test]
fn missing_input_exits_1() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn signs_plus_only_leaves_opposite_null() {
    let out = run(&["--builtin", "crunode", "--signs", "plus", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["direct"]["count"], 2);
    assert!(v["opposite"].is_null());
}

#[test]
fn curve_file_roundtrip_matches_builtin() {
    let c = curve_invariants::crunode();
    let path = temp_file("crunode.json", &curve_invariants::curve_to_json(&c).to_string());
    let from_file = run(&["--input", path.to_str().unwrap(), "--format", "json"]);
    let from_builtin = run(&["--builtin", "crunode", "--format", "json"]);
    assert!(from_file.status.success());
    let mut a = json_without_timings(&from_file.stdout);
    let b = json_without_timings(&from_builtin.stdout);
    a["curve"]["source"] = b["curve"]["source"].clone();
    assert_eq!(a, b);
}

#[test]
fn plot_crunode_lists_both_mirror_planes() {
    let path = std::env::temp_dir().join(format!("crunode-plot-{}.csv", std::process::id()));
    let out = run(&["--builtin", "crunode", "--digits", "4", "--plot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    // mirror planes z + x = 0 and z - x = 0, plus the half-turn axis
    assert!(csv.contains("plane,1.0000,0.0000,1.0000,0.0000"), "csv: {}", csv);
    assert!(csv.contains("plane,1.0000,0.0000,-1.0000,0.0000"));
    assert!(csv.contains("line,"));
    assert!(csv.lines().filter(|l| l.starts_with("curve,")).count() > 100);
}

#[test]
fn plot_daisy1_contains_center_point() {
    let path = std::env::temp_dir().join(format!("daisy-plot-{}.csv", std::process::id()));
    let out = run(&["--builtin", "daisy:1", "--digits", "4", "--plot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.contains("point,0.0000,0.0000,0.0000"), "csv: {}", csv);
}

#[test]
fn twisted_cubic_has_two_direct_no_opposite() {
    let out = run(&["--builtin", "twisted-cubic", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["direct"]["count"], 2);
    assert_eq!(v["opposite"]["count"], 0);
}

#[test]
fn random_central_builtin_reports_central_inversion() {
    let out = run(&["--builtin", "random-central:4", "--seed", "7", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let kinds: Vec<&str> = v["opposite"]["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"central inversion"), "kinds: {:?}", kinds);
}
