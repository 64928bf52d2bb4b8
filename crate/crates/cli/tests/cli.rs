use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dieudonne"))
}

fn job(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str], input: Option<&Path>) -> Output {
    let mut c = bin();
    c.args(args);
    if let Some(p) = input {
        c.arg("--input").arg(p);
    }
    c.output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad report ({e}): {}", String::from_utf8_lossy(&out.stderr))
    })
}

const H8: &str = r#"{
  "context": { "ring": "rational_group_ring", "group": "H8" },
  "matrix": [
    [[["1", "9"], ["x", "1"], ["y", "2"]], [["1", "1"], ["y", "1"]]],
    [[["1", "1"], ["x*y", "1"]],           [["1", "9"], ["x", "1"]]]
  ]
}"#;

#[test]
fn h8_det_report() {
    let f = job(H8);
    let out = run(&["det"], Some(f.path()));
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let class = &r["results"]["class"];
    assert_eq!(class[0]["value"], "81 + 17*e + 17*f + 1*e*f");
    assert_eq!(class[1]["value"], "6856");
    let cert = &r["results"]["certificate"];
    assert_eq!(cert["verdict"], "no_integral_representative");
    assert_eq!(cert["modulus"], "8");
    assert_eq!(cert["actual"], "0");
    assert_eq!(r["status"], "ok");
}

#[test]
fn identity_has_trivial_class() {
    let f = job(r#"{"context": {"group": "H8"},
        "matrix": [[[["1", "1"]], []], [[], [["1", "1"]]]]}"#);
    let r = report(&run(&["det"], Some(f.path())));
    assert_eq!(r["results"]["class"][0]["value"], "1");
    assert_eq!(r["results"]["class"][1]["value"], "1");
    assert_eq!(r["results"]["certificate"]["verdict"], "representative_found");
    assert_eq!(r["results"]["certificate"]["representative"], "1");
}

#[test]
fn quaternion_det() {
    let f = job(r#"{"context": {"ring": "rational_quaternion"},
        "matrix": [[["0","1","0","0"], ["0","0","1","0"]], [["0","0","1","0"], ["0","1","0","0"]]]}"#);
    let r = report(&run(&["det"], Some(f.path())));
    assert_eq!(r["results"]["class"][0]["value"], "4");
}

#[test]
fn output_flag_writes_file() {
    let f = job(H8);
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = run(&["det", "--output", target.to_str().unwrap()], Some(f.path()));
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(r["command"], "det");
}

#[test]
fn malformed_word_reports_position() {
    let f = job("{\n  \"context\": {\"group\": \"H8\"},\n  \"matrix\": [[[[\"x^\", \"1\"]]]]\n}\n");
    let out = run(&["det"], Some(f.path()));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("column"), "{err}");
}

#[test]
fn malformed_json_reports_position() {
    let f = job("{\n  \"context\": {,\n}");
    let out = run(&["det"], Some(f.path()));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn unknown_field_rejected() {
    let f = job(r#"{"context": {"group": "H8", "colour": "red"}, "matrix": [[[["1", "1"]]]]}"#);
    let out = run(&["det"], Some(f.path()));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn unsupported_and_numeric_exit_codes() {
    let f = job(r#"{"context": {"group": "D2p:4"}, "matrix": [[[["1", "1"]]]]}"#);
    assert_eq!(run(&["det"], Some(f.path())).status.code(), Some(3));
    let f = job(r#"{"context": {"ring": "padic_series"}, "matrix": [[[["1", "1"]]]]}"#);
    assert_eq!(run(&["det"], Some(f.path())).status.code(), Some(3));
    let f = job(r#"{"context": {"group": "H8", "padic_precision": "80"}, "matrix": [[[["1", "1"]]]]}"#);
    assert_eq!(run(&["det"], Some(f.path())).status.code(), Some(4));
    let f = job(r#"{"context": {"group": "H8"}, "matrix": [[[["1", "1"]]]]}"#);
    assert_eq!(run(&["det", "--precision", "70"], Some(f.path())).status.code(), Some(4));
}

#[test]
fn missing_input_is_usage_error() {
    assert_eq!(run(&["det"], None).status.code(), Some(2));
}

#[test]
fn dihedral_representative() {
    let f = job(r#"{"context": {"group": "D2p:3", "padic_precision": "10"},
        "matrix": [[[["1", "2"], ["y", "1"]], [["x", "3"]]], [[["x*y", "1"]], [["1", "1"], ["x", "-1"], ["y", "4"]]]]}"#);
    let r = report(&run(&["det"], Some(f.path())));
    assert_eq!(r["context"]["p"], "3");
    assert_eq!(r["results"]["certificate"]["verdict"], "representative_found");
}

#[test]
fn weierstrass_left_and_right() {
    for side in ["left", "right"] {
        let f = job(&format!(
            r#"{{"context": {{"ring": "hurwitz_series", "padic_precision": "12", "series_precision": "10"}},
            "series": [["2","0","0","0"], ["1","1","0","0"], ["1","0","0","0"], ["1","0","0","0"]],
            "side": "{side}"}}"#
        ));
        let out = run(&["weierstrass"], Some(f.path()));
        assert_eq!(out.status.code(), Some(0), "{side}");
        let r = report(&out);
        assert_eq!(r["results"]["degree"], "2");
        assert_eq!(r["results"]["mu"], "0");
        assert_eq!(r["results"]["residual_nonzero_coefficients"], "0");
    }
}

#[test]
fn weierstrass_padic_series() {
    let f = job(r#"{"context": {"ring": "padic_series", "p": "3", "padic_precision": "8", "series_precision": "8"},
        "series": ["9", "3", "2"]}"#);
    let r = report(&run(&["weierstrass"], Some(f.path())));
    assert_eq!(r["results"]["mu"], "0");
    assert_eq!(r["results"]["degree"], "2");
}

#[test]
fn weierstrass_zero_series_is_numeric_error() {
    let f = job(r#"{"context": {"ring": "padic_series", "p": "3"}, "series": ["0"]}"#);
    assert_eq!(run(&["weierstrass"], Some(f.path())).status.code(), Some(4));
}

const ISOGENY: &str = r#"{
  "context": { "ring": "padic_series", "p": "3", "padic_precision": "4", "series_precision": "16" },
  "a_e": [[["A", "15", "1"]]],
  "a_phi": [[[["1", ["0", "1"]], ["g", ["3"]]]]],
  "a_phi_tilde": [[[["1", ["3", "1"]]]]],
  "chi_phi": { "group": "Cp:3", "value": "4" },
  "chi_phi_tilde": { "group": "Cp:3", "value": "4" }
}"#;

#[test]
fn isogeny_check_holds_and_fails() {
    let f = job(&ISOGENY.replace("\"A\"", "\"36\""));
    let out = run(&["isogeny-check"], Some(f.path()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["holds"], true);

    let f = job(&ISOGENY.replace("\"A\"", "\"37\""));
    let out = run(&["isogeny-check"], Some(f.path()));
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["results"]["holds"], false);
    assert_eq!(r["status"], "failed");
}

#[test]
fn verify_paper_passes() {
    let out = run(&["verify-paper"], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    let checks = r["results"].as_array().unwrap();
    assert!(checks.len() >= 12);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn proptest_is_deterministic() {
    let a = run(&["proptest", "--seed", "11", "--cases", "3"], None);
    let b = run(&["proptest", "--seed", "11", "--cases", "3"], None);
    assert_eq!(a.status.code(), Some(0));
    let (ra, rb) = (without_timing(report(&a)), without_timing(report(&b)));
    assert_eq!(ra, rb);
    let c = without_timing(report(&run(&["proptest", "--seed", "12", "--cases", "3"], None)));
    assert_ne!(ra["results"]["fingerprint"], c["results"]["fingerprint"]);
}

#[test]
fn proptest_rejects_zero_cases() {
    assert_eq!(run(&["proptest", "--cases", "0"], None).status.code(), Some(2));
}
