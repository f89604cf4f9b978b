use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = "4 5\nx1*x2*x3^2\nx1^6*x3^7\nx2^3*x4\nx2*x3^3*x4\nx2*x4^3\n";

fn doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn monosig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monosig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn sgn_prints_matrix_in_document_order() {
    let f = doc(EXAMPLE);
    let o = monosig(&["sgn", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(
        s.contains("  1 2 0 0 0\n  1 0 2 1 1\n  1 3 0 2 0\n  0 0 1 1 2\n"),
        "{s}"
    );
    assert!(s.contains("sgn(I) = (x1*x2*x3, x2^2*x4, x2*x4^2, x2*x3^2*x4, x1^2*x3^3)"));
}

#[test]
fn sgn_of_principal_ideal_is_ring() {
    let f = doc("3 1\nx1*x2*x3\n");
    let o = monosig(&["sgn", f.path().to_str().unwrap()]);
    assert!(stdout(&o).contains("sgn(I) = R"));
}

#[test]
fn trace_reports_every_step() {
    let f = doc(EXAMPLE);
    let o = monosig(&["trace", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.matches("step ").count(), 5);
    assert!(s.contains("weighted degrees = (5,2,2,4,2)"));
}

#[test]
fn invariants_json_schema() {
    let f = doc(EXAMPLE);
    let o = monosig(&["--json", "invariants", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    for key in [
        "n",
        "field",
        "notes",
        "ideal",
        "signature",
        "invariants",
        "ass",
        "trace",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let inv = v["invariants"].as_array().unwrap();
    assert_eq!(inv[0]["ring"], "R/I");
    assert_eq!(inv[0]["reg"], 12);
    assert_eq!(inv[1]["v"], 3);
    for key in [
        "height",
        "dim",
        "depth",
        "pd",
        "reg",
        "v",
        "cm",
        "gorenstein",
        "unmixed",
        "type",
    ] {
        assert!(inv[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn trace_json_has_polarization() {
    let f = doc(EXAMPLE);
    let o = monosig(&["--json", "trace", f.path().to_str().unwrap()]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["trace"].as_array().unwrap().len(), 5);
    assert_eq!(
        v["polarization"]["weighted_degrees"],
        serde_json::json!([5, 2, 2, 4, 2])
    );
}

#[test]
fn json_emits_one_line_per_document() {
    let f = doc(&format!("{EXAMPLE}3 2\nx1*x2\nx2*x3\n"));
    let o = monosig(&["--json", "ass", f.path().to_str().unwrap()]);
    assert_eq!(json_lines(&o).len(), 2);
}

#[test]
fn classify_filter_gorenstein() {
    let f = doc("3 3\nx1\nx2\nx3\n3 3\nx1*x2\nx2*x3\nx1*x3\n");
    let o = monosig(&[
        "--json",
        "classify",
        "--filter",
        "gorenstein",
        f.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["total"], 2);
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_passes_on_true_property() {
    let o = monosig(&["verify", "depth", "--count", "20"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_rejected_inputs_do_not_fail() {
    let f = doc("3 2\nx1*x2\nx1*x3\n");
    let o = monosig(&[
        "--json",
        "verify",
        "decomposition",
        "--input",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_lists_properties() {
    let o = monosig(&["verify", "list"]);
    assert!(stdout(&o).lines().count() >= 21);
}

#[test]
fn unknown_property_and_parse_errors_exit_2() {
    assert_eq!(
        monosig(&["verify", "no-such-property"]).status.code(),
        Some(2)
    );
    let f = doc("2 1\n1 y\n");
    let o = monosig(&["invariants", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn enumerate_counts() {
    let o = monosig(&["--json", "enumerate", "2", "2"]);
    let v = &json_lines(&o)[0];
    assert_eq!(
        v["count"].as_u64().unwrap() as usize,
        v["matrices"].as_array().unwrap().len()
    );
}
