use monosig_web::{invariants_json, signature_json, trace_json};
use serde_json::Value;

const EXAMPLE: &str = "4 5\nx1*x2*x3^2\nx1^6*x3^7\nx2^3*x4\nx2*x3^3*x4\nx2*x4^3\n";

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.expect("binding succeeded")).expect("valid json")
}

fn int_rows(v: &Value) -> Vec<Vec<u64>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect()
}

/// Rank of each entry among the distinct values of its row.
fn ranks(rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let mut below: Vec<u64> = r.iter().copied().filter(|y| y < x).collect();
                    below.sort_unstable();
                    below.dedup();
                    below.len() as u64
                })
                .collect()
        })
        .collect()
}

#[test]
fn signature_keeps_document_order_and_marks_changes() {
    let v = parse(signature_json(EXAMPLE, false));
    let a = int_rows(&v["matrix"]);
    assert_eq!(a[0], vec![1, 6, 0, 0, 0]);
    let s = int_rows(&v["signature_matrix"]);
    assert_eq!(s, ranks(&a));
    let changed = v["changed"].as_array().unwrap();
    for i in 0..a.len() {
        for j in 0..a[i].len() {
            assert_eq!(changed[i][j].as_bool().unwrap(), a[i][j] != s[i][j]);
        }
    }
    assert_eq!(v["self_signature"], Value::Bool(false));
}

#[test]
fn signature_of_matrix_document() {
    let v = parse(signature_json("2 3\n0 1 2\n2 1 0\n", true));
    assert_eq!(v["self_signature"], Value::Bool(true));
    assert_eq!(
        int_rows(&v["signature_matrix"]),
        vec![vec![0, 1, 2], vec![2, 1, 0]]
    );
}

#[test]
fn principal_ideal_signature_is_the_ring() {
    let v = parse(signature_json("3 1\nx1*x2*x3\n", false));
    assert_eq!(v["signature"], "R");
    let t = parse(trace_json("3 1\nx1*x2*x3\n", "q"));
    assert_eq!(t["principal"], Value::Bool(true));
}

#[test]
fn trace_steps_and_weighted_degrees() {
    let v = parse(trace_json(EXAMPLE, "q"));
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 5);
    let degrees: Vec<u64> = v["weighted_degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(degrees, vec![5, 2, 2, 4, 2]);
    assert_eq!(steps[0]["reg"], serde_json::json!([12, 8]));
    assert_eq!(
        v["signature"],
        "(x1*x2*x3, x2^2*x4, x2*x4^2, x2*x3^2*x4, x1^2*x3^3)"
    );
    let rings: Vec<&str> = v["summary"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["ring"].as_str().unwrap())
        .collect();
    assert_eq!(rings, vec!["R/I", "R/sgn(I)", "S/I_pol"]);
}

#[test]
fn betti_diagram_totals_match_rows() {
    let v = parse(invariants_json(EXAMPLE, "p=2"));
    let rings = v["rings"].as_array().unwrap();
    assert_eq!(rings.len(), 2);
    for r in rings {
        let b = &r["betti"];
        let totals: Vec<u64> = b["totals"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap())
            .collect();
        let rows = int_rows(&b["rows"]);
        for (i, t) in totals.iter().enumerate() {
            assert_eq!(*t, rows.iter().map(|row| row[i]).sum::<u64>());
        }
        assert_eq!(totals[0], 1);
        assert_eq!(b["pd"].as_u64().unwrap() as usize + 1, totals.len());
        assert_eq!(
            rows.len() as u64 - 1,
            r["invariants"]["reg"].as_u64().unwrap()
        );
    }
    assert_eq!(rings[0]["invariants"]["reg"], 12);
    assert_eq!(rings[1]["invariants"]["reg"], 4);
}

#[test]
fn malformed_input_is_an_error() {
    assert!(signature_json("2 1\n1 x\n", false).is_err());
    assert!(trace_json(EXAMPLE, "p=4").is_err());
    assert!(invariants_json("", "q").is_err());
}
