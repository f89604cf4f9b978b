//! Browser bindings: the signature of a matrix or ideal, the gap-closing
//! trace, and Betti tables with the derived invariants.
//!
//! Every exported function takes an ideal (or matrix) document as text and
//! returns a JSON string. The `*_json` functions hold the logic and run on
//! any target; the `#[wasm_bindgen]` wrappers only convert errors.

use monosig::harness::format::{parse_ideal_batch, parse_matrix};
use monosig::harness::report::RingInvariants;
use monosig::harness::{run_trace, TraceOutcome};
use monosig::signature::{signature_matrix, variable_name};
use monosig::{betti_table, Field, IncidenceMatrix, MonomialIdeal};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

type Outcome = Result<String, String>;

fn to_json(v: &impl Serialize) -> Outcome {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// The single ideal of `text` and its generators in document order.
fn read_ideal(text: &str) -> Result<(MonomialIdeal, IncidenceMatrix), String> {
    let mut docs = parse_ideal_batch(text);
    if docs.len() != 1 {
        return Err(format!("expected one ideal document, found {}", docs.len()));
    }
    let d = docs
        .pop()
        .expect("one document")
        .map_err(|e| e.to_string())?;
    let ideal = d.to_ideal();
    let listed = IncidenceMatrix::from_columns(d.n, &d.monomials);
    let a = if listed.cols() == ideal.len() && listed.columns_form_antichain() {
        listed
    } else {
        ideal.incidence_matrix().map_err(|e| e.to_string())?
    };
    Ok((ideal, a))
}

fn ideal_text(i: &MonomialIdeal) -> String {
    if i.is_unit() {
        "R".to_string()
    } else {
        i.to_string()
    }
}

/// `A`, `sgn(A)` and `sgn(I)` for an ideal document, or for a matrix
/// document when `matrix` is set.
pub fn signature_json(text: &str, matrix: bool) -> Outcome {
    let a = if matrix {
        parse_matrix(text).map_err(|e| e.to_string())?
    } else {
        read_ideal(text)?.1
    };
    let s = signature_matrix(&a);
    let ideal = a.to_ideal();
    let sig = s.to_ideal();
    let changed: Vec<Vec<bool>> = (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| a.get(i, j) != s.get(i, j)).collect())
        .collect();
    to_json(&json!({
        "matrix": a.row_vecs(),
        "signature_matrix": s.row_vecs(),
        "changed": changed,
        "ideal": ideal_text(&ideal),
        "signature": ideal_text(&sig),
        "self_signature": ideal == sig,
    }))
}

/// Per-step table of the gap-closing procedure.
pub fn trace_json(text: &str, field: &str) -> Outcome {
    let field: Field = field.parse().map_err(|e: monosig::Error| e.to_string())?;
    let (ideal, _) = read_ideal(text)?;
    match run_trace(&ideal, field).map_err(|e| e.to_string())? {
        TraceOutcome::Principal => {
            to_json(&json!({ "principal": true, "signature": "R", "steps": [] }))
        }
        TraceOutcome::Trace(t) => {
            let n = t.trace.n;
            let step_name = move |i: usize| {
                if i < n {
                    format!("x{}", i + 1)
                } else {
                    "x0".to_string()
                }
            };
            let steps: Vec<_> = t
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "variable": format!("x{}", s.variable),
                        "p": s.p,
                        "q": s.q,
                        "substitution": s.substitution,
                        "ideal": s.ideal().to_string(),
                        "polarized": s.polarized_ideal().display_with(step_name).to_string(),
                        "shifted": s.shifted_ideal().to_string(),
                        "reg": [s.reg_ideal, s.reg_shifted],
                        "v": [s.v_ideal, s.v_shifted],
                    })
                })
                .collect();
            to_json(&json!({
                "principal": false,
                "notes": t.notes,
                "steps": steps,
                "signature": t.trace.signature.to_string(),
                "polarized": t.trace.polarized.display_with(move |i| variable_name(n, i)).to_string(),
                "weighted_degrees": t.trace.weighted_degrees(),
                "summary": t.summary,
            }))
        }
    }
}

fn betti_rows(ideal: &MonomialIdeal, field: Field) -> Result<serde_json::Value, String> {
    let table = betti_table(ideal, field).map_err(|e| e.to_string())?;
    let pd = table.pd();
    let reg = table.regularity().max(0) as u64;
    let graded = table.graded(None);
    let rows: Vec<Vec<u64>> = (0..=reg)
        .map(|r| {
            (0..=pd)
                .map(|i| graded.get(&(i, r + i as u64)).copied().unwrap_or(0))
                .collect()
        })
        .collect();
    let totals: Vec<u64> = (0..=pd).map(|i| table.total(i)).collect();
    Ok(json!({ "pd": pd, "totals": totals, "rows": rows }))
}

/// Coarse Betti diagrams and invariants of `R/I` and `R/sgn(I)`.
pub fn invariants_json(text: &str, field: &str) -> Outcome {
    let field: Field = field.parse().map_err(|e: monosig::Error| e.to_string())?;
    let (ideal, _) = read_ideal(text)?;
    let sig = monosig::signature_of_ideal(&ideal).map_err(|e| e.to_string())?;
    let mut rings = vec![json!({
        "ring": "R/I",
        "ideal": ideal.to_string(),
        "betti": betti_rows(&ideal, field)?,
        "invariants": RingInvariants::compute("R/I", &ideal, field, None).map_err(|e| e.to_string())?,
    })];
    if !sig.is_unit() {
        rings.push(json!({
            "ring": "R/sgn(I)",
            "ideal": sig.to_string(),
            "betti": betti_rows(&sig, field)?,
            "invariants": RingInvariants::compute("R/sgn(I)", &sig, field, None).map_err(|e| e.to_string())?,
        }));
    }
    to_json(&json!({ "field": field, "rings": rings }))
}

#[wasm_bindgen]
pub fn signature(text: &str, matrix: bool) -> Result<String, JsValue> {
    signature_json(text, matrix).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn trace(text: &str, field: &str) -> Result<String, JsValue> {
    trace_json(text, field).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn invariants(text: &str, field: &str) -> Result<String, JsValue> {
    invariants_json(text, field).map_err(|e| JsValue::from_str(&e))
}
