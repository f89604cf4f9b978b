//! Cohen-Macaulay and Gorenstein classification of batches of signature
//! matrices or ideals.

use std::fmt;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::format::{parse_ideal_batch, parse_matrix_batch, serialize_ideal};
use crate::homology::{homological_invariants, Field};
use crate::monomial::{IncidenceMatrix, MonomialIdeal};
use crate::signature::{signature_matrix, signature_of_ideal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassFilter {
    Cm,
    Gorenstein,
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cm" => Ok(ClassFilter::Cm),
            "gorenstein" => Ok(ClassFilter::Gorenstein),
            _ => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown filter `{s}`; expected `cm` or `gorenstein`"),
            }),
        }
    }
}

/// One batch entry before classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyInput {
    Matrix(IncidenceMatrix),
    Ideal(MonomialIdeal),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedEntry {
    pub index: usize,
    /// Rows of `sgn(A)`.
    pub signature_matrix: Vec<Vec<u32>>,
    /// Canonical exponent-row document of `sgn(I)`.
    pub signature: String,
    #[serde(skip)]
    pub signature_ideal: MonomialIdeal,
    pub self_signature: bool,
    pub cm: bool,
    pub gorenstein: bool,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryError {
    pub index: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub field: Field,
    pub filter: Option<ClassFilter>,
    pub total: usize,
    pub cm: usize,
    pub gorenstein: usize,
    pub self_signature: usize,
    /// Entries passing the filter (all classified entries without one), in
    /// input order.
    pub entries: Vec<ClassifiedEntry>,
    pub errors: Vec<EntryError>,
}

impl ClassifyReport {
    pub fn selected_ideals(&self) -> Vec<MonomialIdeal> {
        self.entries
            .iter()
            .map(|e| e.signature_ideal.clone())
            .collect()
    }
}

fn classify_one(index: usize, input: &ClassifyInput, field: Field) -> Result<ClassifiedEntry> {
    let mut warnings = Vec::new();
    let (ideal, self_signature) = match input {
        ClassifyInput::Matrix(a) => {
            if !a.columns_form_antichain() {
                warnings.push("columns do not form an antichain".to_string());
            }
            let s = signature_matrix(a);
            let tight = s == *a;
            (s.to_ideal(), tight)
        }
        ClassifyInput::Ideal(i) => {
            let s = signature_of_ideal(i)?;
            let same = s == *i;
            (s, same)
        }
    };
    if !self_signature {
        warnings.push("entry is not its own signature; classifying its signature".to_string());
    }
    let sig = match input {
        ClassifyInput::Matrix(a) => signature_matrix(a),
        ClassifyInput::Ideal(_) => IncidenceMatrix::from_columns(ideal.n(), ideal.generators()),
    };
    let (cm, gorenstein) = if ideal.is_unit() {
        warnings.push("signature is the unit ideal".to_string());
        (false, false)
    } else {
        let h = homological_invariants(&ideal, field, None)?;
        (h.cm, h.gorenstein)
    };
    Ok(ClassifiedEntry {
        index,
        signature_matrix: sig.row_vecs(),
        signature: serialize_ideal(&ideal),
        signature_ideal: ideal,
        self_signature,
        cm,
        gorenstein,
        warnings,
    })
}

/// Classifies every entry; failures are reported per entry. Output order is
/// input order regardless of parallelism.
pub fn run_classify(
    inputs: Vec<Result<ClassifyInput>>,
    filter: Option<ClassFilter>,
    field: Field,
) -> ClassifyReport {
    let total = inputs.len();
    let work = |(k, input): (usize, &Result<ClassifyInput>)| -> std::result::Result<ClassifiedEntry, EntryError> {
        let err = |e: &Error| EntryError {
            index: k,
            message: e.to_string(),
        };
        match input {
            Ok(i) => classify_one(k, i, field).map_err(|e| err(&e)),
            Err(e) => Err(err(e)),
        }
    };
    #[cfg(feature = "parallel")]
    let results: Vec<_> = inputs.par_iter().enumerate().map(work).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = inputs.iter().enumerate().map(work).collect();

    let mut entries = Vec::new();
    let mut errors = Vec::new();
    let (mut cm, mut gorenstein, mut self_signature) = (0, 0, 0);
    for r in results {
        match r {
            Ok(e) => {
                cm += usize::from(e.cm);
                gorenstein += usize::from(e.gorenstein);
                self_signature += usize::from(e.self_signature);
                let keep = match filter {
                    None => true,
                    Some(ClassFilter::Cm) => e.cm,
                    Some(ClassFilter::Gorenstein) => e.gorenstein,
                };
                if keep {
                    entries.push(e);
                }
            }
            Err(e) => errors.push(e),
        }
    }
    ClassifyReport {
        field,
        filter,
        total,
        cm,
        gorenstein,
        self_signature,
        entries,
        errors,
    }
}

/// Batch entries from a text of matrix documents.
pub fn matrix_inputs(text: &str) -> Vec<Result<ClassifyInput>> {
    parse_matrix_batch(text)
        .into_iter()
        .map(|d| d.map(|d| ClassifyInput::Matrix(d.matrix)))
        .collect()
}

/// Batch entries from a text of ideal documents.
pub fn ideal_inputs(text: &str) -> Vec<Result<ClassifyInput>> {
    parse_ideal_batch(text)
        .into_iter()
        .map(|d| d.map(|d| ClassifyInput::Ideal(d.to_ideal())))
        .collect()
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "[{}] sgn(I) = {}  cm={} gorenstein={}",
                e.index + 1,
                e.signature_ideal,
                e.cm,
                e.gorenstein
            )?;
            for w in &e.warnings {
                writeln!(f, "    warning: {w}")?;
            }
        }
        for e in &self.errors {
            writeln!(f, "[{}] error: {}", e.index + 1, e.message)?;
        }
        writeln!(
            f,
            "total={} cm={} gorenstein={} self_signature={} errors={} field={}",
            self.total,
            self.cm,
            self.gorenstein,
            self.self_signature,
            self.errors.len(),
            self.field
        )
    }
}
