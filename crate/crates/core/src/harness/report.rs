//! Invariant reports for one ideal and its signature, and their JSON shape.
//!
//! JSON layout (field names are stable):
//!
//! ```text
//! {
//!   "n": 4, "field": "q", "notes": [...],
//!   "ideal":      [[1,1,2,0], ...],          exponent rows of G(I)
//!   "signature":  [[1,1,1,0], ...],          exponent rows of G(sgn(I))
//!   "invariants": [{"ring": "R/I", ...}, {"ring": "R/sgn(I)", ...}],
//!   "ass":        [{"ring": "R/I", "primes": [[1,3], ...]}, ...],
//!   "trace":      [ step objects, see `trace` ],
//!   "polarization": {...}                   only after a trace
//! }
//! ```
//!
//! Variables in `ass` are one-based. Integers above `2^53 - 1` are written as
//! decimal strings.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::decomposition::{associated_primes, is_unmixed, MonomialPrime};
use crate::error::Result;
use crate::homology::{homological_invariants, Field, HomologicalInvariants};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::signature::signature_of_ideal;
use crate::vnumber::v_number;

const MAX_SAFE: u64 = (1 << 53) - 1;

/// Serializes an unsigned integer as a JSON number when it is exactly
/// representable in a double, as a decimal string otherwise.
pub fn json_u64<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if *v <= MAX_SAFE {
        s.serialize_u64(*v)
    } else {
        s.collect_str(v)
    }
}

pub fn json_i64<S: Serializer>(v: &i64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.unsigned_abs() <= MAX_SAFE {
        s.serialize_i64(*v)
    } else {
        s.collect_str(v)
    }
}

fn json_opt_i64<S: Serializer>(v: &Option<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => json_i64(x, s),
        None => s.serialize_none(),
    }
}

/// Invariants of one quotient ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingInvariants {
    pub ring: String,
    pub height: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    #[serde(serialize_with = "json_i64")]
    pub reg: i64,
    #[serde(
        serialize_with = "json_opt_i64",
        skip_serializing_if = "Option::is_none"
    )]
    pub reg_weighted: Option<i64>,
    #[serde(serialize_with = "json_u64")]
    pub v: u64,
    pub cm: bool,
    pub gorenstein: bool,
    pub unmixed: bool,
    #[serde(rename = "type", serialize_with = "json_u64")]
    pub cm_type: u64,
}

impl RingInvariants {
    pub fn compute(
        ring: &str,
        ideal: &MonomialIdeal,
        field: Field,
        weights: Option<&[u64]>,
    ) -> Result<Self> {
        let h: HomologicalInvariants = homological_invariants(ideal, field, weights)?;
        Ok(RingInvariants {
            ring: ring.to_string(),
            height: h.height,
            dim: h.dim,
            depth: h.depth,
            pd: h.pd,
            reg: h.reg,
            reg_weighted: h.reg_weighted,
            v: v_number(ideal)?,
            cm: h.cm,
            gorenstein: h.gorenstein,
            unmixed: is_unmixed(ideal)?,
            cm_type: h.cm_type,
        })
    }
}

/// Associated primes of one quotient ring, variables one-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssEntry {
    pub ring: String,
    pub primes: Vec<Vec<usize>>,
}

impl AssEntry {
    fn new(ring: &str, primes: &[MonomialPrime]) -> Self {
        AssEntry {
            ring: ring.to_string(),
            primes: primes
                .iter()
                .map(|p| p.variables().iter().map(|v| v + 1).collect())
                .collect(),
        }
    }
}

/// Everything the `invariants` command prints for one ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub field: Field,
    pub ideal: MonomialIdeal,
    /// The unit ideal when `I` is principal.
    pub signature: MonomialIdeal,
    /// `I = f * L` when some variable divides every generator.
    pub reduction: Option<(Monomial, MonomialIdeal)>,
    pub ideal_invariants: RingInvariants,
    /// `None` when the signature is the unit ideal.
    pub signature_invariants: Option<RingInvariants>,
    pub ideal_ass: Vec<MonomialPrime>,
    pub signature_ass: Vec<MonomialPrime>,
    pub notes: Vec<String>,
}

impl InvariantReport {
    /// `pd + depth = n` and `cm` iff `depth = dim` on every ring reported.
    pub fn is_consistent(&self) -> bool {
        let ok = |r: &RingInvariants| r.pd + r.depth == self.n && r.cm == (r.depth == r.dim);
        ok(&self.ideal_invariants) && self.signature_invariants.as_ref().is_none_or(ok)
    }

    pub fn invariants(&self) -> Vec<&RingInvariants> {
        std::iter::once(&self.ideal_invariants)
            .chain(self.signature_invariants.as_ref())
            .collect()
    }
}

/// Invariants of `R/I` and `R/sgn(I)`. Weights, when given, only affect
/// `reg_weighted` of `R/I`.
pub fn invariant_report(
    ideal: &MonomialIdeal,
    field: Field,
    weights: Option<&[u64]>,
) -> Result<InvariantReport> {
    ideal.ensure_proper_nonzero()?;
    let mut notes = Vec::new();
    let reduction = if ideal.is_principal() || ideal.every_row_has_zero() {
        None
    } else {
        let (f, l) = ideal.gcd_factor()?;
        notes.push(format!(
            "height 1: I = f*L with f = {f} and L = {l}; sgn(I) = sgn(L) and the signature theorems are applied to L"
        ));
        Some((f, l))
    };
    let signature = signature_of_ideal(ideal)?;
    let signature_invariants = if signature.is_unit() {
        notes.push("I is principal, so sgn(I) = R".to_string());
        None
    } else {
        Some(RingInvariants::compute(
            "R/sgn(I)", &signature, field, None,
        )?)
    };
    let signature_ass = if signature.is_unit() {
        Vec::new()
    } else {
        associated_primes(&signature)?
    };
    Ok(InvariantReport {
        n: ideal.n(),
        field,
        ideal: ideal.clone(),
        ideal_invariants: RingInvariants::compute("R/I", ideal, field, weights)?,
        signature_invariants,
        ideal_ass: associated_primes(ideal)?,
        signature_ass,
        signature,
        reduction,
        notes,
    })
}

fn rows(i: &MonomialIdeal) -> Vec<Vec<u32>> {
    i.generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

/// The JSON document emitted by the command-line tool.
#[derive(Debug, Clone, Serialize)]
pub struct JsonReport<T: Serialize> {
    pub n: usize,
    pub field: Field,
    pub notes: Vec<String>,
    pub ideal: Vec<Vec<u32>>,
    pub signature: Vec<Vec<u32>>,
    pub invariants: Vec<RingInvariants>,
    pub ass: Vec<AssEntry>,
    pub trace: Vec<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polarization: Option<PolarizationSummary>,
}

/// The full weighted polarization at the end of a trace.
#[derive(Debug, Clone, Serialize)]
pub struct PolarizationSummary {
    /// Exponent rows in `n + r` variables, `z_1..z_r` last.
    pub polarized: Vec<Vec<u32>>,
    pub weighted_degrees: Vec<u32>,
    pub invariants: Vec<RingInvariants>,
}

impl<T: Serialize> JsonReport<T> {
    pub fn new(report: &InvariantReport, trace: Vec<T>) -> Self {
        let mut ass = vec![AssEntry::new("R/I", &report.ideal_ass)];
        if !report.signature.is_unit() {
            ass.push(AssEntry::new("R/sgn(I)", &report.signature_ass));
        }
        JsonReport {
            n: report.n,
            field: report.field,
            notes: report.notes.clone(),
            ideal: rows(&report.ideal),
            signature: rows(&report.signature),
            invariants: report.invariants().into_iter().cloned().collect(),
            ass,
            trace,
            polarization: None,
        }
    }
}

fn write_ring(f: &mut fmt::Formatter<'_>, r: &RingInvariants) -> fmt::Result {
    write!(
        f,
        "{:<9} ht={} dim={} depth={} pd={} reg={}",
        r.ring, r.height, r.dim, r.depth, r.pd, r.reg
    )?;
    if let Some(w) = r.reg_weighted {
        write!(f, " reg_w={w}")?;
    }
    writeln!(
        f,
        " v={} type={} cm={} gorenstein={} unmixed={}",
        r.v, r.cm_type, r.cm, r.gorenstein, r.unmixed
    )
}

fn write_primes(f: &mut fmt::Formatter<'_>, ring: &str, primes: &[MonomialPrime]) -> fmt::Result {
    let p: Vec<String> = primes.iter().map(ToString::to_string).collect();
    writeln!(f, "Ass({ring}) = {{{}}}", p.join(", "))
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "I      = {}", self.ideal)?;
        if self.signature.is_unit() {
            writeln!(f, "sgn(I) = R")?;
        } else {
            writeln!(f, "sgn(I) = {}", self.signature)?;
        }
        writeln!(f, "field  = {}", self.field)?;
        for r in self.invariants() {
            write_ring(f, r)?;
        }
        write_primes(f, "R/I", &self.ideal_ass)?;
        if !self.signature.is_unit() {
            write_primes(f, "R/sgn(I)", &self.signature_ass)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
