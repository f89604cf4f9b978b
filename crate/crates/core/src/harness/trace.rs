//! Step-by-step report of the gap-closing procedure.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::harness::report::{json_i64, json_u64, PolarizationSummary, RingInvariants};
use crate::homology::{betti_table, Field};
use crate::monomial::{default_name, Monomial, MonomialIdeal};
use crate::signature::{full_polarization_trace, variable_name, PolarizationTrace};
use crate::vnumber::v_number;

/// One closed gap with the invariants on both sides of the step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    /// One-based variable index.
    pub variable: usize,
    pub p: u32,
    pub q: Vec<u32>,
    pub weighted_degree: u32,
    pub substitution: String,
    pub ideal: Vec<Vec<u32>>,
    /// Exponent rows in `n + 1` variables, the new variable last.
    pub polarized: Vec<Vec<u32>>,
    pub shifted: Vec<Vec<u32>>,
    #[serde(serialize_with = "json_i64")]
    pub reg_ideal: i64,
    #[serde(serialize_with = "json_i64")]
    pub reg_shifted: i64,
    #[serde(serialize_with = "json_i64")]
    pub reg_polarized: i64,
    #[serde(serialize_with = "json_u64")]
    pub v_ideal: u64,
    #[serde(serialize_with = "json_u64")]
    pub v_shifted: u64,
    #[serde(skip)]
    ideals: [MonomialIdeal; 3],
}

impl StepReport {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideals[0]
    }

    pub fn polarized_ideal(&self) -> &MonomialIdeal {
        &self.ideals[1]
    }

    pub fn shifted_ideal(&self) -> &MonomialIdeal {
        &self.ideals[2]
    }

    pub fn q1(&self) -> u32 {
        self.q[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    pub field: Field,
    /// The ideal the procedure ran on (`L` after a height-one reduction).
    pub input: MonomialIdeal,
    pub trace: PolarizationTrace,
    pub steps: Vec<StepReport>,
    pub summary: Vec<RingInvariants>,
    pub notes: Vec<String>,
}

impl TraceReport {
    pub fn polarization_summary(&self) -> PolarizationSummary {
        PolarizationSummary {
            polarized: rows(&self.trace.polarized),
            weighted_degrees: self.trace.weighted_degrees(),
            invariants: self.summary.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceOutcome {
    /// Principal ideals have signature `R` and no trace.
    Principal,
    Trace(Box<TraceReport>),
}

fn rows(i: &MonomialIdeal) -> Vec<Vec<u32>> {
    i.generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

fn reg(i: &MonomialIdeal, field: Field) -> Result<i64> {
    Ok(betti_table(i, field)?.regularity())
}

/// Runs the full polarization trace and evaluates `reg` and `v` around every
/// step. Ideals of height one are first divided by the gcd of their
/// generators, which leaves the signature unchanged.
pub fn run_trace(ideal: &MonomialIdeal, field: Field) -> Result<TraceOutcome> {
    ideal.ensure_proper_nonzero()?;
    if ideal.is_principal() {
        return Ok(TraceOutcome::Principal);
    }
    let mut notes = Vec::new();
    let input = if ideal.every_row_has_zero() {
        ideal.clone()
    } else {
        let (f, l) = ideal.gcd_factor()?;
        notes.push(format!(
            "height 1: tracing L = {l} where I = f*L with f = {f}"
        ));
        l
    };
    let trace = full_polarization_trace(&input)?;
    let n = trace.n;
    let mut steps = Vec::with_capacity(trace.steps.len());
    for s in &trace.steps {
        steps.push(StepReport {
            variable: s.variable + 1,
            p: s.p,
            q: s.q.clone(),
            weighted_degree: s.weighted_degree,
            substitution: format!(
                "x0 -> {}",
                Monomial::pure_power(n, s.variable, s.weighted_degree)
            ),
            ideal: rows(&s.ideal),
            polarized: rows(&s.polarized),
            shifted: rows(&s.shifted),
            reg_ideal: reg(&s.ideal, field)?,
            reg_shifted: reg(&s.shifted, field)?,
            reg_polarized: reg(&s.polarized, field)?,
            v_ideal: v_number(&s.ideal)?,
            v_shifted: v_number(&s.shifted)?,
            ideals: [s.ideal.clone(), s.polarized.clone(), s.shifted.clone()],
        });
    }
    let mut summary = vec![
        RingInvariants::compute("R/I", &input, field, None)?,
        RingInvariants::compute("R/sgn(I)", &trace.signature, field, None)?,
    ];
    summary.push(RingInvariants::compute(
        "S/I_pol",
        &trace.polarized,
        field,
        None,
    )?);
    Ok(TraceOutcome::Trace(Box::new(TraceReport {
        field,
        input,
        trace,
        steps,
        summary,
        notes,
    })))
}

/// Names for a partial polarization: `x1..xn`, then `x0`.
fn step_name(n: usize) -> impl Fn(usize) -> String + Copy {
    move |i| {
        if i < n {
            default_name(i)
        } else {
            "x0".to_string()
        }
    }
}

impl fmt::Display for TraceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.trace.n;
        writeln!(f, "I = {}", self.input)?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        for (k, s) in self.steps.iter().enumerate() {
            writeln!(f, "step {}: variable x{}", k + 1, s.variable)?;
            writeln!(f, "  G(I)     = {}", s.ideal())?;
            let qs: Vec<String> =
                s.q.iter()
                    .enumerate()
                    .map(|(i, q)| format!("q{}={q}", i + 1))
                    .collect();
            writeln!(
                f,
                "  p={}, {}, q1-p={}, {}",
                s.p,
                qs.join(", "),
                s.weighted_degree,
                s.substitution
            )?;
            writeln!(
                f,
                "  G(I_pol) = {}",
                s.polarized_ideal().display_with(step_name(n))
            )?;
            writeln!(f, "  G(I_sft) = {}", s.shifted_ideal())?;
            writeln!(
                f,
                "  reg(R/I)={}, reg(R/I_sft)={}, reg(R[x0]/I_pol)={}, v(I)={}, v(I_sft)={}",
                s.reg_ideal, s.reg_shifted, s.reg_polarized, s.v_ideal, s.v_shifted
            )?;
        }
        writeln!(f, "sgn(I) = {}", self.trace.signature)?;
        writeln!(
            f,
            "I_pol  = {}",
            self.trace
                .polarized
                .display_with(move |i| variable_name(n, i))
        )?;
        let d: Vec<String> = self
            .trace
            .weighted_degrees()
            .iter()
            .map(u32::to_string)
            .collect();
        writeln!(f, "weighted degrees = ({})", d.join(","))?;
        for r in &self.summary {
            writeln!(
                f,
                "{:<9} dim={} depth={} pd={} reg={} v={} cm={} gorenstein={}",
                r.ring, r.dim, r.depth, r.pd, r.reg, r.v, r.cm, r.gorenstein
            )?;
        }
        Ok(())
    }
}
