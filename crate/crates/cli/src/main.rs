//! `monosig`: signatures, traces and invariants of monomial ideals.
//!
//! Exit status: 0 on success, 1 when a verification finds a counterexample,
//! 2 on usage or parse errors. `MONOSIG_WORKERS` sets the number of worker
//! threads for batch commands.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use monosig::harness::classify::{ideal_inputs, matrix_inputs};
use monosig::harness::format::{
    parse_ideal_batch, parse_matrix_batch, serialize_ideal, serialize_matrix,
};
use monosig::harness::report::JsonReport;
use monosig::harness::trace::StepReport;
use monosig::harness::{
    invariant_report, run_classify, run_trace, run_verify, verify_ideals, ClassFilter, Property,
    TraceOutcome, VerifyConfig,
};
use monosig::signature::signature_matrix;
use monosig::{
    associated_primes, enumerate_signature_matrices, is_unmixed, minimal_primes, v_witnesses,
    Field, IncidenceMatrix, MonomialIdeal,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "monosig", version, about = "Signatures of monomial ideals")]
struct Cli {
    /// Coefficient field: `q` or `p=<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: Field,

    /// Emit JSON (one object per input document).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signature matrix and signature ideal.
    Sgn {
        /// Ideal document, or `-` for standard input.
        file: PathBuf,
        /// Read matrix documents instead of ideal documents.
        #[arg(long)]
        matrix: bool,
    },
    /// Gap-closing trace with per-step invariants.
    Trace { file: PathBuf },
    /// Invariants of R/I and R/sgn(I).
    Invariants {
        file: PathBuf,
        /// Comma-separated positive variable weights for weighted regularity.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u64>>,
    },
    /// Associated and minimal primes.
    Ass { file: PathBuf },
    /// v-number with a witness for every associated prime.
    Vnum { file: PathBuf },
    /// Cohen-Macaulay / Gorenstein classification of a batch.
    Classify {
        file: PathBuf,
        #[arg(long)]
        matrix: bool,
        /// Keep only entries that are `cm` or `gorenstein`.
        #[arg(long)]
        filter: Option<ClassFilter>,
    },
    /// Check a property on random ideals, or on the ideals in `--input`.
    Verify {
        /// Property id, or `list`.
        property: String,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        q_max: usize,
        #[arg(long, default_value_t = 6)]
        exp_max: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// All n x q signature matrices up to column order.
    Enumerate { n: usize, q: usize },
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_ideals(path: &PathBuf) -> Result<Vec<MonomialIdeal>> {
    let text = read_input(path)?;
    let docs = parse_ideal_batch(&text);
    if docs.is_empty() {
        bail!("{}: no ideal documents", path.display());
    }
    docs.into_iter()
        .map(|d| {
            d.map(|d| d.to_ideal())
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
        })
        .collect()
}

fn emit(out: &mut impl Write, value: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn primes_json(primes: &[monosig::MonomialPrime]) -> Vec<Vec<usize>> {
    primes
        .iter()
        .map(|p| p.variables().iter().map(|v| v + 1).collect())
        .collect()
}

/// Returns whether every verification passed.
fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    let field = cli.field;
    match cli.command {
        Command::Sgn { file, matrix } => {
            let text = read_input(&file)?;
            let matrices = if matrix {
                parse_matrix_batch(&text)
                    .into_iter()
                    .map(|d| d.map(|d| d.matrix))
                    .collect::<std::result::Result<Vec<_>, _>>()?
            } else {
                // Columns keep the document's generator order when the listed
                // generators are already minimal.
                let mut v = Vec::new();
                for d in parse_ideal_batch(&text) {
                    let d = d.map_err(|e| anyhow::anyhow!("{}: {e}", file.display()))?;
                    let listed = IncidenceMatrix::from_columns(d.n, &d.monomials);
                    let ideal = d.to_ideal();
                    if listed.cols() == ideal.len() && listed.columns_form_antichain() {
                        v.push(listed);
                    } else {
                        v.push(ideal.incidence_matrix()?);
                    }
                }
                v
            };
            for a in matrices {
                let s = signature_matrix(&a);
                let ideal = s.to_ideal();
                if cli.json {
                    emit(
                        out,
                        &json!({
                            "matrix": a.row_vecs(),
                            "signature_matrix": s.row_vecs(),
                            "signature": ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
                        }),
                    )?;
                } else {
                    writeln!(out, "sgn(A) =\n{}", indent(&serialize_matrix(&s)))?;
                    if ideal.is_unit() {
                        writeln!(out, "sgn(I) = R")?;
                    } else {
                        writeln!(out, "sgn(I) = {ideal}")?;
                    }
                    write!(out, "{}", serialize_ideal(&ideal))?;
                }
            }
        }
        Command::Trace { file } => {
            for ideal in read_ideals(&file)? {
                match run_trace(&ideal, field)? {
                    TraceOutcome::Principal => {
                        if cli.json {
                            let report = invariant_report(&ideal, field, None)?;
                            emit(out, &JsonReport::<StepReport>::new(&report, Vec::new()))?;
                        } else {
                            writeln!(out, "I = {ideal}\nsgn(I) = R")?;
                        }
                    }
                    TraceOutcome::Trace(t) => {
                        if cli.json {
                            let report = invariant_report(&ideal, field, None)?;
                            let mut j = JsonReport::new(&report, t.steps.clone());
                            j.polarization = Some(t.polarization_summary());
                            emit(out, &j)?;
                        } else {
                            write!(out, "{t}")?;
                        }
                    }
                }
            }
        }
        Command::Invariants { file, weights } => {
            for ideal in read_ideals(&file)? {
                let report = invariant_report(&ideal, field, weights.as_deref())?;
                if cli.json {
                    emit(out, &JsonReport::<StepReport>::new(&report, Vec::new()))?;
                } else {
                    write!(out, "{report}")?;
                }
            }
        }
        Command::Ass { file } => {
            for ideal in read_ideals(&file)? {
                let ass = associated_primes(&ideal)?;
                let min = minimal_primes(&ideal)?;
                let unmixed = is_unmixed(&ideal)?;
                if cli.json {
                    emit(
                        out,
                        &json!({
                            "ideal": ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
                            "ass": primes_json(&ass),
                            "minimal": primes_json(&min),
                            "unmixed": unmixed,
                        }),
                    )?;
                } else {
                    writeln!(out, "I = {ideal}")?;
                    let show = |ps: &[monosig::MonomialPrime]| {
                        ps.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    writeln!(out, "Ass(I) = {{{}}}", show(&ass))?;
                    writeln!(out, "Min(I) = {{{}}}", show(&min))?;
                    writeln!(out, "unmixed = {unmixed}")?;
                }
            }
        }
        Command::Vnum { file } => {
            for ideal in read_ideals(&file)? {
                let ws = v_witnesses(&ideal)?;
                let v = ws.iter().map(|w| w.degree).min().unwrap_or(0);
                if cli.json {
                    let list: Vec<_> = ws
                        .iter()
                        .map(|w| json!({
                            "prime": w.prime.variables().iter().map(|x| x + 1).collect::<Vec<_>>(),
                            "witness": w.witness.exponents(),
                            "degree": w.degree,
                        }))
                        .collect();
                    emit(out, &json!({ "v": v, "witnesses": list }))?;
                } else {
                    writeln!(out, "I = {ideal}")?;
                    for w in &ws {
                        writeln!(
                            out,
                            "  (I : {}) = {}  degree {}",
                            w.witness, w.prime, w.degree
                        )?;
                    }
                    writeln!(out, "v(I) = {v}")?;
                }
            }
        }
        Command::Classify {
            file,
            matrix,
            filter,
        } => {
            let text = read_input(&file)?;
            let inputs = if matrix {
                matrix_inputs(&text)
            } else {
                ideal_inputs(&text)
            };
            let report = run_classify(inputs, filter, field);
            if cli.json {
                emit(out, &report)?;
            } else {
                write!(out, "{report}")?;
            }
            if !report.errors.is_empty() {
                bail!(
                    "{} entries failed to parse or classify",
                    report.errors.len()
                );
            }
        }
        Command::Verify {
            property,
            count,
            n_max,
            q_max,
            exp_max,
            seed,
            input,
        } => {
            if property == "list" {
                for p in Property::ALL {
                    writeln!(out, "{:<24} {}", p.id(), p.description())?;
                }
                return Ok(true);
            }
            let property: Property = property.parse()?;
            let cfg = VerifyConfig {
                count,
                n_max,
                q_max,
                exp_max,
                seed,
                field,
            };
            let report = match input {
                Some(path) => verify_ideals(property, &read_ideals(&path)?, &cfg),
                None => run_verify(property, &cfg),
            };
            if cli.json {
                emit(out, &report)?;
            } else {
                write!(out, "{report}")?;
            }
            return Ok(report.failures.is_empty());
        }
        Command::Enumerate { n, q } => {
            let all = enumerate_signature_matrices(n, q);
            if cli.json {
                let list: Vec<_> = all.iter().map(|a| a.row_vecs()).collect();
                emit(
                    out,
                    &json!({ "n": n, "q": q, "count": all.len(), "matrices": list }),
                )?;
            } else {
                writeln!(out, "# {} signature matrices of size {n}x{q}", all.len())?;
                for a in &all {
                    write!(out, "{}", serialize_matrix(a))?;
                }
            }
        }
    }
    Ok(true)
}

fn indent(s: &str) -> String {
    s.lines()
        .skip(1)
        .map(|l| format!("  {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn configure_workers() {
    if let Some(n) = std::env::var("MONOSIG_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // Only fails if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_workers();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
