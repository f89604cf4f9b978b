//! Plain-text ideal and matrix documents.
//!
//! An ideal document is a header line `n q [label]` followed by `q`
//! generator lines. A generator line is either `n` space-separated naturals
//! (an exponent row) or a symbolic monomial such as `x1*x3^2` (`1` for the
//! unit monomial when `n > 1`). A matrix document is a header `n q` followed
//! by `n` rows of `q` naturals, one row per variable. `#` starts a comment;
//! blank lines are ignored. Several documents may be concatenated.
//!
//! The canonical serialization writes minimal generators in canonical order
//! as exponent rows, so `serialize_ideal(parse_ideal(s)) == s` for canonical
//! `s`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::monomial::{IncidenceMatrix, Monomial, MonomialIdeal};

/// A parsed ideal document before minimalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub n: usize,
    pub monomials: Vec<Monomial>,
    pub label: Option<String>,
    /// One-based line of the header.
    pub line: usize,
}

impl IdealDocument {
    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.n, self.monomials.iter().cloned())
            .expect("parsed monomials have n variables")
    }
}

/// A parsed matrix document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: IncidenceMatrix,
    pub label: Option<String>,
    pub line: usize,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Content lines as `(line number, column offset, text)` with comments and
/// blank lines removed.
fn content_lines(text: &str) -> Vec<(usize, usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(k, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim_start();
            let offset = body.len() - trimmed.len();
            let trimmed = trimmed.trim_end();
            (!trimmed.is_empty()).then_some((k + 1, offset, trimmed))
        })
        .collect()
}

/// Whitespace-separated tokens with one-based columns.
fn tokens(offset: usize, s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((offset + b + 1, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((offset + b + 1, &s[b..]));
    }
    out
}

fn parse_natural(line: usize, column: usize, token: &str, what: &str) -> Result<u32> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(perr(
            line,
            column,
            format!("expected {what}, found `{token}`"),
        ));
    }
    token
        .parse::<u32>()
        .map_err(|_| perr(line, column, format!("{what} `{token}` overflows u32")))
}

fn parse_count(line: usize, column: usize, token: &str, what: &str) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(perr(
            line,
            column,
            format!("expected {what}, found `{token}`"),
        ));
    }
    token
        .parse::<usize>()
        .map_err(|_| perr(line, column, format!("{what} `{token}` is too large")))
}

struct Header {
    n: usize,
    q: usize,
    label: Option<String>,
}

fn parse_header(line: usize, offset: usize, s: &str) -> Result<Header> {
    let toks = tokens(offset, s);
    if toks.len() < 2 {
        return Err(perr(line, offset + 1, "expected header `n q [label]`"));
    }
    let n = parse_count(line, toks[0].0, toks[0].1, "variable count")?;
    if n == 0 {
        return Err(perr(line, toks[0].0, "variable count must be positive"));
    }
    let q = parse_count(line, toks[1].0, toks[1].1, "generator count")?;
    let label = (toks.len() > 2).then(|| {
        let start = toks[2].0 - 1 - offset;
        s[start..].to_string()
    });
    Ok(Header { n, q, label })
}

fn parse_symbolic(line: usize, offset: usize, n: usize, s: &str) -> Result<Monomial> {
    let mut e = vec![0u32; n];
    if s == "1" {
        return Ok(Monomial::new(e));
    }
    let mut pos = 0;
    for factor in s.split('*') {
        let column = offset + pos + 1;
        pos += factor.len() + 1;
        let (var, exp) = match factor.split_once('^') {
            Some((v, x)) => (v, Some(x)),
            None => (factor, None),
        };
        let Some(index) = var.strip_prefix('x') else {
            return Err(perr(line, column, format!("malformed factor `{factor}`")));
        };
        let k = parse_count(line, column + 1, index, "variable index")?;
        if k == 0 || k > n {
            return Err(perr(
                line,
                column,
                format!("variable x{k} out of range for n = {n}"),
            ));
        }
        let d = match exp {
            Some(x) => parse_natural(line, column + var.len() + 1, x, "exponent")?,
            None => 1,
        };
        e[k - 1] = e[k - 1]
            .checked_add(d)
            .ok_or_else(|| perr(line, column, "exponent overflow"))?;
    }
    Ok(Monomial::new(e))
}

fn parse_generator(line: usize, offset: usize, n: usize, s: &str) -> Result<Monomial> {
    let toks = tokens(offset, s);
    let numeric = toks
        .iter()
        .all(|(_, t)| t.bytes().all(|b| b.is_ascii_digit()));
    if numeric && !(toks.len() == 1 && n > 1 && toks[0].1 == "1") {
        if toks.len() != n {
            return Err(perr(
                line,
                offset + 1,
                format!("exponent row has {} entries, expected {n}", toks.len()),
            ));
        }
        let e = toks
            .iter()
            .map(|(c, t)| parse_natural(line, *c, t, "exponent"))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Monomial::new(e));
    }
    if toks.len() != 1 {
        return Err(perr(
            line,
            toks.get(1).map_or(offset + 1, |t| t.0),
            "symbolic monomials must not contain spaces",
        ));
    }
    parse_symbolic(line, offset, n, s)
}

/// Parses every document in `text`, one result per document. A malformed
/// body line fails its document only; parsing resumes after the `q` lines the
/// header announced.
pub fn parse_ideal_batch(text: &str) -> Vec<Result<IdealDocument>> {
    let lines = content_lines(text);
    let mut out = Vec::new();
    let mut k = 0;
    while k < lines.len() {
        let (line, offset, s) = lines[k];
        k += 1;
        let header = match parse_header(line, offset, s) {
            Ok(h) => h,
            Err(e) => {
                out.push(Err(e));
                continue;
            }
        };
        let mut monomials = Vec::with_capacity(header.q);
        let mut failure = None;
        for _ in 0..header.q {
            let Some(&(l, o, body)) = lines.get(k) else {
                failure.get_or_insert(perr(
                    line,
                    1,
                    format!(
                        "document announces {} generators, input ended early",
                        header.q
                    ),
                ));
                break;
            };
            k += 1;
            match parse_generator(l, o, header.n, body) {
                Ok(m) => monomials.push(m),
                Err(e) => {
                    failure.get_or_insert(e);
                }
            }
        }
        out.push(match failure {
            Some(e) => Err(e),
            None => Ok(IdealDocument {
                n: header.n,
                monomials,
                label: header.label,
                line,
            }),
        });
    }
    out
}

/// Parses a text holding exactly one ideal document.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut docs = parse_ideal_batch(text);
    match docs.len() {
        0 => Err(perr(1, 1, "empty document")),
        1 => docs.pop().expect("one document").map(|d| d.to_ideal()),
        _ => {
            let line = docs[1].as_ref().map_or(1, |d| d.line);
            Err(perr(line, 1, "expected a single ideal document"))
        }
    }
}

/// Canonical exponent-row form.
pub fn serialize_ideal(ideal: &MonomialIdeal) -> String {
    serialize_labelled(ideal, None)
}

pub fn serialize_labelled(ideal: &MonomialIdeal, label: Option<&str>) -> String {
    let mut s = format!("{} {}", ideal.n(), ideal.len());
    if let Some(l) = label {
        s.push(' ');
        s.push_str(l);
    }
    s.push('\n');
    for g in ideal.generators() {
        let row: Vec<String> = g.exponents().iter().map(u32::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// Symbolic form, one generator per line.
pub fn serialize_symbolic(ideal: &MonomialIdeal) -> String {
    let mut s = format!("{} {}\n", ideal.n(), ideal.len());
    for g in ideal.generators() {
        let _ = writeln!(s, "{g}");
    }
    s
}

/// Parses every matrix document in `text`.
pub fn parse_matrix_batch(text: &str) -> Vec<Result<MatrixDocument>> {
    let lines = content_lines(text);
    let mut out = Vec::new();
    let mut k = 0;
    while k < lines.len() {
        let (line, offset, s) = lines[k];
        k += 1;
        let header = match parse_header(line, offset, s) {
            Ok(h) => h,
            Err(e) => {
                out.push(Err(e));
                continue;
            }
        };
        if header.q == 0 {
            out.push(Err(perr(line, 1, "a matrix needs at least one column")));
            k += header.n;
            continue;
        }
        let mut rows = Vec::with_capacity(header.n);
        let mut failure = None;
        for _ in 0..header.n {
            let Some(&(l, o, body)) = lines.get(k) else {
                failure.get_or_insert(perr(
                    line,
                    1,
                    format!("matrix announces {} rows, input ended early", header.n),
                ));
                break;
            };
            k += 1;
            let toks = tokens(o, body);
            if toks.len() != header.q {
                failure.get_or_insert(perr(
                    l,
                    o + 1,
                    format!("row has {} entries, expected {}", toks.len(), header.q),
                ));
                continue;
            }
            match toks
                .iter()
                .map(|(c, t)| parse_natural(l, *c, t, "entry"))
                .collect::<Result<Vec<_>>>()
            {
                Ok(r) => rows.push(r),
                Err(e) => {
                    failure.get_or_insert(e);
                }
            }
        }
        out.push(match failure {
            Some(e) => Err(e),
            None => Ok(MatrixDocument {
                matrix: IncidenceMatrix::from_rows(rows).expect("rectangular rows"),
                label: header.label,
                line,
            }),
        });
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<IncidenceMatrix> {
    let mut docs = parse_matrix_batch(text);
    match docs.len() {
        0 => Err(perr(1, 1, "empty document")),
        1 => docs.pop().expect("one document").map(|d| d.matrix),
        _ => Err(perr(1, 1, "expected a single matrix document")),
    }
}

pub fn serialize_matrix(a: &IncidenceMatrix) -> String {
    let mut s = format!("{} {}\n", a.rows(), a.cols());
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(u32::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}
