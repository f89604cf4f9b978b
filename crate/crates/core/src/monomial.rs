//! Monomials, monomial ideals and incidence matrices.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set in
//! canonical order (total degree ascending; among equal degrees, `x1` before
//! `x2` before ...). Two equal ideals therefore compare equal structurally and
//! produce identical incidence matrices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `a` of the monomial `x^a = x1^a1 * ... * xn^an`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_{index+1}` (indices are zero-based).
    pub fn var(n: usize, index: usize) -> Self {
        Self::pure_power(n, index, 1)
    }

    pub fn pure_power(n: usize, index: usize, exponent: u32) -> Self {
        let mut e = vec![0; n];
        e[index] = exponent;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Degree under positive integer variable weights.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Exact quotient, `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Same monomial in a ring with `extra` additional variables appended.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat_n(0, extra));
        Monomial(e)
    }

    /// Render with custom variable names.
    pub fn display_with<'a, F>(&'a self, names: F) -> impl fmt::Display + 'a
    where
        F: Fn(usize) -> String + 'a,
    {
        DisplayWith { m: self, names }
    }
}

struct DisplayWith<'a, F> {
    m: &'a Monomial,
    names: F,
}

impl<F: Fn(usize) -> String> fmt::Display for DisplayWith<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&(self.names)(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Default variable name: `x1`, `x2`, ...
pub fn default_name(index: usize) -> String {
    format!("x{}", index + 1)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(default_name).fmt(f)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical monomial order: total degree ascending, then the larger exponent
/// of the earliest differing variable first (so `x1 < x2`, `x1*x2 < x1*x3`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal of `K[x1..xn]`, stored by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Reduces an arbitrary set of monomials to the minimal antichain, in
    /// canonical order.
    pub fn minimalize<I>(n: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = Vec::new();
        for m in monomials {
            if m.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.n(),
                });
            }
            all.push(m);
        }
        Ok(Self::from_checked(n, all))
    }

    /// `minimalize` for inputs already known to have length `n`.
    pub(crate) fn from_checked(n: usize, mut all: Vec<Monomial>) -> Self {
        all.sort();
        all.dedup();
        // After sorting by degree a divisor always precedes its multiples.
        let mut generators: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !generators.iter().any(|g| g.divides(&m)) {
                generators.push(m);
            }
        }
        MonomialIdeal { n, generators }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Monomial::one(n)],
        }
    }

    /// The prime `(x_i : i in variables)`.
    pub fn prime(n: usize, variables: &[usize]) -> Self {
        Self::from_checked(n, variables.iter().map(|&i| Monomial::var(n, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Rejects the zero and unit ideals.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_n(&self, m: &Monomial) -> Result<()> {
        if m.n() == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: m.n(),
            })
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_n(m)?;
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `true` iff `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains_unchecked(g))
    }

    /// The colon ideal `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_n(m)?;
        Ok(Self::from_checked(
            self.n,
            self.generators.iter().map(|g| g.colon(m)).collect(),
        ))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut lcms = Vec::with_capacity(self.len() * other.len());
        for a in &self.generators {
            for b in &other.generators {
                lcms.push(a.lcm(b));
            }
        }
        Ok(Self::from_checked(self.n, lcms))
    }

    /// The sum `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Self::from_checked(
            self.n,
            self.generators
                .iter()
                .chain(&other.generators)
                .cloned()
                .collect(),
        ))
    }

    /// `m * I`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_n(m)?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.checked_mul(m).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(self.n, gens))
    }

    pub fn lcm_of_generators(&self) -> Monomial {
        self.generators
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    /// `I = f * L` with `f = gcd(G(I))`.
    pub fn gcd_factor(&self) -> Result<(Monomial, MonomialIdeal)> {
        self.ensure_proper_nonzero()?;
        let f = self.generators[1..]
            .iter()
            .fold(self.generators[0].clone(), |acc, g| acc.gcd(g));
        let l = Self::from_checked(
            self.n,
            self.generators.iter().map(|g| g.colon(&f)).collect(),
        );
        Ok((f, l))
    }

    /// Every variable row of the incidence matrix has a zero entry, i.e. no
    /// variable divides all generators. For proper nonzero ideals this is
    /// `ht(I) >= 2`.
    pub fn every_row_has_zero(&self) -> bool {
        (0..self.n).all(|i| self.generators.iter().any(|g| g.exponent(i) == 0))
    }

    pub fn incidence_matrix(&self) -> Result<IncidenceMatrix> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::NoIncidenceMatrix);
        }
        Ok(IncidenceMatrix::from_columns(self.n, &self.generators))
    }

    /// Same generators in a ring with `extra` more variables.
    pub fn extend(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n + extra,
            generators: self.generators.iter().map(|g| g.extend(extra)).collect(),
        }
    }

    pub fn display_with<'a, F>(&'a self, names: F) -> impl fmt::Display + 'a
    where
        F: Fn(usize) -> String + Copy + 'a,
    {
        IdealDisplay { ideal: self, names }
    }
}

struct IdealDisplay<'a, F> {
    ideal: &'a MonomialIdeal,
    names: F,
}

impl<F: Fn(usize) -> String + Copy> fmt::Display for IdealDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.ideal.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            g.display_with(self.names).fmt(f)?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(default_name).fmt(f)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} variables", self.n)
    }
}

/// The `n x q` matrix whose columns are the exponent vectors of the
/// generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    /// Row-major.
    entries: Vec<u32>,
}

impl IncidenceMatrix {
    pub fn from_columns(rows: usize, columns: &[Monomial]) -> Self {
        let cols = columns.len();
        let mut entries = vec![0; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                entries[i * cols + j] = c.exponent(i);
            }
        }
        IncidenceMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        let q = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != q) {
            return Err(Error::DimensionMismatch {
                expected: q,
                found: bad.len(),
            });
        }
        Ok(IncidenceMatrix {
            rows: n,
            cols: q,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Monomial {
        Monomial((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> Vec<Monomial> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Columns pairwise incomparable under componentwise `<=`.
    pub fn columns_form_antichain(&self) -> bool {
        let cols = self.columns();
        cols.iter().enumerate().all(|(a, ca)| {
            cols.iter()
                .enumerate()
                .all(|(b, cb)| a == b || !ca.divides(cb))
        })
    }

    /// The ideal generated by the columns (minimalized).
    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_checked(self.rows, self.columns())
    }

    /// Columns sorted lexicographically: the representative of the matrix
    /// under column permutations.
    pub fn column_canonical(&self) -> IncidenceMatrix {
        let mut cols: Vec<Vec<u32>> = self
            .columns()
            .into_iter()
            .map(Monomial::into_exponents)
            .collect();
        cols.sort();
        let cols: Vec<Monomial> = cols.into_iter().map(Monomial).collect();
        IncidenceMatrix::from_columns(self.rows, &cols)
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.row_vecs())
    }
}
