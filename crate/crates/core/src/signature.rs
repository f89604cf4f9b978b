//! The signature operator and the gap-closing procedure that reaches it.
//!
//! The signature of an ideal replaces every row of its incidence matrix by
//! the ranks of the row's entries among the row's distinct values. For
//! ideals of height at least two the same ideal is reached by repeatedly
//! closing the lowest gap of one variable at a time ([`shift_step`]). Each
//! closing step has a companion [`polarization_step`] in one more variable;
//! chaining those gives the full weighted polarization recorded in a
//! [`PolarizationTrace`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{IncidenceMatrix, Monomial, MonomialIdeal};

/// Signature of a single row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowSignature {
    pub input_row: Vec<u32>,
    /// The distinct entries, ascending.
    pub distinct_sorted: Vec<u32>,
    /// `positions[i]` is the rank of `input_row[i]` in `distinct_sorted`.
    pub positions: Vec<u32>,
    /// Distinct entries are exactly `0, 1, ..., r`.
    pub tight: bool,
}

pub fn row_signature(row: &[u32]) -> Result<RowSignature> {
    if row.is_empty() {
        return Err(Error::EmptyRow);
    }
    let mut distinct = row.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let positions = row
        .iter()
        .map(|c| distinct.binary_search(c).expect("entry present") as u32)
        .collect();
    let tight = distinct
        .iter()
        .enumerate()
        .all(|(k, &m)| u64::from(m) == k as u64);
    Ok(RowSignature {
        input_row: row.to_vec(),
        distinct_sorted: distinct,
        positions,
        tight,
    })
}

/// Row-wise signature of a matrix.
pub fn signature_matrix(a: &IncidenceMatrix) -> IncidenceMatrix {
    let rows = (0..a.rows())
        .map(|i| {
            row_signature(a.row(i))
                .map(|s| s.positions)
                .unwrap_or_default()
        })
        .collect();
    IncidenceMatrix::from_rows(rows).expect("rows have equal length")
}

/// Every row tight: the matrix is its own signature.
pub fn is_tight(a: &IncidenceMatrix) -> bool {
    (0..a.rows()).all(|i| a.cols() == 0 || row_signature(a.row(i)).is_ok_and(|s| s.tight))
}

/// `sgn(I)`. Principal ideals map to the unit ideal.
pub fn signature_of_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_principal() {
        return Ok(MonomialIdeal::unit(ideal.n()));
    }
    let a = ideal.incidence_matrix()?;
    Ok(signature_matrix(&a).to_ideal())
}

/// `true` iff `sgn(I) = I`.
pub fn is_signature_ideal(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(&signature_of_ideal(ideal)? == ideal)
}

/// One gap of the ideal with respect to a variable: all powers `0..=p` of the
/// variable occur among the generators, the next occurring power is
/// `q_1 >= p + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapDescriptor {
    pub variable: usize,
    pub p: u32,
    /// `gamma_blocks[j]` holds the generators in which the variable has
    /// exponent exactly `j`.
    pub gamma_blocks: Vec<Vec<Monomial>>,
    /// `(q_i, generator)` for generators with exponent `q_i > p`, sorted by
    /// `q_i`.
    pub epsilon_block: Vec<(u32, Monomial)>,
    /// `l_i = q_i - q_1 + p + 1`.
    pub shift_amounts: Vec<u32>,
}

impl GapDescriptor {
    pub fn q1(&self) -> u32 {
        self.epsilon_block[0].0
    }

    pub fn qs(&self) -> Vec<u32> {
        self.epsilon_block.iter().map(|(q, _)| *q).collect()
    }

    /// `q_1 - p`, the degree of the new polarization variable.
    pub fn weighted_degree(&self) -> u32 {
        self.q1() - self.p
    }

    fn matches(&self, ideal: &MonomialIdeal) -> bool {
        let v = self.variable;
        if v >= ideal.n() || self.gamma_blocks.len() != self.p as usize + 1 {
            return false;
        }
        let mut mine: Vec<Monomial> = Vec::new();
        for (j, block) in self.gamma_blocks.iter().enumerate() {
            if block.is_empty()
                || block
                    .iter()
                    .any(|g| g.n() != ideal.n() || g.exponent(v) != j as u32)
            {
                return false;
            }
            mine.extend(block.iter().cloned());
        }
        if self.epsilon_block.is_empty()
            || self.q1() < self.p + 2
            || self.shift_amounts.len() != self.epsilon_block.len()
        {
            return false;
        }
        for (q, g) in &self.epsilon_block {
            if g.n() != ideal.n() || g.exponent(v) != *q {
                return false;
            }
            mine.push(g.clone());
        }
        mine.sort();
        mine == ideal.generators()
    }
}

fn check_height_two(ideal: &MonomialIdeal) -> Result<()> {
    ideal.ensure_proper_nonzero()?;
    if ideal.every_row_has_zero() {
        Ok(())
    } else {
        Err(Error::HeightBelowTwo(1))
    }
}

/// The lowest gap of `ideal` in `variable`, or `None` when that row of the
/// incidence matrix is tight (including when the variable does not occur).
pub fn find_gap(ideal: &MonomialIdeal, variable: usize) -> Result<Option<GapDescriptor>> {
    if variable >= ideal.n() {
        return Err(Error::VariableOutOfRange {
            index: variable,
            n: ideal.n(),
        });
    }
    check_height_two(ideal)?;
    let mut powers: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| g.exponent(variable))
        .collect();
    powers.sort_unstable();
    powers.dedup();
    // powers[0] == 0 by the height condition.
    let mut p = 0u32;
    let mut next = None;
    for &e in &powers[1..] {
        if e == p + 1 {
            p = e;
        } else {
            next = Some(e);
            break;
        }
    }
    let Some(q1) = next else {
        return Ok(None);
    };
    let mut gamma_blocks = vec![Vec::new(); p as usize + 1];
    let mut epsilon_block = Vec::new();
    for g in ideal.generators() {
        let e = g.exponent(variable);
        if e <= p {
            gamma_blocks[e as usize].push(g.clone());
        } else {
            epsilon_block.push((e, g.clone()));
        }
    }
    epsilon_block.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let shift_amounts = epsilon_block.iter().map(|(q, _)| q - q1 + p + 1).collect();
    Ok(Some(GapDescriptor {
        variable,
        p,
        gamma_blocks,
        epsilon_block,
        shift_amounts,
    }))
}

/// `I_sft`: lowers the exponent block `x^{q_i}` to `x^{l_i}`, closing the gap.
pub fn shift_step(ideal: &MonomialIdeal, gap: &GapDescriptor) -> Result<MonomialIdeal> {
    if !gap.matches(ideal) {
        return Err(Error::StaleGap);
    }
    let v = gap.variable;
    let mut gens: Vec<Monomial> = gap.gamma_blocks.iter().flatten().cloned().collect();
    for ((_, g), &l) in gap.epsilon_block.iter().zip(&gap.shift_amounts) {
        let mut e = g.exponents().to_vec();
        e[v] = l;
        gens.push(Monomial::new(e));
    }
    let count = gens.len();
    let shifted = MonomialIdeal::minimalize(ideal.n(), gens)?;
    debug_assert_eq!(shifted.len(), count, "shifted generators stay minimal");
    Ok(shifted)
}

/// `I_pol` in `n + 1` variables: the new variable (index `n`) replaces
/// `x^{q_1 - p}` inside the high exponent block. Returns the ideal and the
/// weighted degree `q_1 - p` of the new variable.
pub fn polarization_step(
    ideal: &MonomialIdeal,
    gap: &GapDescriptor,
) -> Result<(MonomialIdeal, u32)> {
    if !gap.matches(ideal) {
        return Err(Error::StaleGap);
    }
    let v = gap.variable;
    let d = gap.weighted_degree();
    let n = ideal.n();
    let mut gens: Vec<Monomial> = gap
        .gamma_blocks
        .iter()
        .flatten()
        .map(|g| g.extend(1))
        .collect();
    for (q, g) in &gap.epsilon_block {
        let mut e = g.extend(1).into_exponents();
        e[v] = q - d;
        e[n] = 1;
        gens.push(Monomial::new(e));
    }
    Ok((MonomialIdeal::minimalize(n + 1, gens)?, d))
}

/// One gap-closing step of a full trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// Zero-based index of the variable whose gap is closed.
    pub variable: usize,
    pub p: u32,
    pub q: Vec<u32>,
    /// One-based index `k` of the new variable `z_k`.
    pub new_var: usize,
    /// `d_k = q_1 - p`.
    pub weighted_degree: u32,
    /// The ideal before the step.
    pub ideal: MonomialIdeal,
    /// Partial polarization in `n + 1` variables (new variable last).
    pub polarized: MonomialIdeal,
    pub shifted: MonomialIdeal,
}

impl TraceStep {
    pub fn q1(&self) -> u32 {
        self.q[0]
    }
}

/// A new variable and the monomial it specializes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Substitution {
    /// One-based `k` of `z_k`.
    pub new_var: usize,
    /// Zero-based index of the original variable.
    pub variable: usize,
    pub exponent: u32,
}

/// Record of the recursive gap-closing procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolarizationTrace {
    pub n: usize,
    pub original: MonomialIdeal,
    pub steps: Vec<TraceStep>,
    /// Full weighted polarization in `n + r` variables; `z_k` has index
    /// `n + k - 1`.
    pub polarized: MonomialIdeal,
    /// `z_k -> x_{j_k}^{d_k}`.
    pub f_sequence: Vec<Substitution>,
    /// `z_k -> x_{j_k}`.
    pub g_sequence: Vec<Substitution>,
    /// Endpoint of the shift chain.
    pub signature: MonomialIdeal,
}

impl PolarizationTrace {
    pub fn extra_vars(&self) -> usize {
        self.steps.len()
    }

    pub fn weighted_degrees(&self) -> Vec<u32> {
        self.steps.iter().map(|s| s.weighted_degree).collect()
    }

    /// Grading on the polarized ring giving `z_k` degree `d_k`.
    pub fn weights(&self) -> Vec<u64> {
        let mut w = vec![1; self.n];
        w.extend(self.steps.iter().map(|s| u64::from(s.weighted_degree)));
        w
    }

    /// Variable names `x1..xn, z1..zr` for display.
    pub fn variable_name(&self, index: usize) -> String {
        variable_name(self.n, index)
    }

    /// Substitutes `f_sequence` into the full polarization.
    pub fn specialize_f(&self) -> Result<MonomialIdeal> {
        specialize(&self.polarized, self.n, &self.f_sequence)
    }

    /// Substitutes `g_sequence` into the full polarization.
    pub fn specialize_g(&self) -> Result<MonomialIdeal> {
        specialize(&self.polarized, self.n, &self.g_sequence)
    }
}

/// Names `x1..xn` followed by `z1, z2, ...`.
pub fn variable_name(n: usize, index: usize) -> String {
    if index < n {
        format!("x{}", index + 1)
    } else {
        format!("z{}", index - n + 1)
    }
}

/// Maps an ideal in `n + r` variables back to `n` variables by
/// `z_k -> x_j^e`.
pub fn specialize(ideal: &MonomialIdeal, n: usize, subs: &[Substitution]) -> Result<MonomialIdeal> {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e: Vec<u32> = g.exponents()[..n].to_vec();
            for s in subs {
                let z = g.exponent(n + s.new_var - 1);
                let add = z.checked_mul(s.exponent).ok_or(Error::ExponentOverflow)?;
                e[s.variable] = e[s.variable]
                    .checked_add(add)
                    .ok_or(Error::ExponentOverflow)?;
            }
            Ok(Monomial::new(e))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(n, gens)
}

/// Closes every gap, variables in ascending order, each variable until its
/// row is tight.
pub fn full_polarization_trace(ideal: &MonomialIdeal) -> Result<PolarizationTrace> {
    check_height_two(ideal)?;
    let n = ideal.n();
    let mut current = ideal.clone();
    // Generators of the running polarization, kept in bijection with G(current)
    // through the g-specialization.
    let mut full: Vec<Vec<u32>> = current
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect();
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut f_sequence = Vec::new();
    let mut g_sequence = Vec::new();

    for v in 0..n {
        while let Some(gap) = find_gap(&current, v)? {
            let k = steps.len() + 1;
            let d = gap.weighted_degree();
            let q1 = gap.q1();
            let (polarized, _) = polarization_step(&current, &gap)?;
            let shifted = shift_step(&current, &gap)?;

            for g in full.iter_mut() {
                let earlier: u32 = g_sequence
                    .iter()
                    .filter(|s: &&Substitution| s.variable == v)
                    .map(|s| g[n + s.new_var - 1])
                    .sum();
                let image = g[v] + earlier;
                g.push(0);
                if image >= q1 {
                    debug_assert!(g[v] >= d);
                    g[v] -= d;
                    g[n + k - 1] = 1;
                }
            }
            f_sequence.push(Substitution {
                new_var: k,
                variable: v,
                exponent: d,
            });
            g_sequence.push(Substitution {
                new_var: k,
                variable: v,
                exponent: 1,
            });
            steps.push(TraceStep {
                variable: v,
                p: gap.p,
                q: gap.qs(),
                new_var: k,
                weighted_degree: d,
                ideal: current.clone(),
                polarized,
                shifted: shifted.clone(),
            });
            current = shifted;
        }
    }

    let r = steps.len();
    let polarized = MonomialIdeal::minimalize(n + r, full.into_iter().map(Monomial::new))?;
    Ok(PolarizationTrace {
        n,
        original: ideal.clone(),
        steps,
        polarized,
        f_sequence,
        g_sequence,
        signature: current,
    })
}

/// All `n x q` signature matrices with every variable used, up to column
/// permutation, in ascending order of their (lexicographically sorted)
/// column lists. For `q = 1` the only class is the zero column (the unit
/// ideal).
pub fn enumerate_signature_matrices(n: usize, q: usize) -> Vec<IncidenceMatrix> {
    if n == 0 || q == 0 {
        return Vec::new();
    }
    if q == 1 {
        return vec![IncidenceMatrix::from_columns(n, &[Monomial::one(n)])];
    }
    let columns = all_columns(n, q as u32);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(q);
    extend_antichain(&columns, q, 0, &mut chosen, &mut out);
    out
}

fn all_columns(n: usize, q: u32) -> Vec<Monomial> {
    let mut cols = vec![Vec::new()];
    for _ in 0..n {
        cols = cols
            .into_iter()
            .flat_map(|c: Vec<u32>| {
                (0..q).map(move |e| {
                    let mut c = c.clone();
                    c.push(e);
                    c
                })
            })
            .collect();
    }
    // Lexicographic order on exponent vectors.
    cols.sort();
    cols.into_iter().map(Monomial::new).collect()
}

fn extend_antichain(
    columns: &[Monomial],
    q: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<IncidenceMatrix>,
) {
    if chosen.len() == q {
        let cols: Vec<Monomial> = chosen.iter().map(|&i| columns[i].clone()).collect();
        let n = cols[0].n();
        let a = IncidenceMatrix::from_columns(n, &cols);
        let rows_ok = (0..n).all(|i| {
            let s = row_signature(a.row(i)).expect("nonempty");
            s.tight && s.distinct_sorted.len() > 1
        });
        if rows_ok {
            out.push(a);
        }
        return;
    }
    let remaining = q - chosen.len();
    for i in start..columns.len() {
        if columns.len() - i < remaining {
            break;
        }
        let c = &columns[i];
        if chosen
            .iter()
            .all(|&j| !columns[j].divides(c) && !c.divides(&columns[j]))
        {
            chosen.push(i);
            extend_antichain(columns, q, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    fn example() -> MonomialIdeal {
        ideal(
            4,
            &[
                &[1, 1, 2, 0],
                &[6, 0, 7, 0],
                &[0, 3, 0, 1],
                &[0, 1, 3, 1],
                &[0, 1, 0, 3],
            ],
        )
    }

    fn one_gap() -> MonomialIdeal {
        ideal(3, &[&[0, 3, 0], &[1, 2, 0], &[3, 0, 2], &[4, 1, 1]])
    }

    #[test]
    fn row_signature_examples() {
        assert_eq!(
            row_signature(&[1, 6, 0, 0, 0]).unwrap().positions,
            vec![1, 2, 0, 0, 0]
        );
        assert_eq!(
            row_signature(&[0, 1, 3, 4]).unwrap().positions,
            vec![0, 1, 2, 3]
        );
        let z = row_signature(&[0, 0, 0]).unwrap();
        assert_eq!(z.positions, vec![0, 0, 0]);
        assert!(z.tight);
        assert!(!row_signature(&[1, 6, 0]).unwrap().tight);
        assert!(!row_signature(&[1, 2]).unwrap().tight);
        assert_eq!(row_signature(&[]).unwrap_err(), Error::EmptyRow);
    }

    #[test]
    fn row_signature_is_idempotent() {
        let s = row_signature(&[5, 9, 5, 0, 11]).unwrap();
        assert_eq!(row_signature(&s.positions).unwrap().positions, s.positions);
    }

    #[test]
    fn signature_of_example() {
        let expected = ideal(
            4,
            &[
                &[1, 1, 1, 0],
                &[2, 0, 3, 0],
                &[0, 2, 0, 1],
                &[0, 1, 2, 1],
                &[0, 1, 0, 2],
            ],
        );
        assert_eq!(signature_of_ideal(&example()).unwrap(), expected);
    }

    #[test]
    fn signature_of_principal_is_unit() {
        assert!(signature_of_ideal(&ideal(3, &[&[1, 1, 1]]))
            .unwrap()
            .is_unit());
        assert_eq!(
            signature_of_ideal(&MonomialIdeal::zero(3)).unwrap_err(),
            Error::ZeroIdeal
        );
    }

    #[test]
    fn squarefree_height_two_is_fixed() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(signature_of_ideal(&i).unwrap(), i);
        let j = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(signature_of_ideal(&j).unwrap(), j);
    }

    #[test]
    fn squarefree_height_one_drops_the_common_variable() {
        // x2 divides every generator, so its row is constant.
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(
            signature_of_ideal(&i).unwrap(),
            ideal(3, &[&[1, 0, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn find_gap_one_gap_example() {
        let gap = find_gap(&one_gap(), 0).unwrap().unwrap();
        assert_eq!(gap.p, 1);
        assert_eq!(gap.qs(), vec![3, 4]);
        assert_eq!(gap.weighted_degree(), 2);
        assert_eq!(gap.shift_amounts, vec![2, 3]);
    }

    #[test]
    fn find_gap_absent_on_signature_ideals() {
        let s = signature_of_ideal(&example()).unwrap();
        for v in 0..4 {
            assert!(find_gap(&s, v).unwrap().is_none());
        }
    }

    #[test]
    fn find_gap_rejects_height_one() {
        let i = ideal(3, &[&[1, 1, 1], &[1, 2, 0]]);
        assert_eq!(find_gap(&i, 1).unwrap_err(), Error::HeightBelowTwo(1));
    }

    #[test]
    fn find_gap_absent_variable() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 2, 0]]);
        assert!(find_gap(&i, 2).unwrap().is_none());
    }

    #[test]
    fn one_gap_shift_and_polarization() {
        let i = one_gap();
        let gap = find_gap(&i, 0).unwrap().unwrap();
        let sft = shift_step(&i, &gap).unwrap();
        assert_eq!(
            sft,
            ideal(3, &[&[0, 3, 0], &[1, 2, 0], &[2, 0, 2], &[3, 1, 1]])
        );
        assert_eq!(sft, signature_of_ideal(&i).unwrap());
        let (pol, d) = polarization_step(&i, &gap).unwrap();
        assert_eq!(d, 2);
        // variables x1 x2 x3 x0
        assert_eq!(
            pol,
            ideal(
                4,
                &[&[0, 3, 0, 0], &[1, 2, 0, 0], &[1, 0, 2, 1], &[2, 1, 1, 1]]
            )
        );
    }

    #[test]
    fn stale_gap_is_rejected() {
        let i = one_gap();
        let gap = find_gap(&i, 0).unwrap().unwrap();
        assert_eq!(shift_step(&example(), &gap).unwrap_err(), Error::StaleGap);
        let sft = shift_step(&i, &gap).unwrap();
        assert_eq!(polarization_step(&sft, &gap).unwrap_err(), Error::StaleGap);
    }

    #[test]
    fn example_trace() {
        let t = full_polarization_trace(&example()).unwrap();
        assert_eq!(t.extra_vars(), 5);
        assert_eq!(t.weighted_degrees(), vec![5, 2, 2, 4, 2]);
        // (z2 x2 x4, x1 x2 z3, x2 z3 x3 x4, z1 x1 z3 z4 x3, x2 x4 z5)
        let expected = ideal(
            9,
            &[
                &[0, 1, 0, 1, 0, 1, 0, 0, 0],
                &[1, 1, 0, 0, 0, 0, 1, 0, 0],
                &[0, 1, 1, 1, 0, 0, 1, 0, 0],
                &[1, 0, 1, 0, 1, 0, 1, 1, 0],
                &[0, 1, 0, 1, 0, 0, 0, 0, 1],
            ],
        );
        assert_eq!(t.polarized, expected);
        assert_eq!(t.specialize_f().unwrap(), example());
        assert_eq!(
            t.specialize_g().unwrap(),
            signature_of_ideal(&example()).unwrap()
        );
        assert_eq!(t.signature, signature_of_ideal(&example()).unwrap());
        let p_q1: Vec<_> = t.steps.iter().map(|s| (s.variable, s.p, s.q1())).collect();
        assert_eq!(
            p_q1,
            vec![(0, 1, 6), (1, 1, 3), (2, 0, 2), (2, 2, 6), (3, 1, 3)]
        );
    }

    #[test]
    fn squarefree_trace_is_empty() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let t = full_polarization_trace(&i).unwrap();
        assert_eq!(t.extra_vars(), 0);
        assert_eq!(t.polarized, i);
        assert!(t.f_sequence.is_empty() && t.g_sequence.is_empty());
    }

    #[test]
    fn enumerate_q1_is_unit_class() {
        let e = enumerate_signature_matrices(3, 1);
        assert_eq!(e.len(), 1);
        assert!(e[0].to_ideal().is_unit());
    }

    #[test]
    fn enumerate_2x2_matches_brute_force() {
        // Oracle: all 16 matrices over {0,1}, filtered by the definition.
        let mut oracle = Vec::new();
        for bits in 0u32..16 {
            let e: Vec<u32> = (0..4).map(|k| (bits >> k) & 1).collect();
            let a = IncidenceMatrix::from_rows(vec![e[0..2].to_vec(), e[2..4].to_vec()]).unwrap();
            let rows_ok = (0..2).all(|i| {
                let s = row_signature(a.row(i)).unwrap();
                s.tight && s.distinct_sorted.len() > 1
            });
            if rows_ok && a.columns_form_antichain() && a.column(0) != a.column(1) {
                let c = a.column_canonical();
                if !oracle.contains(&c) {
                    oracle.push(c);
                }
            }
        }
        oracle.sort_by_key(|a| {
            a.columns()
                .into_iter()
                .map(Monomial::into_exponents)
                .collect::<Vec<_>>()
        });
        let got = enumerate_signature_matrices(2, 2);
        assert_eq!(got, oracle);
        // (x1, x2) is the only class.
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn enumeration_respects_bound() {
        for (n, q) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let e = enumerate_signature_matrices(n, q);
            assert!((e.len() as u64) <= (q as u64).pow((n * q) as u32));
            for a in &e {
                assert!(is_tight(a));
                assert!(a.columns_form_antichain());
                assert_eq!(&a.column_canonical(), a);
            }
        }
    }
}
