//! Multigraded Betti numbers and the invariants read off them.
//!
//! `β_{i,a}(R/I) = dim H~_{i-2}(K^a(I))` for `i >= 1`, where `K^a(I)` is the
//! upper Koszul simplicial complex at the multidegree `a`. Only multidegrees
//! in the lcm lattice of the generators can carry nonzero Betti numbers, so
//! those are the only ones examined.

pub mod complex;
pub mod linalg;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::dimension_and_height;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

pub use complex::{
    all_reduced_homology, koszul_complex_at_degree, reduced_homology_rank,
    SimplicialComplexOnVariables,
};

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    /// `GF(p)`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2
            || p > u64::from(u32::MAX)
            || !(2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d))
        {
            return Err(Error::InvalidField(p));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("q"),
            Field::Prime(p) => write!(f, "p={p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `q` (rationals) or `p=<prime>`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let parse_err = || Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid field `{s}`; expected `q` or `p=<prime>`"),
        };
        let p = s.strip_prefix("p=").ok_or_else(parse_err)?;
        let p: u64 = p.parse().map_err(|_| parse_err())?;
        Field::prime(p)
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Multigraded Betti numbers of `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub field: Field,
    /// `(i, a) -> β_{i,a}`, nonzero entries only.
    pub entries: BTreeMap<(usize, Vec<u32>), u64>,
}

impl BettiTable {
    /// Projective dimension of `R/I`.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Total Betti number at homological index `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, r)| r)
            .sum()
    }

    /// Coarsely graded `b_{i,j}` with `j = |a|` (or the weighted degree).
    pub fn graded(&self, weights: Option<&[u64]>) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, a), r) in &self.entries {
            *out.entry((*i, degree(a, weights))).or_insert(0) += r;
        }
        out
    }

    /// `max{ j - i : b_{i,j} != 0 }`.
    pub fn regularity(&self) -> i64 {
        self.regularity_weighted(None)
    }

    pub fn regularity_weighted(&self, weights: Option<&[u64]>) -> i64 {
        self.entries
            .keys()
            .map(|(i, a)| degree(a, weights) as i64 - *i as i64)
            .max()
            .unwrap_or(0)
    }

    /// Sum of the Betti numbers at `pd`.
    pub fn cm_type(&self) -> u64 {
        self.total(self.pd())
    }

    /// Rows of `(i, a, β_{i,a})`.
    pub fn rows(&self) -> Vec<(usize, Vec<u32>, u64)> {
        self.entries
            .iter()
            .map(|((i, a), r)| (*i, a.clone(), *r))
            .collect()
    }
}

fn degree(a: &[u32], weights: Option<&[u64]>) -> u64 {
    match weights {
        None => a.iter().map(|&e| u64::from(e)).sum(),
        Some(w) => a.iter().zip(w).map(|(&e, &w)| u64::from(e) * w).sum(),
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;

        #[derive(Serialize)]
        struct Entry<'a> {
            i: usize,
            degree: &'a [u32],
            rank: u64,
        }
        let entries: Vec<Entry<'_>> = self
            .entries
            .iter()
            .map(|((i, a), r)| Entry {
                i: *i,
                degree: a,
                rank: *r,
            })
            .collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("pd", &self.pd())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl fmt::Display for BettiTable {
    /// Coarse Betti diagram in the usual `j - i` by `i` layout.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let graded = self.graded(None);
        let pd = self.pd();
        let reg = self.regularity().max(0) as u64;
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>5}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>5}", self.total(i))?;
        }
        writeln!(f)?;
        for row in 0..=reg {
            write!(f, "{:>5}:", row)?;
            for i in 0..=pd {
                let j = row + i as u64;
                match graded.get(&(i, j)) {
                    Some(b) => write!(f, " {b:>5}")?,
                    None => write!(f, " {:>5}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Distinct lcms of nonempty subsets of the generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut lattice: BTreeSet<Monomial> = BTreeSet::new();
    for g in ideal.generators() {
        let joined: Vec<Monomial> = lattice.iter().map(|l| l.lcm(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(joined);
    }
    lattice.into_iter().collect()
}

fn betti_at(ideal: &MonomialIdeal, a: &Monomial, field: Field) -> Vec<(usize, u64)> {
    let c = koszul_complex_at_degree(ideal, a);
    all_reduced_homology(&c, field)
        .into_iter()
        .map(|(d, r)| ((d + 2) as usize, r))
        .collect()
}

pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    ideal.ensure_proper_nonzero()?;
    let lattice = lcm_lattice(ideal);
    #[cfg(feature = "parallel")]
    let per_degree: Vec<(Monomial, Vec<(usize, u64)>)> = lattice
        .into_par_iter()
        .map(|a| {
            let b = betti_at(ideal, &a, field);
            (a, b)
        })
        .collect();
    #[cfg(not(feature = "parallel"))]
    let per_degree: Vec<(Monomial, Vec<(usize, u64)>)> = lattice
        .into_iter()
        .map(|a| {
            let b = betti_at(ideal, &a, field);
            (a, b)
        })
        .collect();

    let mut entries = BTreeMap::new();
    entries.insert((0, vec![0; ideal.n()]), 1);
    for (a, ranks) in per_degree {
        for (i, r) in ranks {
            entries.insert((i, a.exponents().to_vec()), r);
        }
    }
    Ok(BettiTable {
        n: ideal.n(),
        field,
        entries,
    })
}

/// Invariants of `R/I` derived from the Betti table and the height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologicalInvariants {
    pub n: usize,
    pub field: Field,
    pub height: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: i64,
    pub reg_weighted: Option<i64>,
    pub cm: bool,
    pub gorenstein: bool,
    #[serde(rename = "type")]
    pub cm_type: u64,
}

pub fn homological_invariants(
    ideal: &MonomialIdeal,
    field: Field,
    weights: Option<&[u64]>,
) -> Result<HomologicalInvariants> {
    if let Some(w) = weights {
        if w.len() != ideal.n() {
            return Err(Error::WeightLength {
                expected: ideal.n(),
                found: w.len(),
            });
        }
        if w.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
    }
    let table = betti_table(ideal, field)?;
    Ok(invariants_from_table(ideal, &table, weights))
}

pub(crate) fn invariants_from_table(
    ideal: &MonomialIdeal,
    table: &BettiTable,
    weights: Option<&[u64]>,
) -> HomologicalInvariants {
    let (height, dim) = dimension_and_height(ideal).expect("proper ideal");
    let pd = table.pd();
    let depth = ideal.n() - pd;
    let cm = depth == dim;
    let cm_type = table.cm_type();
    HomologicalInvariants {
        n: ideal.n(),
        field: table.field,
        height,
        dim,
        depth,
        pd,
        reg: table.regularity(),
        reg_weighted: weights.map(|w| table.regularity_weighted(Some(w))),
        cm,
        gorenstein: cm && cm_type == 1,
        cm_type,
    }
}

/// `depth(R/I)`.
pub fn depth(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    Ok(ideal.n() - betti_table(ideal, field)?.pd())
}

/// `reg(R/I)` in the standard grading.
pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    Ok(betti_table(ideal, field)?.regularity())
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

    #[test]
    fn principal_resolution() {
        let t = betti_table(&ideal(3, &[&[2, 1, 0]]), Field::Rationals).unwrap();
        assert_eq!(t.rows(), vec![(0, vec![0, 0, 0], 1), (1, vec![2, 1, 0], 1)]);
    }

    #[test]
    fn two_variable_koszul() {
        let t = betti_table(&ideal(2, &[&[1, 0], &[0, 1]]), Field::Rationals).unwrap();
        assert_eq!(
            t.rows(),
            vec![
                (0, vec![0, 0], 1),
                (1, vec![0, 1], 1),
                (1, vec![1, 0], 1),
                (2, vec![1, 1], 1)
            ]
        );
        assert_eq!((t.total(0), t.total(1), t.total(2)), (1, 2, 1));
    }

    #[test]
    fn example_pd_and_reg() {
        let t = betti_table(&example(), Field::Rationals).unwrap();
        assert_eq!(t.pd(), 4);
        assert_eq!(t.regularity(), 12);
    }

    #[test]
    fn example_invariants() {
        let inv = homological_invariants(&example(), Field::Rationals, None).unwrap();
        assert_eq!((inv.depth, inv.pd, inv.reg, inv.dim), (0, 4, 12, 2));
        assert!(!inv.cm);
        let s = crate::signature::signature_of_ideal(&example()).unwrap();
        let inv = homological_invariants(&s, Field::Rationals, None).unwrap();
        assert_eq!((inv.depth, inv.pd, inv.reg), (0, 4, 4));
    }

    #[test]
    fn maximal_ideal_is_gorenstein() {
        let inv = homological_invariants(
            &ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            Field::Rationals,
            None,
        )
        .unwrap();
        assert!(inv.cm && inv.gorenstein);
        assert_eq!(inv.cm_type, 1);
    }

    #[test]
    fn weighted_regularity() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let inv = homological_invariants(&i, Field::Rationals, Some(&[3, 1])).unwrap();
        assert_eq!(inv.reg, 0);
        // b_{2,(1,1)} has weighted degree 4.
        assert_eq!(inv.reg_weighted, Some(2));
        assert_eq!(
            homological_invariants(&i, Field::Rationals, Some(&[1])).unwrap_err(),
            Error::WeightLength {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            homological_invariants(&i, Field::Rationals, Some(&[0, 1])).unwrap_err(),
            Error::NonPositiveWeight
        );
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("p=7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("p=8".parse::<Field>().unwrap_err(), Error::InvalidField(8));
        assert!("z".parse::<Field>().is_err());
    }

    #[test]
    fn lcm_lattice_of_three_generators() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        // three generators and a single common lcm x1x2x3
        assert_eq!(lcm_lattice(&i).len(), 4);
    }

    #[test]
    fn characteristic_dependent_betti() {
        // Stanley-Reisner ideal of the six-vertex projective plane.
        let tris: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [2, 4, 5],
            [1, 3, 5],
        ];
        let mut nonfaces = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    if !tris
                        .iter()
                        .any(|t| t.contains(&a) && t.contains(&b) && t.contains(&c))
                    {
                        let mut e = vec![0; 6];
                        e[a] = 1;
                        e[b] = 1;
                        e[c] = 1;
                        nonfaces.push(Monomial::new(e));
                    }
                }
            }
        }
        let sr = MonomialIdeal::minimalize(6, nonfaces).unwrap();
        let q = homological_invariants(&sr, Field::Rationals, None).unwrap();
        let two = homological_invariants(&sr, Field::Prime(2), None).unwrap();
        assert!(q.cm);
        assert!(!two.cm);
    }
}
