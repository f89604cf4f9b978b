//! Irreducible decomposition, associated primes, height and dimension.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// The prime `(x_i : i in variables)`, variables zero-based and ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MonomialPrime {
    variables: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(mut variables: Vec<usize>) -> Self {
        variables.sort_unstable();
        variables.dedup();
        MonomialPrime { variables }
    }

    pub fn variables(&self) -> &[usize] {
        &self.variables
    }

    pub fn height(&self) -> usize {
        self.variables.len()
    }

    pub fn contains_variable(&self, index: usize) -> bool {
        self.variables.binary_search(&index).is_ok()
    }

    pub fn to_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::prime(n, &self.variables)
    }

    /// Recognizes an ideal generated by variables.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<MonomialPrime> {
        if ideal.is_zero() {
            return None;
        }
        let mut vars = Vec::with_capacity(ideal.len());
        for g in ideal.generators() {
            if g.degree() != 1 {
                return None;
            }
            vars.push(g.support()[0]);
        }
        Some(MonomialPrime::new(vars))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .variables
            .iter()
            .map(|i| format!("x{}", i + 1))
            .collect();
        write!(f, "({})", names.join(", "))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An irreducible monomial ideal `(x_i^{e_i} : i in keys)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IrreducibleComponent {
    pub pure_powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(self.pure_powers.keys().copied().collect())
    }

    pub fn to_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            n,
            self.pure_powers
                .iter()
                .map(|(&i, &e)| Monomial::pure_power(n, i, e)),
        )
        .expect("indices below n")
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.pure_powers.iter().any(|(&i, &e)| m.exponent(i) >= e)
    }

    /// `self ⊆ other`.
    fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.pure_powers
            .iter()
            .all(|(i, e)| other.pure_powers.get(i).is_some_and(|f| f <= e))
    }

    fn sort_key(&self) -> (usize, Vec<(usize, u32)>) {
        (
            self.pure_powers.len(),
            self.pure_powers.iter().map(|(&i, &e)| (i, e)).collect(),
        )
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pure_powers
            .iter()
            .map(|(i, e)| {
                if *e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The irredundant irreducible decomposition, ordered by number of pure
/// powers then by `(variable, exponent)` lists.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.ensure_proper_nonzero()?;
    let mut found = Vec::new();
    split(ideal.clone(), &mut found);
    found.sort_by_key(IrreducibleComponent::sort_key);
    found.dedup();
    let irredundant: Vec<IrreducibleComponent> = found
        .iter()
        .filter(|c| !found.iter().any(|d| d != *c && d.is_subset_of(c)))
        .cloned()
        .collect();
    Ok(irredundant)
}

/// `I = (I + x_i^{a_i}) ∩ (I + x^a / x_i^{a_i})` for a generator `x^a` with
/// at least two variables, until only pure powers remain.
fn split(ideal: MonomialIdeal, out: &mut Vec<IrreducibleComponent>) {
    let n = ideal.n();
    let mixed = ideal.generators().iter().find(|g| g.support().len() >= 2);
    match mixed {
        None => {
            let pure_powers = ideal
                .generators()
                .iter()
                .map(|g| {
                    let i = g.support()[0];
                    (i, g.exponent(i))
                })
                .collect();
            out.push(IrreducibleComponent { pure_powers });
        }
        Some(g) => {
            let i = g.support()[0];
            let power = Monomial::pure_power(n, i, g.exponent(i));
            let rest = g.checked_div(&power).expect("pure power divides");
            let left = add_generator(&ideal, power);
            let right = add_generator(&ideal, rest);
            split(left, out);
            split(right, out);
        }
    }
}

fn add_generator(ideal: &MonomialIdeal, m: Monomial) -> MonomialIdeal {
    let mut gens = ideal.generators().to_vec();
    gens.push(m);
    MonomialIdeal::minimalize(ideal.n(), gens).expect("same ring")
}

/// `Ass(I)`, ordered by height then variables.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let mut primes: Vec<MonomialPrime> = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect();
    primes.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    primes.dedup();
    Ok(primes)
}

/// Minimal elements of `Ass(I)`.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| {
            !ass.iter()
                .any(|q| q != *p && q.variables().iter().all(|v| p.contains_variable(*v)))
        })
        .cloned()
        .collect())
}

/// `ht(I)`: the least number of variables meeting the support of every
/// generator. Zero for the zero ideal.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let supports: Vec<Vec<usize>> = ideal.generators().iter().map(Monomial::support).collect();
    let mut best = ideal.n();
    let mut chosen = vec![false; ideal.n()];
    min_cover(&supports, &mut chosen, 0, &mut best);
    Ok(best)
}

fn min_cover(supports: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match supports.iter().find(|s| !s.iter().any(|&v| chosen[v])) {
        None => *best = size,
        Some(s) => {
            for &v in s {
                chosen[v] = true;
                min_cover(supports, chosen, size + 1, best);
                chosen[v] = false;
            }
        }
    }
}

/// `(ht(I), dim(R/I))`.
pub fn dimension_and_height(ideal: &MonomialIdeal) -> Result<(usize, usize)> {
    let ht = height(ideal)?;
    Ok((ht, ideal.n() - ht))
}

/// Every associated prime has height `ht(I)`.
pub fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    let ht = ass.iter().map(MonomialPrime::height).min().unwrap_or(0);
    Ok(ass.iter().all(|p| p.height() == ht))
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

    fn comp(pairs: &[(usize, u32)]) -> IrreducibleComponent {
        IrreducibleComponent {
            pure_powers: pairs.iter().copied().collect(),
        }
    }

    fn intersect_all(n: usize, comps: &[IrreducibleComponent]) -> MonomialIdeal {
        comps.iter().fold(MonomialIdeal::unit(n), |acc, c| {
            acc.intersect(&c.to_ideal(n)).unwrap()
        })
    }

    #[test]
    fn decomposition_of_product() {
        let d = irreducible_decomposition(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(d, vec![comp(&[(0, 1)]), comp(&[(1, 1)])]);
    }

    #[test]
    fn decomposition_of_height_one_example() {
        let i = ideal(3, &[&[1, 1, 1], &[1, 2, 0]]);
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(
            d,
            vec![comp(&[(0, 1)]), comp(&[(1, 1)]), comp(&[(1, 2), (2, 1)])]
        );
        assert_eq!(intersect_all(3, &d), i);
        // Brute-force membership oracle over the box [0,3]^3.
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let x = m(&[a, b, c]);
                    let in_all = d.iter().all(|k| k.contains(&x));
                    assert_eq!(in_all, i.contains(&x).unwrap(), "{x}");
                }
            }
        }
    }

    #[test]
    fn irreducible_ideal_is_its_own_decomposition() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(
            irreducible_decomposition(&i).unwrap(),
            vec![comp(&[(0, 2), (1, 3)])]
        );
    }

    #[test]
    fn decomposition_rejects_trivial() {
        assert_eq!(
            irreducible_decomposition(&MonomialIdeal::zero(2)).unwrap_err(),
            Error::ZeroIdeal
        );
        assert_eq!(
            irreducible_decomposition(&MonomialIdeal::unit(2)).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn associated_primes_examples() {
        let max = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            associated_primes(&max).unwrap(),
            vec![MonomialPrime::new(vec![0, 1, 2])]
        );
        let i = ideal(3, &[&[1, 1, 1], &[1, 2, 0]]);
        assert_eq!(
            associated_primes(&i).unwrap(),
            vec![
                MonomialPrime::new(vec![0]),
                MonomialPrime::new(vec![1]),
                MonomialPrime::new(vec![1, 2])
            ]
        );
        let s = ideal(3, &[&[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(
            associated_primes(&s).unwrap(),
            vec![MonomialPrime::new(vec![1, 2])]
        );
    }

    #[test]
    fn height_and_dimension() {
        let ex = ideal(
            4,
            &[
                &[1, 1, 2, 0],
                &[6, 0, 7, 0],
                &[0, 3, 0, 1],
                &[0, 1, 3, 1],
                &[0, 1, 0, 3],
            ],
        );
        assert_eq!(dimension_and_height(&ex).unwrap(), (2, 2));
        let max = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(dimension_and_height(&max).unwrap(), (3, 0));
        assert_eq!(
            dimension_and_height(&MonomialIdeal::zero(3)).unwrap(),
            (0, 3)
        );
        assert_eq!(
            dimension_and_height(&MonomialIdeal::unit(3)).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn height_agrees_with_minimal_primes() {
        let i = ideal(
            4,
            &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[2, 0, 0, 3]],
        );
        let min = minimal_primes(&i).unwrap();
        let ht = min.iter().map(MonomialPrime::height).min().unwrap();
        assert_eq!(height(&i).unwrap(), ht);
    }

    #[test]
    fn unmixed_examples() {
        assert!(is_unmixed(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap());
        assert!(!is_unmixed(&ideal(3, &[&[1, 1, 1], &[1, 2, 0]])).unwrap());
        assert!(is_unmixed(&ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap());
    }
}
