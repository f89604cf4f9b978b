//! v-numbers by capped exhaustive search.
//!
//! `(I : x^a)` only depends on `min(a_i, m_i)` where `m_i` is the largest
//! exponent of `x_i` among the generators, so every witness can be taken
//! inside the box `a <= lcm(G(I))`. The box is scanned in canonical monomial
//! order (degree ascending), so the first witness found for a prime has
//! minimum degree.

use serde::Serialize;

use crate::decomposition::{associated_primes, MonomialPrime};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VWitness {
    pub prime: MonomialPrime,
    pub witness: Monomial,
    pub degree: u64,
}

/// All monomials dividing `bound`, in canonical order.
fn box_monomials(bound: &Monomial) -> Vec<Monomial> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for &b in bound.exponents() {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    let mut ms: Vec<Monomial> = out.into_iter().map(Monomial::new).collect();
    ms.sort();
    ms
}

/// A minimum-degree witness for every associated prime, ordered like
/// [`associated_primes`].
pub fn v_witnesses(ideal: &MonomialIdeal) -> Result<Vec<VWitness>> {
    let ass = associated_primes(ideal)?;
    let mut found: Vec<Option<VWitness>> = vec![None; ass.len()];
    let mut missing = ass.len();
    for w in box_monomials(&ideal.lcm_of_generators()) {
        if missing == 0 {
            break;
        }
        if ideal.contains_unchecked(&w) {
            continue;
        }
        let colon = ideal.colon(&w)?;
        if let Some(p) = MonomialPrime::from_ideal(&colon) {
            if let Ok(k) =
                ass.binary_search_by(|q| q.height().cmp(&p.height()).then_with(|| q.cmp(&p)))
            {
                if found[k].is_none() {
                    found[k] = Some(VWitness {
                        prime: p,
                        degree: w.degree(),
                        witness: w,
                    });
                    missing -= 1;
                }
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|w| w.expect("every associated prime has a witness in the box"))
        .collect())
}

pub fn v_witness_for_prime(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<VWitness> {
    let ass = associated_primes(ideal)?;
    if !ass.contains(prime) {
        return Err(Error::NotAssociated(prime.to_string()));
    }
    let target = prime.to_ideal(ideal.n());
    for w in box_monomials(&ideal.lcm_of_generators()) {
        if ideal.colon(&w)? == target {
            return Ok(VWitness {
                prime: prime.clone(),
                degree: w.degree(),
                witness: w,
            });
        }
    }
    unreachable!("associated primes have a witness in the box")
}

/// `v(I)`.
pub fn v_number(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(v_witnesses(ideal)?
        .iter()
        .map(|w| w.degree)
        .min()
        .expect("proper nonzero ideals have associated primes"))
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
    fn primes_have_witness_one() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let w = v_witness_for_prime(&i, &MonomialPrime::new(vec![0, 1])).unwrap();
        assert!(w.witness.is_one());
        assert_eq!(w.degree, 0);
        let j = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let w = v_witness_for_prime(&j, &MonomialPrime::new(vec![1, 2])).unwrap();
        assert_eq!(w.degree, 0);
        assert_eq!(v_number(&j).unwrap(), 0);
    }

    #[test]
    fn not_associated_is_an_error() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        assert!(matches!(
            v_witness_for_prime(&i, &MonomialPrime::new(vec![0])),
            Err(Error::NotAssociated(_))
        ));
    }

    #[test]
    fn example_v_numbers() {
        assert_eq!(v_number(&example()).unwrap(), 4);
        let s = crate::signature::signature_of_ideal(&example()).unwrap();
        assert_eq!(v_number(&s).unwrap(), 3);
    }

    #[test]
    fn witnesses_are_valid_and_minimal() {
        let i = example();
        for w in v_witnesses(&i).unwrap() {
            assert_eq!(i.colon(&w.witness).unwrap(), w.prime.to_ideal(4));
            assert!(w.witness.divides(&i.lcm_of_generators()));
            assert_eq!(v_witness_for_prime(&i, &w.prime).unwrap(), w);
        }
    }
}
