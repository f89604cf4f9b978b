//! Seeded random monomial ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Bounds and constraint flags for random ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RandomIdealSpec {
    pub n: usize,
    /// Number of monomials drawn before minimalization, chosen uniformly in
    /// `1..=q_max` (`2..=q_max` when `non_principal` is set).
    pub q_max: usize,
    pub exp_max: u32,
    pub non_principal: bool,
    pub height_two: bool,
    pub retries: usize,
}

impl RandomIdealSpec {
    pub fn new(n: usize, q_max: usize, exp_max: u32) -> Self {
        RandomIdealSpec {
            n,
            q_max,
            exp_max,
            non_principal: false,
            height_two: false,
            retries: 10_000,
        }
    }

    pub fn non_principal(mut self) -> Self {
        self.non_principal = true;
        self
    }

    pub fn height_two(mut self) -> Self {
        self.height_two = true;
        self
    }

    pub fn retries(mut self, retries: usize) -> Self {
        self.retries = retries;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.q_max == 0 || self.exp_max == 0 {
            return Err(Error::Unsatisfiable(0));
        }
        if (self.non_principal || self.height_two) && self.q_max < 2 {
            return Err(Error::Unsatisfiable(0));
        }
        Ok(())
    }

    fn accepts(&self, ideal: &MonomialIdeal) -> bool {
        !ideal.is_unit()
            && !(self.non_principal && ideal.is_principal())
            && !(self.height_two && !ideal.every_row_has_zero())
    }
}

/// Draws one candidate ideal (which may violate the constraints).
fn draw<R: Rng + ?Sized>(spec: &RandomIdealSpec, rng: &mut R) -> MonomialIdeal {
    let low = if spec.non_principal || spec.height_two {
        2
    } else {
        1
    };
    let q = rng.gen_range(low..=spec.q_max.max(low));
    let gens = (0..q).map(|_| {
        Monomial::new(
            (0..spec.n)
                .map(|_| rng.gen_range(0..=spec.exp_max))
                .collect(),
        )
    });
    MonomialIdeal::minimalize(spec.n, gens).expect("drawn monomials have n variables")
}

/// A random ideal from an existing generator, retrying until the constraints
/// hold.
pub fn random_ideal_with<R: Rng + ?Sized>(
    spec: &RandomIdealSpec,
    rng: &mut R,
) -> Result<MonomialIdeal> {
    spec.validate()?;
    for _ in 0..spec.retries.max(1) {
        let i = draw(spec, rng);
        if spec.accepts(&i) {
            return Ok(i);
        }
    }
    Err(Error::Unsatisfiable(spec.retries))
}

/// Reproducible: the same `spec` and `seed` always give the same ideal.
pub fn generate_random_ideal(spec: &RandomIdealSpec, seed: u64) -> Result<MonomialIdeal> {
    random_ideal_with(spec, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Independent per-case seed derived from a batch seed.
pub fn case_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed
        .wrapping_add(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(index.wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
