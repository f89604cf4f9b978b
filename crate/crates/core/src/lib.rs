//! Signatures of monomial ideals and the invariants they preserve.
//!
//! The signature `sgn(I)` of a monomial ideal replaces each row of its
//! incidence matrix by the ranks of its distinct entries. This crate computes
//! signatures, the gap-closing shift and weighted polarization steps that
//! connect an ideal to its signature, and the invariants compared along the
//! way: associated primes, height, dimension, multigraded Betti numbers,
//! depth, regularity, Cohen-Macaulayness, Gorensteinness and v-numbers.
//!
//! All arithmetic is exact.

pub mod decomposition;
pub mod error;
pub mod harness;
pub mod homology;
pub mod monomial;
pub mod signature;
pub mod vnumber;

pub use decomposition::{
    associated_primes, dimension_and_height, height, irreducible_decomposition, is_unmixed,
    minimal_primes, IrreducibleComponent, MonomialPrime,
};
pub use error::{Error, Result};
pub use homology::{betti_table, homological_invariants, BettiTable, Field, HomologicalInvariants};
pub use monomial::{IncidenceMatrix, Monomial, MonomialIdeal};
pub use signature::{
    enumerate_signature_matrices, find_gap, full_polarization_trace, polarization_step,
    row_signature, shift_step, signature_of_ideal, GapDescriptor, PolarizationTrace, RowSignature,
};
pub use vnumber::{v_number, v_witness_for_prime, v_witnesses, VWitness};
