//! Exact symmetric-group characters, Kronecker coefficients, their
//! stability and bounds, and gaps of Gaussian binomial coefficients.
//!
//! All combinatorial quantities are exact big integers or rationals.
//! Analytic constants are evaluated at [`precision::PRECISION_BITS`] bits.

pub mod bounds;
pub mod character;
pub mod contingency;
pub mod decimal;
pub mod error;
pub mod kronecker;
pub mod lr;
pub mod partition;
pub mod poly;
pub mod precision;
pub mod qbinomial;
pub mod stability;
pub mod verify;

pub use bounds::{BoundEntry, BoundReport, BoundValue, Direction};
pub use character::CharacterStore;
pub use contingency::{ArrayCounter, ContingencySpec};
pub use error::{Error, Result};
pub use kronecker::AlternatingGuard;
pub use partition::Partition;
pub use poly::IntPolynomial;
pub use precision::Real;
pub use stability::{ReductionOutcome, StabilitySequence, TailMode};

/// Shared caches and resource limits for one session of computations.
#[derive(Default)]
pub struct Engine {
    pub characters: CharacterStore,
    pub arrays: ArrayCounter,
    pub guard: AlternatingGuard,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    pub fn kronecker(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<num_bigint::BigUint> {
        kronecker::kronecker(&self.characters, lambda, mu, nu)
    }

    pub fn kronecker_alternating(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<num_bigint::BigInt> {
        kronecker::kronecker_alternating(&self.arrays, lambda, mu, nu, self.guard)
    }
}
