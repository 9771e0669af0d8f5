//! Cycle statistics of the symmetric group.
//!
//! The crate computes, exactly and by sampling, how often a permutation of
//! degree `n` avoids a set of cycle lengths and how often it has a power that
//! is a cycle of prime length.
//!
//! * [`perm`] and [`cycle_type`]: permutations, cycle types, powers, witnesses.
//! * [`avoidance`]: exact avoidance proportions and the `exp(gamma - mu)` bound.
//! * [`prime`]: sieve and prime reciprocal sums.
//! * [`census`]: exact, brute-force and Monte Carlo event proportions.

pub mod arith;
pub mod avoidance;
pub mod census;
pub mod cli;
pub mod cycle_type;
pub mod error;
pub mod hp;
pub mod perm;
pub mod prime;
pub mod rng;
pub mod setspec;

pub use cycle_type::{CycleType, Parity, PrimeCycleWitness};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use rng::RandomStream;
