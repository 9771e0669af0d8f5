//! Prime sieve and the reciprocal prime sums built on it.

mod sieve;
mod sums;

pub use sieve::{PrimeSieve, DEFAULT_SIEVE_CAP};
pub use sums::{
    aux_f, interval_reciprocal_sum, reciprocal_prime_sum, reciprocal_prime_sum_exact,
    tail_inverse_square, tail_sieve_limit, truncated_tail, window_sum, MertensReport, TailReport,
    WindowReport,
};
