//! Reciprocal sums over primes.
//!
//! All floating sums run over primes in increasing order with compensated
//! accumulation, so results are reproducible to the last bit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::sieve::PrimeSieve;
use crate::arith::CompensatedSum;
use crate::error::{Error, Result};

/// `sum_{p <= x} 1/p` against `log log x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MertensReport {
    pub x: f64,
    pub sum: f64,
    pub loglog_x: f64,
    /// `sum - log log x`; tends to the Meissel-Mertens constant.
    pub residual: f64,
}

fn check_range(x: f64, sieve: &PrimeSieve) -> Result<u64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::domain(format!("x = {x} must be at least 2")));
    }
    if x > sieve.limit() as f64 {
        return Err(Error::domain(format!(
            "x = {x} exceeds the sieve limit {}",
            sieve.limit()
        )));
    }
    Ok(x.floor() as u64)
}

/// `sum 1/p` over primes `lo < p <= hi` (reals, clipped to the sieve).
pub fn interval_reciprocal_sum(lo: f64, hi: f64, sieve: &PrimeSieve) -> f64 {
    let mut acc = CompensatedSum::default();
    if hi < 2.0 || hi <= lo {
        return 0.0;
    }
    let lo = if lo < 0.0 { 0 } else { lo.floor() as u64 };
    let hi = (hi.floor() as u64).min(sieve.limit());
    for p in sieve.primes_between(lo, hi) {
        acc.add(1.0 / p as f64);
    }
    acc.value()
}

pub fn reciprocal_prime_sum(x: f64, sieve: &PrimeSieve) -> Result<MertensReport> {
    check_range(x, sieve)?;
    let sum = interval_reciprocal_sum(0.0, x, sieve);
    let loglog_x = x.ln().ln();
    Ok(MertensReport {
        x,
        sum,
        loglog_x,
        residual: sum - loglog_x,
    })
}

/// Exact `sum_{p <= x} 1/p`. Denominators are primorials, so keep `x` small.
pub fn reciprocal_prime_sum_exact(x: u64, sieve: &PrimeSieve) -> Result<BigRational> {
    check_range(x as f64, sieve)?;
    Ok(sieve
        .primes_between(0, x)
        .map(|p| BigRational::new(BigInt::one(), BigInt::from(p)))
        .fold(BigRational::zero(), |acc, t| acc + t))
}

/// `(ln n)^2`.
pub fn aux_f(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("f(n) needs n >= 2"));
    }
    let l = (n as f64).ln();
    Ok(l * l)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WindowReport {
    pub n: u64,
    pub f_n: f64,
    /// `sum 1/p` over primes `f(n) < p <= n`.
    pub sum: f64,
    /// `log log n - log log log n - log 2`.
    pub prediction: f64,
}

/// Reciprocal sum over the primes in `(f(n), n]`, computed as the
/// difference of the two prefix sums.
pub fn window_sum(n: u64, sieve: &PrimeSieve) -> Result<WindowReport> {
    if n <= 10 {
        return Err(Error::domain(format!("window sums need n > 10, got {n}")));
    }
    if n > sieve.limit() {
        return Err(Error::domain(format!(
            "sieve limit {} is below n = {n}",
            sieve.limit()
        )));
    }
    let f_n = aux_f(n)?;
    let upper = reciprocal_prime_sum(n as f64, sieve)?.sum;
    let lower = reciprocal_prime_sum(f_n, sieve)?.sum;
    let ll = (n as f64).ln().ln();
    Ok(WindowReport {
        n,
        f_n,
        sum: upper - lower,
        prediction: ll - ll.ln() - std::f64::consts::LN_2,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailReport {
    pub x: f64,
    pub limit: u64,
    /// `sum 1/p^2` over primes `x < p <= limit`.
    pub truncated_sum: f64,
    /// `2/x`.
    pub bound: f64,
    /// `1/(x log x)`, the asymptotic size of the full tail.
    pub reference: f64,
    /// The omitted part `sum_{p > limit} 1/p^2` is below this.
    pub truncation_error: f64,
    pub warning: Option<String>,
}

/// Minimum sieve limit for a tail sum at `x`.
pub fn tail_sieve_limit(x: f64) -> u64 {
    (100.0 * x).ceil().max(1e6) as u64
}

/// Tail `sum_{p > x} 1/p^2`, truncated at the sieve limit, which must be at
/// least [`tail_sieve_limit`].
pub fn tail_inverse_square(x: f64, sieve: &PrimeSieve) -> Result<TailReport> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::domain(format!("x = {x} must be at least 2")));
    }
    let needed = tail_sieve_limit(x);
    if sieve.limit() < needed {
        return Err(Error::domain(format!(
            "tail at x = {x} needs a sieve to at least {needed}, have {}",
            sieve.limit()
        )));
    }
    Ok(truncated_tail(x, sieve))
}

/// The same truncated sum with no size requirement; when `x` is at or past
/// the sieve limit the sum is empty and a warning is attached.
pub fn truncated_tail(x: f64, sieve: &PrimeSieve) -> TailReport {
    let limit = sieve.limit();
    let mut acc = CompensatedSum::default();
    let start = if x < 0.0 { 0 } else { x.floor() as u64 };
    for p in sieve.primes_between(start, limit) {
        let p = p as f64;
        acc.add(1.0 / (p * p));
    }
    let warning = (x >= limit as f64).then(|| {
        format!("x = {x} is at or beyond the sieve limit {limit}; the truncated tail is empty")
    });
    TailReport {
        x,
        limit,
        truncated_sum: acc.value(),
        bound: 2.0 / x,
        reference: 1.0 / (x * x.ln()),
        truncation_error: 1.0 / limit as f64,
        warning,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mertens_small() {
        let s = PrimeSieve::new(1000).unwrap();
        let r = reciprocal_prime_sum(10.0, &s).unwrap();
        assert!((r.sum - 247.0 / 210.0).abs() < 1e-15);
        assert_eq!(
            reciprocal_prime_sum_exact(10, &s).unwrap(),
            BigRational::new(247.into(), 210.into())
        );
        assert_eq!(reciprocal_prime_sum(2.0, &s).unwrap().sum, 0.5);
        assert!(reciprocal_prime_sum(1.5, &s).is_err());
        assert!(reciprocal_prime_sum(1001.0, &s).is_err());
    }

    #[test]
    fn mertens_monotone() {
        let s = PrimeSieve::new(10_000).unwrap();
        let mut prev = 0.0;
        for x in (2..=10_000).step_by(37) {
            let r = reciprocal_prime_sum(x as f64, &s).unwrap();
            assert!(r.sum >= prev);
            prev = r.sum;
        }
    }

    #[test]
    fn aux_f_examples() {
        assert!((aux_f(11).unwrap() - 5.749902).abs() < 1e-5);
        assert!(aux_f(11).unwrap() > 5.0);
        assert!((aux_f(16).unwrap() - 7.687248).abs() < 1e-5);
        assert!((aux_f(1_000_000).unwrap() - 190.868).abs() < 1e-3);
        assert!(aux_f(1).is_err());
    }

    #[test]
    fn window_small() {
        let s = PrimeSieve::new(100).unwrap();
        let w = window_sum(11, &s).unwrap();
        assert!((w.sum - 18.0 / 77.0).abs() < 1e-15);
        assert!(window_sum(10, &s).is_err());
        assert!(window_sum(101, &s).is_err());
        assert_eq!(interval_reciprocal_sum(24.0, 28.0, &s), 0.0);
    }

    #[test]
    fn window_is_prefix_difference() {
        let s = PrimeSieve::new(200_000).unwrap();
        for n in [11u64, 100, 997, 50_000, 200_000] {
            let w = window_sum(n, &s).unwrap();
            let direct = reciprocal_prime_sum(n as f64, &s).unwrap().sum
                - reciprocal_prime_sum(w.f_n, &s).unwrap().sum;
            assert_eq!(w.sum, direct);
            let interval = interval_reciprocal_sum(w.f_n, n as f64, &s);
            assert!((w.sum - interval).abs() < 1e-14);
        }
    }

    #[test]
    fn tail_requirements() {
        let s = PrimeSieve::new(1_000_000).unwrap();
        assert!(tail_inverse_square(20_000.0, &s).is_err());
        let t = tail_inverse_square(100.0, &s).unwrap();
        assert!(t.truncated_sum < t.bound);
        assert!(t.warning.is_none());
        let t = truncated_tail(2_000_000.0, &s);
        assert_eq!(t.truncated_sum, 0.0);
        assert!(t.warning.is_some());
    }
}
