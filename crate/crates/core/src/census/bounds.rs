//! Closed-form counts that bound or cross-check the census.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::arith::{factorial, is_prime, ratio_string};
use crate::error::{Error, Result};

/// Upper bound on the share of `S_n` having a `p`-cycle and a second cycle
/// of length divisible by `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureBound {
    pub n: usize,
    pub p: usize,
    /// Permutations with a distinguished `p`-cycle and a distinguished second
    /// cycle of length `k p`, counted term by term and divided by `n!`.
    pub exact_rhs: BigRational,
    /// `(1/p^2) sum_{k=1}^{floor(n/p)-1} 1/k`.
    pub simplified: BigRational,
    /// `ln(n) / p^2`.
    pub log_form: f64,
}

pub fn structure_bound(n: usize, p: usize) -> Result<StructureBound> {
    if !is_prime(p as u64) {
        return Err(Error::domain(format!("p = {p} is not prime")));
    }
    if p > n {
        return Err(Error::domain(format!("p = {p} exceeds n = {n}")));
    }
    let big = |x: usize| BigUint::from(x);
    let fact = |x: usize| factorial(x as u64);
    let kmax = (n / p).saturating_sub(1);

    let mut structures = BigUint::zero();
    for k in 1..=kmax {
        let kp = k * p;
        structures += binomial(big(n - p), big(kp)) * fact(kp - 1) * fact(n - p - kp);
    }
    structures *= fact(p - 1) * binomial(big(n), big(p));
    let exact_rhs = BigRational::new(structures.into(), fact(n).into());

    let harmonic = (1..=kmax)
        .map(|k| BigRational::new(BigInt::one(), BigInt::from(k)))
        .fold(BigRational::zero(), |acc, t| acc + t);
    let simplified = harmonic / BigRational::from_integer(BigInt::from(p * p));

    Ok(StructureBound {
        n,
        p,
        exact_rhs,
        simplified,
        log_form: (n as f64).ln() / (p * p) as f64,
    })
}

impl StructureBound {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "p": self.p,
            "exact_rhs": ratio_string(&self.exact_rhs),
            "simplified": ratio_string(&self.simplified),
            "log_form": self.log_form,
        })
    }
}

/// Share of `S_n` with a cycle of length `n`, `n - 1` or `n - 2`.
///
/// For `n >= 7` each of these lengths exceeds `n/2`, so at most one such
/// cycle exists and a length-`l` cycle occurs in exactly `n!/l` permutations.
pub fn long_cycle_proportion(n: usize) -> Result<BigRational> {
    if n < 7 {
        return Err(Error::domain(format!(
            "closed form needs n >= 7 (got {n}); use the partition census with event long-cycle"
        )));
    }
    Ok([n, n - 1, n - 2]
        .into_iter()
        .map(|l| BigRational::new(BigInt::one(), BigInt::from(l)))
        .fold(BigRational::zero(), |acc, t| acc + t))
}
