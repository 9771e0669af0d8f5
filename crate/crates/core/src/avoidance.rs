//! Proportion of permutations with no cycle length in a set `C`.
//!
//! With `a_k = 0` for `k` in `C` and `1` otherwise, the proportions `p_k` are
//! the Taylor coefficients of `exp(sum_k a_k z^k / k)`. Differentiating gives
//! the recurrence
//!
//! ```text
//! k * p_k = sum_{j=0}^{k-1} a_{k-j} * p_j,   p_0 = 1
//! ```
//!
//! which is evaluated exactly. Multiplying through by `(k-1)!` turns it into
//! an integer recurrence for the counts `c_k = k! p_k`, which is what is
//! actually stored; the rationals are formed once at the end.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::arith::{is_prime, ratio_string, reciprocal_sum, CompensatedSum};
use crate::error::{Error, Result};
use crate::hp::{self, Decimal};
use crate::setspec::{format_set, parse_set};

/// Largest degree accepted by the exact recurrence unless overridden.
pub const DEFAULT_EXACT_CAP: usize = 5000;
/// Largest degree accepted by the floating-point recurrence.
pub const APPROX_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceSpec {
    n: usize,
    set: BTreeSet<usize>,
}

impl AvoidanceSpec {
    pub fn new(n: usize, set: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("degree must be at least 1"));
        }
        let set: BTreeSet<usize> = set.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&k| k == 0 || k > n) {
            return Err(Error::domain(format!(
                "cycle length {bad} is outside 1..={n}"
            )));
        }
        Ok(Self { n, set })
    }

    /// Parses the set grammar of [`crate::setspec`].
    pub fn parse(n: usize, set: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("degree must be at least 1"));
        }
        Self::new(n, parse_set(set, n)?)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn set(&self) -> &BTreeSet<usize> {
        &self.set
    }

    pub fn set_string(&self) -> String {
        format_set(&self.set)
    }

    /// The indicator `a_k`: true when length `k` is allowed.
    pub fn allows(&self, k: usize) -> bool {
        !self.set.contains(&k)
    }

    /// `mu = sum_{k in C} 1/k`, exactly.
    pub fn mu(&self) -> BigRational {
        reciprocal_sum(self.set.iter().map(|&k| k as u64))
    }
}

/// Exact `p_0..=p_n` for one spec.
#[derive(Debug, Clone)]
pub struct ProportionSeries {
    spec: AvoidanceSpec,
    counts: Vec<BigUint>,
    proportions: Vec<BigRational>,
}

impl ProportionSeries {
    pub fn spec(&self) -> &AvoidanceSpec {
        &self.spec
    }

    /// `p_k` for `k` in `0..=n`.
    pub fn proportions(&self) -> &[BigRational] {
        &self.proportions
    }

    /// Number of permutations of `S_k` with no cycle length in `C`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `p_n`.
    pub fn last(&self) -> &BigRational {
        self.proportions.last().expect("series is never empty")
    }
}

pub fn avoidance_series(spec: &AvoidanceSpec) -> Result<ProportionSeries> {
    avoidance_series_capped(spec, DEFAULT_EXACT_CAP)
}

pub fn avoidance_series_capped(spec: &AvoidanceSpec, cap: usize) -> Result<ProportionSeries> {
    let n = spec.degree();
    if n > cap {
        return Err(Error::Resource {
            what: "exact series degree",
            value: n as u64,
            cap: cap as u64,
            hint: "use the approximate series for larger n",
        });
    }
    // c_k = sum_{l=1}^{k} a_l (k-1)!/(k-l)! c_{k-l}, evaluated by Horner in
    // the falling factorial: the l = k term picks up 1*2*...*(k-1).
    let mut counts: Vec<BigUint> = Vec::with_capacity(n + 1);
    counts.push(BigUint::one());
    for k in 1..=n {
        let mut acc = if spec.allows(k) {
            counts[0].clone()
        } else {
            BigUint::zero()
        };
        for l in (1..k).rev() {
            if !acc.is_zero() {
                acc *= (k - l) as u64;
            }
            if spec.allows(l) {
                acc += &counts[k - l];
            }
        }
        counts.push(acc);
    }
    let primes: Vec<u64> = (2..=n as u64).filter(|&q| is_prime(q)).collect();
    let mut factorial = BigUint::one();
    let proportions = counts
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                factorial *= k as u64;
            }
            reduce_over_factorial(c, k as u64, &factorial, &primes)
        })
        .collect();
    Ok(ProportionSeries {
        spec: spec.clone(),
        counts,
        proportions,
    })
}

/// `c / k!` in lowest terms. Every prime factor of `k!` is at most `k`, so
/// trial division replaces a big gcd.
fn reduce_over_factorial(c: &BigUint, k: u64, factorial: &BigUint, primes: &[u64]) -> BigRational {
    if c.is_zero() {
        return BigRational::zero();
    }
    let mut num = c.clone();
    let mut den = factorial.clone();
    let mut batch: Vec<u64> = Vec::new();
    let mut product = 1u64;
    let flush = |batch: &mut Vec<u64>, product: &mut u64, num: &mut BigUint, den: &mut BigUint| {
        let r = (&*num % *product).to_u64().expect("remainder fits");
        for &q in batch.iter().filter(|&&q| r.is_multiple_of(q)) {
            // v_q(k!) bounds how often q can be cancelled
            let mut budget = legendre(k, q);
            while budget > 0 && (&*num % q).is_zero() {
                *num /= q;
                *den /= q;
                budget -= 1;
            }
        }
        batch.clear();
        *product = 1;
    };
    for &q in primes.iter().take_while(|&&q| q <= k) {
        if product.checked_mul(q).is_none() {
            flush(&mut batch, &mut product, &mut num, &mut den);
        }
        product *= q;
        batch.push(q);
    }
    if !batch.is_empty() {
        flush(&mut batch, &mut product, &mut num, &mut den);
    }
    BigRational::new_raw(num.into(), den.into())
}

/// Exponent of `q` in `k!`.
fn legendre(k: u64, q: u64) -> u64 {
    let mut e = 0;
    let mut t = k / q;
    while t > 0 {
        e += t;
        t /= q;
    }
    e
}

/// Floating-point `p_0..=p_n` for degrees past the exact cap.
///
/// Approximate: each `p_k` carries accumulated rounding error of order
/// `k * 1e-16`.
pub fn approximate_series(spec: &AvoidanceSpec) -> Result<Vec<f64>> {
    let n = spec.degree();
    if n > APPROX_CAP {
        return Err(Error::Resource {
            what: "approximate series degree",
            value: n as u64,
            cap: APPROX_CAP as u64,
            hint: "the recurrence is quadratic in n",
        });
    }
    let allowed: Vec<bool> = (0..=n).map(|k| k > 0 && spec.allows(k)).collect();
    let mut p = Vec::with_capacity(n + 1);
    p.push(1.0f64);
    for k in 1..=n {
        let mut sum = CompensatedSum::default();
        for j in 0..k {
            if allowed[k - j] {
                sum.add(p[j]);
            }
        }
        p.push(sum.value() / k as f64);
    }
    Ok(p)
}

/// `exp(gamma - mu)`, the strict upper bound on `p_n`.
pub fn theorem1_bound(spec: &AvoidanceSpec) -> Decimal {
    bound_from_mu(&spec.mu())
}

fn bound_from_mu(mu: &BigRational) -> Decimal {
    hp::exp(&(hp::gamma() - hp::from_ratio(mu)))
}

/// `E(n) = H_n - log n - gamma`, with `H_n` summed exactly.
pub fn harmonic_error(n: usize) -> Result<Decimal> {
    if n == 0 {
        return Err(Error::domain("harmonic error needs n >= 1"));
    }
    let harmonic = reciprocal_sum(1..=n as u64);
    Ok(hp::from_ratio(&harmonic) - hp::ln(&hp::from_int(n as u64)) - hp::gamma())
}

/// All bounds on the avoidance proportion for one spec.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: usize,
    pub mu: BigRational,
    pub gamma: Decimal,
    /// `exp(gamma - mu)`.
    pub bound_thm1: Decimal,
    /// `1/mu`; absent when `C` is empty.
    pub bound_et: Option<BigRational>,
    /// `exp(gamma - mu) * (1 + 1/n)`.
    pub bound_mans: Decimal,
    pub e_n: Decimal,
}

pub fn bound_report(spec: &AvoidanceSpec) -> BoundReport {
    let n = spec.degree();
    let mu = spec.mu();
    let bound_thm1 = bound_from_mu(&mu);
    let bound_et = (!mu.is_zero()).then(|| mu.recip());
    let bound_mans = bound_thm1.clone() * (hp::from_int(n as u64 + 1) / hp::from_int(n as u64));
    BoundReport {
        n,
        mu,
        gamma: hp::gamma(),
        bound_thm1,
        bound_et,
        bound_mans,
        e_n: harmonic_error(n).expect("n >= 1 by construction"),
    }
}

impl BoundReport {
    /// `(name, value)` rows with decimals rounded to `digits` significant
    /// digits and rationals as `num/den`.
    pub fn rows(&self, digits: usize) -> Vec<(&'static str, String)> {
        let mut rows = vec![
            ("n", self.n.to_string()),
            ("mu", ratio_string(&self.mu)),
            ("gamma", hp::format_sig(&self.gamma, digits)),
            ("bound_thm1", hp::format_sig(&self.bound_thm1, digits)),
        ];
        if let Some(et) = &self.bound_et {
            rows.push(("bound_et", ratio_string(et)));
        }
        rows.push(("bound_mans", hp::format_sig(&self.bound_mans, digits)));
        rows.push(("e_n", hp::format_sig(&self.e_n, digits)));
        rows
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        json!({
            "n": self.n,
            "mu": ratio_string(&self.mu),
            "gamma": hp::format_sig(&self.gamma, digits),
            "bound_thm1": hp::format_sig(&self.bound_thm1, digits),
            "bound_et": self.bound_et.as_ref().map(ratio_string),
            "bound_mans": hp::format_sig(&self.bound_mans, digits),
            "e_n": hp::format_sig(&self.e_n, digits),
        })
    }
}

/// Decimal rendering of `p_k` for tables.
pub fn proportion_decimal(q: &BigRational, digits: usize) -> String {
    hp::format_sig(&hp::from_ratio(q), digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio_to_f64;
    use std::cmp::Ordering;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn sig(x: &Decimal, d: usize) -> f64 {
        hp::format_sig(x, d).parse().unwrap()
    }

    #[test]
    fn trial_reduction_matches_gcd() {
        let spec = AvoidanceSpec::parse(150, "2,3,5-9,31").unwrap();
        let series = avoidance_series(&spec).unwrap();
        let mut f = BigUint::one();
        for (k, (c, p)) in series.counts().iter().zip(series.proportions()).enumerate() {
            if k > 0 {
                f *= k as u64;
            }
            let r = BigRational::new(c.clone().into(), f.clone().into());
            assert_eq!((p.numer(), p.denom()), (r.numer(), r.denom()), "k = {k}");
        }
    }

    #[test]
    fn spec_validation() {
        assert!(AvoidanceSpec::new(4, [5]).is_err());
        assert!(AvoidanceSpec::new(4, [0]).is_err());
        assert!(AvoidanceSpec::new(0, []).is_err());
        let s = AvoidanceSpec::parse(10, "1-4,7").unwrap();
        assert!(!s.allows(3) && s.allows(5) && !s.allows(7));
        assert_eq!(s.set_string(), "1-4,7");
    }

    #[test]
    fn mu_examples() {
        assert_eq!(AvoidanceSpec::new(5, []).unwrap().mu(), q(0, 1));
        assert_eq!(AvoidanceSpec::new(5, [1, 2, 3, 4]).unwrap().mu(), q(25, 12));
        assert_eq!(AvoidanceSpec::new(5, [2, 3]).unwrap().mu(), q(5, 6));
    }

    #[test]
    fn series_examples() {
        let s = avoidance_series(&AvoidanceSpec::new(4, [1]).unwrap()).unwrap();
        assert_eq!(
            s.proportions(),
            &[q(1, 1), q(0, 1), q(1, 2), q(1, 3), q(3, 8)]
        );
        assert_eq!(s.counts()[4], BigUint::from(9u32));
        let s = avoidance_series(&AvoidanceSpec::new(3, [2]).unwrap()).unwrap();
        assert_eq!(s.last(), &q(1, 2));
        let s = avoidance_series(&AvoidanceSpec::new(5, 1..5).unwrap()).unwrap();
        assert_eq!(s.last(), &q(1, 5));
        let s = avoidance_series(&AvoidanceSpec::new(7, []).unwrap()).unwrap();
        assert!(s.proportions().iter().all(|p| p == &q(1, 1)));
    }

    #[test]
    fn series_cap() {
        let spec = AvoidanceSpec::new(30, [1]).unwrap();
        assert!(matches!(
            avoidance_series_capped(&spec, 20),
            Err(Error::Resource { cap: 20, .. })
        ));
    }

    #[test]
    fn approximate_tracks_exact() {
        let spec = AvoidanceSpec::parse(150, "primes").unwrap();
        let exact = avoidance_series(&spec).unwrap();
        let approx = approximate_series(&spec).unwrap();
        for (e, a) in exact.proportions().iter().zip(&approx) {
            assert!((ratio_to_f64(e) - a).abs() < 1e-13);
        }
    }

    #[test]
    fn bound_examples() {
        let empty = AvoidanceSpec::new(10, []).unwrap();
        assert!((sig(&theorem1_bound(&empty), 12) - 1.78107241799).abs() < 1e-10);
        let one = AvoidanceSpec::new(10, [1]).unwrap();
        assert!((sig(&theorem1_bound(&one), 12) - 0.655219925816).abs() < 1e-11);
        let four = AvoidanceSpec::new(5, [1, 2, 3, 4]).unwrap();
        let b = theorem1_bound(&four);
        assert!((sig(&b, 12) - 0.221769290730).abs() < 1e-11);
        let p5 = avoidance_series(&four).unwrap().last().clone();
        assert_eq!(hp::compare_ratio(&p5, &b), Some(Ordering::Less));
    }

    #[test]
    fn bound_report_examples() {
        let r = bound_report(&AvoidanceSpec::new(10, [1]).unwrap());
        assert_eq!(r.bound_et, Some(q(1, 1)));
        assert!((sig(&r.bound_thm1, 12) - 0.655219925816).abs() < 1e-11);
        assert!((sig(&r.bound_mans, 12) - 0.720741918398).abs() < 1e-11);
        assert!(r.bound_thm1 < r.bound_mans);
        let r = bound_report(&AvoidanceSpec::new(10, []).unwrap());
        assert_eq!(r.bound_et, None);
        assert_eq!(r.mu, q(0, 1));
        let json = r.to_json(12);
        assert!(json["bound_et"].is_null());
    }

    #[test]
    fn harmonic_error_examples() {
        assert!((sig(&harmonic_error(1).unwrap(), 12) - 0.422784335098).abs() < 1e-11);
        let e10 = sig(&harmonic_error(10).unwrap(), 12);
        assert!((e10 - 0.049167).abs() < 1e-6 && e10 < 0.05);
        let e = sig(&harmonic_error(10_000).unwrap(), 12);
        assert!(e > 0.0 && e < 5e-5);
        assert!(harmonic_error(0).is_err());
    }
}
