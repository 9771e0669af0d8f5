//! Cycle types (partitions of the degree) and the predicates defined on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::arith::{is_prime, lcm_all};
use crate::error::{Error, Result};
use crate::rng::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Multiset of cycle lengths, stored as `(length, multiplicity)` pairs with
/// strictly increasing lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    n: usize,
    parts: Vec<(usize, usize)>,
}

/// `sigma^exponent` is a cycle of prime length `prime`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCycleWitness {
    pub prime: u64,
    #[serde(serialize_with = "serialize_biguint")]
    pub exponent: BigUint,
    /// Points moved by the power; always equal to `prime`.
    pub moved: u64,
}

fn serialize_biguint<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl CycleType {
    /// Builds a cycle type from `(length, multiplicity)` pairs in any order;
    /// repeated lengths are merged.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for (len, mult) in pairs {
            if len == 0 || mult == 0 {
                return Err(Error::domain(
                    "cycle lengths and multiplicities must be positive",
                ));
            }
            parts.push((len, mult));
        }
        parts.sort_unstable();
        parts.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        let total = parts
            .iter()
            .try_fold(0usize, |acc, &(l, m)| {
                l.checked_mul(m).and_then(|x| acc.checked_add(x))
            })
            .ok_or_else(|| Error::domain("cycle type size overflows"))?;
        if total != n {
            return Err(Error::domain(format!(
                "cycle lengths sum to {total}, expected degree {n}"
            )));
        }
        if n == 0 {
            return Err(Error::domain("degree must be at least 1"));
        }
        Ok(Self { n, parts })
    }

    /// Cycle type whose degree is the sum of the given lengths.
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = lengths.into_iter().map(|l| (l, 1)).collect();
        let n = pairs.iter().map(|p| p.0).sum();
        Self::new(n, pairs)
    }

    /// Caller guarantees sorted, distinct, positive lengths summing to `n`.
    pub(crate) fn from_sorted_parts(n: usize, parts: Vec<(usize, usize)>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert_eq!(parts.iter().map(|&(l, m)| l * m).sum::<usize>(), n);
        Self { n, parts }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_sorted_parts(n, vec![(1, n)])
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn num_cycles(&self) -> usize {
        self.parts.iter().map(|p| p.1).sum()
    }

    pub fn multiplicity(&self, len: usize) -> usize {
        self.parts
            .binary_search_by_key(&len, |p| p.0)
            .map(|i| self.parts[i].1)
            .unwrap_or(0)
    }

    /// All lengths with repetition, ascending.
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts
            .iter()
            .flat_map(|&(l, m)| std::iter::repeat_n(l, m))
    }

    pub fn parity(&self) -> Parity {
        view::parity(self.n, &self.parts)
    }

    pub fn is_cycle(&self) -> bool {
        view::is_cycle(&self.parts)
    }

    /// Order of any permutation with this cycle type.
    pub fn order(&self) -> BigUint {
        lcm_all(self.parts.iter().map(|p| p.0 as u64))
    }

    /// Cycle type of `sigma^exponent` for any `sigma` of this type: a cycle of
    /// length `l` splits into `gcd(l, e)` cycles of length `l / gcd(l, e)`.
    pub fn power(&self, exponent: &BigUint) -> CycleType {
        let pairs = self.parts.iter().map(|&(l, m)| {
            let r = (exponent % l).try_into().unwrap_or(0usize);
            let g = r.gcd(&l);
            (l / g, m * g)
        });
        CycleType::new(self.n, pairs.collect::<Vec<_>>()).expect("power preserves the degree")
    }

    /// Smallest prime `p` (at most `max_prime` when given) such that `p` is
    /// the length of exactly one cycle and no other cycle length is divisible
    /// by `p`. The exponent is the lcm of the remaining cycle lengths, which
    /// kills every other cycle while staying coprime to `p`.
    pub fn prime_cycle_witness(&self, max_prime: Option<u64>) -> Option<PrimeCycleWitness> {
        let prime = view::witness_prime(&self.parts, max_prime)?;
        let exponent = lcm_all(
            self.parts
                .iter()
                .filter(|p| p.0 as u64 != prime)
                .map(|p| p.0 as u64),
        );
        Some(PrimeCycleWitness {
            prime,
            exponent,
            moved: prime,
        })
    }

    /// Samples the cycle type of a uniform random permutation of degree `n`.
    ///
    /// The cycle through the smallest unplaced point has length uniform on
    /// `1..=remaining`; repeating on the rest needs one draw per cycle.
    pub fn sample(n: usize, rng: &mut RandomStream) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("degree must be at least 1"));
        }
        let mut lengths = Vec::new();
        let mut remaining = n as u64;
        while remaining > 0 {
            let len = rng.one_to(remaining);
            lengths.push(len as usize);
            remaining -= len;
        }
        lengths.sort_unstable();
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for len in lengths {
            match parts.last_mut() {
                Some(last) if last.0 == len => last.1 += 1,
                _ => parts.push((len, 1)),
            }
        }
        Ok(Self::from_sorted_parts(n, parts))
    }
}

/// Predicates on raw `(length, multiplicity)` slices, shared with the
/// partition census so it can avoid building a `CycleType` per leaf.
pub(crate) mod view {
    use super::*;

    pub fn parity(n: usize, parts: &[(usize, usize)]) -> Parity {
        let cycles: usize = parts.iter().map(|p| p.1).sum();
        if (n - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_cycle(parts: &[(usize, usize)]) -> bool {
        let mut nontrivial = parts.iter().filter(|p| p.0 > 1);
        matches!(
            (nontrivial.next(), nontrivial.next()),
            (Some(&(_, 1)), None)
        )
    }

    pub fn witness_prime(parts: &[(usize, usize)], max_prime: Option<u64>) -> Option<u64> {
        parts
            .iter()
            .filter(|&&(l, m)| m == 1 && max_prime.is_none_or(|cap| l as u64 <= cap))
            .map(|p| p.0)
            .filter(|&l| is_prime(l as u64))
            .find(|&p| parts.iter().all(|&(l, _)| l == p || l % p != 0))
            .map(|p| p as u64)
    }

    /// At least one cycle of length exactly `p` and at least one other cycle
    /// whose length is a multiple of `p`.
    pub fn has_shared_prime_multiple(parts: &[(usize, usize)], p: usize) -> bool {
        let mut exact = 0;
        let mut divisible = 0;
        for &(l, m) in parts {
            if l % p == 0 {
                divisible += m;
                if l == p {
                    exact += m;
                }
            }
        }
        exact >= 1 && divisible >= 2
    }
}

impl fmt::Display for CycleType {
    /// Lengths in descending order, `len^mult` for repeated lengths: `3,2^2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(l, m)) in self.parts.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Accepts comma-separated lengths, each optionally `len^mult`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in s.split(',').map(str::trim) {
            let (l, m) = match tok.split_once('^') {
                Some((l, m)) => (l.trim(), m.trim()),
                None => (tok, "1"),
            };
            let l: usize = l
                .parse()
                .map_err(|_| Error::parse(format!("bad cycle length {tok:?}")))?;
            let m: usize = m
                .parse()
                .map_err(|_| Error::parse(format!("bad multiplicity in {tok:?}")))?;
            pairs.push((l, m));
        }
        let n = pairs.iter().map(|&(l, m)| l * m).sum();
        CycleType::new(n, pairs).map_err(|e| Error::parse(e.to_string()))
    }
}
