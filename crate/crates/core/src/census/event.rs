//! Events: class functions of the cycle type, named by short descriptors.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;
use crate::cycle_type::view;
use crate::error::{Error, Result};
use crate::setspec::parse_set;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Event {
    /// Every permutation.
    Always,
    /// Some power is a cycle of prime length.
    PrimePowerCycle,
    /// Some power is a `p`-cycle with `p` prime and `p <= n - 3`.
    PrimePowerCycleJordan,
    /// No power is a cycle of prime length.
    Failure,
    /// No power is a `p`-cycle with `p` prime and `p <= n - 3`.
    FailureJordan,
    /// A cycle whose length is a prime `p > (ln n)^2`.
    T,
    /// A cycle of length exactly `p` and another cycle of length divisible by `p`.
    U(u64),
    /// `U(p)` for some prime `p > (ln n)^2`.
    UUnion,
    /// `T` and not `UUnion`.
    V,
    /// A cycle of length `n`, `n - 1` or `n - 2`.
    LongCycle,
    /// A single cycle through all `n` points.
    NCycle,
    /// Some cycle length lies in the set (set grammar, resolved against `n`).
    Hits(String),
    /// No cycle length lies in the set.
    Avoids(String),
}

impl Event {
    /// Resolves the event against a degree.
    pub fn prepare(&self, n: usize) -> Result<PreparedEvent> {
        if n == 0 {
            return Err(Error::domain("degree must be at least 1"));
        }
        let set = match self {
            Event::Hits(s) | Event::Avoids(s) => parse_set(s, n)?,
            _ => BTreeSet::new(),
        };
        if let Event::U(p) = self {
            if !is_prime(*p) {
                return Err(Error::domain(format!("U:p needs a prime p, got {p}")));
            }
            if *p as usize > n {
                return Err(Error::domain(format!(
                    "U:p needs p <= n, got p = {p}, n = {n}"
                )));
            }
        }
        let window_floor = if n >= 2 {
            let l = (n as f64).ln();
            l * l
        } else {
            f64::INFINITY
        };
        let table_len = n.min(1 << 16) + 1;
        let prime_table = (0..table_len).map(|k| is_prime(k as u64)).collect();
        Ok(PreparedEvent {
            event: self.clone(),
            n,
            window_floor,
            set,
            prime_table,
        })
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Always => f.write_str("always"),
            Event::PrimePowerCycle => f.write_str("prime-power-cycle"),
            Event::PrimePowerCycleJordan => f.write_str("prime-power-cycle-jordan"),
            Event::Failure => f.write_str("failure"),
            Event::FailureJordan => f.write_str("failure-jordan"),
            Event::T => f.write_str("T"),
            Event::U(p) => write!(f, "U:p={p}"),
            Event::UUnion => f.write_str("U-union"),
            Event::V => f.write_str("V"),
            Event::LongCycle => f.write_str("long-cycle"),
            Event::NCycle => f.write_str("n-cycle"),
            Event::Hits(s) => write!(f, "hits:{s}"),
            Event::Avoids(s) => write!(f, "avoid:{s}"),
        }
    }
}

impl FromStr for Event {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "always" => Event::Always,
            "prime-power-cycle" => Event::PrimePowerCycle,
            "prime-power-cycle-jordan" => Event::PrimePowerCycleJordan,
            "failure" => Event::Failure,
            "failure-jordan" => Event::FailureJordan,
            "T" => Event::T,
            "U-union" => Event::UUnion,
            "V" => Event::V,
            "long-cycle" => Event::LongCycle,
            "n-cycle" => Event::NCycle,
            other => {
                if let Some(p) = other.strip_prefix("U:p=") {
                    Event::U(
                        p.parse()
                            .map_err(|_| Error::parse(format!("bad prime in event {other:?}")))?,
                    )
                } else if let Some(set) = other.strip_prefix("hits:") {
                    Event::Hits(set.to_string())
                } else if let Some(set) = other.strip_prefix("avoid:") {
                    Event::Avoids(set.to_string())
                } else {
                    return Err(Error::parse(format!(
                        "unknown event {other:?}; expected one of prime-power-cycle, \
                         prime-power-cycle-jordan, failure, failure-jordan, T, U:p=<p>, \
                         U-union, V, long-cycle, n-cycle, hits:<set>, avoid:<set>, always"
                    )));
                }
            }
        })
    }
}

/// An event bound to a degree, ready to test cycle types.
#[derive(Debug, Clone)]
pub struct PreparedEvent {
    event: Event,
    n: usize,
    window_floor: f64,
    set: BTreeSet<usize>,
    prime_table: Vec<bool>,
}

impl PreparedEvent {
    pub fn event(&self) -> &Event {
        &self.event
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    fn prime(&self, k: usize) -> bool {
        match self.prime_table.get(k) {
            Some(&b) => b,
            None => is_prime(k as u64),
        }
    }

    fn jordan_cap(&self) -> u64 {
        self.n.saturating_sub(3) as u64
    }

    fn in_t(&self, parts: &[(usize, usize)]) -> bool {
        parts
            .iter()
            .any(|&(l, _)| l as f64 > self.window_floor && self.prime(l))
    }

    fn in_u_union(&self, parts: &[(usize, usize)]) -> bool {
        parts.iter().any(|&(l, _)| {
            l as f64 > self.window_floor
                && self.prime(l)
                && view::has_shared_prime_multiple(parts, l)
        })
    }

    fn has_witness(&self, parts: &[(usize, usize)], cap: Option<u64>) -> bool {
        parts
            .iter()
            .filter(|&&(l, m)| m == 1 && cap.is_none_or(|c| l as u64 <= c) && self.prime(l))
            .any(|&(p, _)| parts.iter().all(|&(l, _)| l == p || l % p != 0))
    }

    /// Tests a cycle type given as sorted `(length, multiplicity)` pairs
    /// summing to the prepared degree.
    pub fn holds(&self, parts: &[(usize, usize)]) -> bool {
        match &self.event {
            Event::Always => true,
            Event::PrimePowerCycle => self.has_witness(parts, None),
            Event::PrimePowerCycleJordan => self.has_witness(parts, Some(self.jordan_cap())),
            Event::Failure => !self.has_witness(parts, None),
            Event::FailureJordan => !self.has_witness(parts, Some(self.jordan_cap())),
            Event::T => self.in_t(parts),
            Event::U(p) => view::has_shared_prime_multiple(parts, *p as usize),
            Event::UUnion => self.in_u_union(parts),
            Event::V => self.in_t(parts) && !self.in_u_union(parts),
            Event::LongCycle => parts.iter().any(|&(l, _)| l + 2 >= self.n),
            Event::NCycle => parts.len() == 1 && parts[0] == (self.n, 1),
            Event::Hits(_) => parts.iter().any(|(l, _)| self.set.contains(l)),
            Event::Avoids(_) => !parts.iter().any(|(l, _)| self.set.contains(l)),
        }
    }
}
