//! Proportions of `S_n` (or `A_n`) in cycle-type events, measured three ways:
//! an exact sum over conjugacy classes, enumeration of all permutations, and
//! Monte Carlo sampling.

mod bounds;
mod brute;
mod event;
mod monte_carlo;
mod partition;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::json;

pub use bounds::{long_cycle_proportion, structure_bound, StructureBound};
pub use brute::{brute_force_counts, for_each_permutation, BRUTE_FORCE_CAP};
pub use event::{Event, PreparedEvent};
pub use monte_carlo::{estimate, Estimate, CHUNK_SIZE};
pub use partition::{
    centralizer_order, class_counts, class_counts_capped, for_each_partition, partition_cap,
    partition_weights, ClassCounts, PartitionWeight, CAP_ENV_VAR, DEFAULT_PARTITION_CAP,
    HARD_PARTITION_CAP,
};

use crate::arith::ratio_to_f64;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactPartition,
    BruteForce,
    MonteCarlo { samples: u64, seed: u64 },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ExactPartition => "exact-partition",
            Method::BruteForce => "brute-force",
            Method::MonteCarlo { .. } => "monte-carlo",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    #[serde(rename = "S")]
    Symmetric,
    #[serde(rename = "A")]
    Alternating,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Symmetric => "S",
            Group::Alternating => "A",
        })
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" => Ok(Group::Symmetric),
            "A" => Ok(Group::Alternating),
            _ => Err(Error::parse(format!("unknown group {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Proportion {
    Exact(BigRational),
    Estimate(Estimate),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    pub method: Method,
    pub event: Event,
    pub group: Group,
    pub proportion: Proportion,
}

impl CensusReport {
    pub fn exact(&self) -> Option<&BigRational> {
        match &self.proportion {
            Proportion::Exact(q) => Some(q),
            Proportion::Estimate(_) => None,
        }
    }

    pub fn value(&self) -> f64 {
        match &self.proportion {
            Proportion::Exact(q) => ratio_to_f64(q),
            Proportion::Estimate(e) => e.proportion(),
        }
    }

    /// Zero for exact methods.
    pub fn stderr(&self) -> f64 {
        match &self.proportion {
            Proportion::Exact(_) => 0.0,
            Proportion::Estimate(e) => e.stderr(),
        }
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let mut v = json!({
            "n": self.n,
            "method": self.method.name(),
            "event": self.event.to_string(),
            "group": self.group.to_string(),
        });
        let obj = v.as_object_mut().expect("object");
        match &self.proportion {
            Proportion::Exact(q) => {
                obj.insert("proportion_num".into(), json!(q.numer().to_string()));
                obj.insert("proportion_den".into(), json!(q.denom().to_string()));
            }
            Proportion::Estimate(e) => {
                obj.insert(
                    "estimate".into(),
                    json!(format_fixed(e.proportion(), digits)),
                );
                obj.insert("stderr".into(), json!(format_fixed(e.stderr(), digits)));
                obj.insert("samples".into(), json!(e.samples));
                obj.insert("seed".into(), json!(e.seed));
            }
        }
        v
    }

    pub fn to_row(&self, digits: usize) -> CensusRow {
        let (num, den, samples, seed) = match &self.proportion {
            Proportion::Exact(q) => (
                Some(q.numer().to_string()),
                Some(q.denom().to_string()),
                None,
                None,
            ),
            Proportion::Estimate(e) => (None, None, Some(e.samples), Some(e.seed)),
        };
        CensusRow {
            n: self.n,
            event: self.event.to_string(),
            group: self.group,
            method: self.method.name().to_string(),
            proportion_num: num,
            proportion_den: den,
            estimate: format_fixed(self.value(), digits),
            stderr: format_fixed(self.stderr(), digits),
            samples,
            seed,
        }
    }

    pub fn to_mc_row(&self, digits: usize) -> McRow {
        let row = self.to_row(digits);
        McRow {
            n: row.n,
            event: row.event,
            method: row.method,
            estimate: row.estimate,
            stderr: row.stderr,
            samples: row.samples,
            seed: row.seed,
        }
    }
}

/// Fixed-point rendering with `digits` decimals.
pub fn format_fixed(x: f64, digits: usize) -> String {
    format!("{x:.digits$}")
}

/// CSV schema of `census`: one row per report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub event: String,
    pub group: Group,
    pub method: String,
    pub proportion_num: Option<String>,
    pub proportion_den: Option<String>,
    pub estimate: String,
    pub stderr: String,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

/// CSV schema of `mc-table`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McRow {
    pub n: usize,
    pub event: String,
    pub method: String,
    pub estimate: String,
    pub stderr: String,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

/// Measures several events at one degree in a single pass.
pub fn census_many(
    n: usize,
    events: &[Event],
    method: Method,
    group: Group,
) -> Result<Vec<CensusReport>> {
    let prepared = events
        .iter()
        .map(|e| e.prepare(n))
        .collect::<Result<Vec<_>>>()?;
    let alternating = group == Group::Alternating;
    let proportions: Vec<Proportion> = match method {
        Method::ExactPartition | Method::BruteForce => {
            let counts = if method == Method::BruteForce {
                brute_force_counts(n, &prepared)?
            } else {
                class_counts(n, &prepared)?
            };
            (0..events.len())
                .map(|i| {
                    Proportion::Exact(if alternating {
                        counts.alternating(i)
                    } else {
                        counts.symmetric(i)
                    })
                })
                .collect()
        }
        Method::MonteCarlo { samples, seed } => prepared
            .iter()
            .map(|p| estimate(p, samples, seed, alternating).map(Proportion::Estimate))
            .collect::<Result<_>>()?,
    };
    Ok(events
        .iter()
        .zip(proportions)
        .map(|(event, proportion)| CensusReport {
            n,
            method,
            event: event.clone(),
            group,
            proportion,
        })
        .collect())
}

pub fn census(n: usize, event: &Event, method: Method, group: Group) -> Result<CensusReport> {
    Ok(census_many(n, std::slice::from_ref(event), method, group)?
        .pop()
        .expect("one report per event"))
}

/// Exact proportion of `S_n` in the event, summed over conjugacy classes.
pub fn partition_census(n: usize, event: &Event) -> Result<BigRational> {
    let counts = class_counts(n, &[event.prepare(n)?])?;
    Ok(counts.symmetric(0))
}

/// Exact proportion of `S_n` in the event by enumerating all `n!` elements.
pub fn brute_force_census(n: usize, event: &Event) -> Result<BigRational> {
    let counts = brute_force_counts(n, &[event.prepare(n)?])?;
    Ok(counts.symmetric(0))
}

pub fn monte_carlo_census(
    n: usize,
    event: &Event,
    samples: u64,
    seed: u64,
) -> Result<CensusReport> {
    census(
        n,
        event,
        Method::MonteCarlo { samples, seed },
        Group::Symmetric,
    )
}

/// Share of permutations with a cycle of prime length `p > (ln n)^2`.
pub fn t_proportion(n: usize, method: Method) -> Result<CensusReport> {
    census(n, &Event::T, method, Group::Symmetric)
}

/// Share with a `p`-cycle plus another cycle of length divisible by `p`.
pub fn u_np_exact(n: usize, p: u64, method: Method) -> Result<CensusReport> {
    census(n, &Event::U(p), method, Group::Symmetric)
}

/// Union of the `U(p)` events over primes `p > (ln n)^2`, with the `2/ln n`
/// bound on its size.
pub fn u_union(n: usize, method: Method) -> Result<(CensusReport, f64)> {
    if n < 2 {
        return Err(Error::domain("the union bound needs n >= 2"));
    }
    let report = census(n, &Event::UUnion, method, Group::Symmetric)?;
    Ok((report, 2.0 / (n as f64).ln()))
}

/// Share with no power that is a prime-length cycle; `jordan` restricts the
/// prime to `p <= n - 3`, `alternating` measures inside `A_n`.
pub fn failure_proportion(
    n: usize,
    method: Method,
    jordan: bool,
    alternating: bool,
) -> Result<CensusReport> {
    let event = if jordan {
        Event::FailureJordan
    } else {
        Event::Failure
    };
    let group = if alternating {
        Group::Alternating
    } else {
        Group::Symmetric
    };
    census(n, &event, method, group)
}
