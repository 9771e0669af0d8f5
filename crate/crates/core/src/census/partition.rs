//! Exact census over conjugacy classes.
//!
//! Partitions of `n` are generated as sorted `(length, multiplicity)` stacks.
//! Along the way the class size `n!/z` is built as a product of integer
//! factors: placing `m` cycles of length `l` among `r` free points can be
//! done in `r! / ((r - l m)! l^m m!)` ways. Each top-level choice is an
//! independent subtree; subtrees are summed exactly, so the split into
//! parallel tasks cannot change the result.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::event::PreparedEvent;
use crate::arith::factorial;
use crate::cycle_type::{view, CycleType, Parity};
use crate::error::{Error, Result};

pub const DEFAULT_PARTITION_CAP: usize = 70;
pub const HARD_PARTITION_CAP: usize = 90;
pub const CAP_ENV_VAR: &str = "PERMCENSUS_MAX_N";

/// Effective cap: `PERMCENSUS_MAX_N` when set (clamped to the hard cap),
/// otherwise the default.
pub fn partition_cap() -> usize {
    std::env::var(CAP_ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_PARTITION_CAP, |v| v.min(HARD_PARTITION_CAP))
}

/// Number of permutations, split by parity, in each event (and overall).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCounts {
    pub n: usize,
    /// `[even, odd]` totals over all of `S_n`.
    pub total: [BigUint; 2],
    /// `[even, odd]` counts per event, in the order given.
    pub per_event: Vec<[BigUint; 2]>,
}

impl ClassCounts {
    fn zero(n: usize, events: usize) -> Self {
        Self {
            n,
            total: [BigUint::zero(), BigUint::zero()],
            per_event: vec![[BigUint::zero(), BigUint::zero()]; events],
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for i in 0..2 {
            self.total[i] += &other.total[i];
        }
        for (a, b) in self.per_event.iter_mut().zip(other.per_event) {
            a[0] += &b[0];
            a[1] += &b[1];
        }
        self
    }

    /// Proportion of `S_n` in event `i`.
    pub fn symmetric(&self, i: usize) -> BigRational {
        let [e, o] = &self.per_event[i];
        BigRational::new((e + o).into(), (&self.total[0] + &self.total[1]).into())
    }

    /// Proportion of the even permutations in event `i`.
    pub fn alternating(&self, i: usize) -> BigRational {
        BigRational::new(
            self.per_event[i][0].clone().into(),
            self.total[0].clone().into(),
        )
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("degree must be at least 1"));
    }
    if n > cap {
        return Err(Error::Resource {
            what: "partition census degree",
            value: n as u64,
            cap: cap as u64,
            hint: "set PERMCENSUS_MAX_N (at most 90) or use Monte Carlo",
        });
    }
    Ok(())
}

/// `factors[r][l][m] = r! / ((r - l m)! l^m m!)`.
struct FactorTable {
    factors: Vec<Vec<Vec<BigUint>>>,
}

impl FactorTable {
    fn new(n: usize) -> Self {
        let fact: Vec<BigUint> = (0..=n as u64).map(factorial).collect();
        let factors = (0..=n)
            .map(|r| {
                (0..=r)
                    .map(|l| {
                        if l == 0 {
                            return Vec::new();
                        }
                        (0..=r / l)
                            .map(|m| {
                                let denom = &fact[r - l * m]
                                    * num_traits::pow(BigUint::from(l), m)
                                    * &fact[m];
                                &fact[r] / denom
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self { factors }
    }

    fn get(&self, r: usize, l: usize, m: usize) -> &BigUint {
        &self.factors[r][l][m]
    }
}

struct Walker<'a> {
    n: usize,
    table: &'a FactorTable,
    events: &'a [PreparedEvent],
    stack: Vec<(usize, usize)>,
    out: ClassCounts,
}

impl Walker<'_> {
    fn leaf(&mut self, count: &BigUint) {
        let slot = match view::parity(self.n, &self.stack) {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        self.out.total[slot] += count;
        for (ev, acc) in self.events.iter().zip(self.out.per_event.iter_mut()) {
            if ev.holds(&self.stack) {
                acc[slot] += count;
            }
        }
    }

    /// Extends the stack with lengths `>= start` covering `remaining` points.
    fn descend(&mut self, start: usize, remaining: usize, count: &BigUint) {
        if remaining == 0 {
            self.leaf(count);
            return;
        }
        for l in start..=remaining {
            for m in 1..=remaining / l {
                let next = count * self.table.get(remaining, l, m);
                self.stack.push((l, m));
                self.descend(l + 1, remaining - l * m, &next);
                self.stack.pop();
            }
        }
    }
}

/// Exact per-event counts over every conjugacy class of `S_n`.
pub fn class_counts(n: usize, events: &[PreparedEvent]) -> Result<ClassCounts> {
    class_counts_capped(n, events, partition_cap())
}

pub fn class_counts_capped(n: usize, events: &[PreparedEvent], cap: usize) -> Result<ClassCounts> {
    check_cap(n, cap)?;
    if let Some(ev) = events.iter().find(|e| e.degree() != n) {
        return Err(Error::domain(format!(
            "event {} was prepared for degree {}, census is for {n}",
            ev.event(),
            ev.degree()
        )));
    }
    let table = FactorTable::new(n);
    let roots: Vec<(usize, usize)> = (1..=n)
        .flat_map(|l| (1..=n / l).map(move |m| (l, m)))
        .collect();
    let out = roots
        .into_par_iter()
        .map(|(l, m)| {
            let mut w = Walker {
                n,
                table: &table,
                events,
                stack: vec![(l, m)],
                out: ClassCounts::zero(n, events.len()),
            };
            let count = table.get(n, l, m).clone();
            w.descend(l + 1, n - l * m, &count);
            w.out
        })
        .reduce(|| ClassCounts::zero(n, events.len()), ClassCounts::merge);
    Ok(out)
}

/// Conjugacy class with its share of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionWeight {
    pub parts: CycleType,
    /// `1/z` with `z = prod l^m m!`.
    pub weight: BigRational,
}

/// `z = prod_l l^m m!`.
pub fn centralizer_order(parts: &[(usize, usize)]) -> BigUint {
    parts.iter().fold(BigUint::one(), |acc, &(l, m)| {
        acc * num_traits::pow(BigUint::from(l), m) * factorial(m as u64)
    })
}

/// Calls `visit` on every partition of `n` as sorted `(length, multiplicity)`
/// pairs.
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    fn rec(
        start: usize,
        remaining: usize,
        stack: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        if remaining == 0 {
            visit(stack);
            return;
        }
        for l in start..=remaining {
            for m in 1..=remaining / l {
                stack.push((l, m));
                rec(l + 1, remaining - l * m, stack, visit);
                stack.pop();
            }
        }
    }
    rec(1, n, &mut Vec::new(), &mut visit);
}

/// Every class of `S_n` with its weight `1/z`. Materializes all partitions;
/// intended for small `n`.
pub fn partition_weights(n: usize) -> Result<Vec<PartitionWeight>> {
    check_cap(n, partition_cap())?;
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        out.push(PartitionWeight {
            parts: CycleType::from_sorted_parts(n, parts.to_vec()),
            weight: BigRational::new(BigUint::one().into(), centralizer_order(parts).into()),
        });
    });
    Ok(out)
}
