use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest sieve limit accepted unless the caller raises the cap.
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// 64-bit words per segment; 32 KiB of bits, 2^18 odd numbers.
const SEGMENT_WORDS: usize = 4096;

/// Bit-packed odd-only sieve: bit `i` stands for `2i + 1` and is set when
/// that number is composite (or 1).
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    limit: u64,
    composite: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_cap(limit, DEFAULT_SIEVE_CAP)
    }

    /// Segments are sieved in parallel; each one owns a disjoint word range,
    /// so the result does not depend on scheduling.
    pub fn with_cap(limit: u64, cap: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::domain("sieve limit must be at least 2"));
        }
        if limit > cap {
            return Err(Error::Resource {
                what: "sieve limit",
                value: limit,
                cap,
                hint: "raise the sieve cap explicitly for larger limits",
            });
        }
        let odd_count = limit.div_ceil(2);
        let words = odd_count.div_ceil(64) as usize;
        let base = small_odd_primes(isqrt(limit));
        let mut composite = vec![0u64; words];
        composite
            .par_chunks_mut(SEGMENT_WORDS)
            .enumerate()
            .for_each(|(seg, chunk)| {
                let first_bit = (seg * SEGMENT_WORDS * 64) as u64;
                mark_segment(chunk, first_bit, &base);
            });
        composite[0] |= 1; // 1 is not prime
                           // bits past the limit read as composite
        let tail = odd_count % 64;
        if tail != 0 {
            *composite.last_mut().unwrap() |= !0u64 << tail;
        }
        Ok(Self { limit, composite })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn is_prime(&self, k: u64) -> bool {
        assert!(
            k <= self.limit,
            "{k} is beyond the sieve limit {}",
            self.limit
        );
        if k == 2 {
            return true;
        }
        if k.is_multiple_of(2) {
            return false;
        }
        let i = k / 2;
        self.composite[(i / 64) as usize] >> (i % 64) & 1 == 0
    }

    /// Primes in increasing order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        let two = (self.limit >= 2).then_some(2);
        let odd = self.composite.iter().enumerate().flat_map(|(w, &word)| {
            let mut free = !word;
            std::iter::from_fn(move || {
                if free == 0 {
                    return None;
                }
                let bit = free.trailing_zeros() as u64;
                free &= free - 1;
                Some(2 * (w as u64 * 64 + bit) + 1)
            })
        });
        two.into_iter().chain(odd)
    }

    /// Primes `p` with `lo < p <= hi`, increasing.
    pub fn primes_between(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        let hi = hi.min(self.limit);
        self.primes()
            .skip_while(move |&p| p <= lo)
            .take_while(move |&p| p <= hi)
    }

    pub fn count(&self) -> u64 {
        let odd: u64 = self
            .composite
            .iter()
            .map(|w| u64::from(w.count_zeros()))
            .sum();
        odd + 1
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Odd primes up to `limit` by a plain byte sieve.
fn small_odd_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut is_composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 3..=limit {
        if i % 2 == 1 && !is_composite[i] {
            out.push(i as u64);
            for j in (i * i..=limit).step_by(2 * i) {
                is_composite[j] = true;
            }
        }
    }
    out
}

fn mark_segment(chunk: &mut [u64], first_bit: u64, base: &[u64]) {
    let end_bit = first_bit + chunk.len() as u64 * 64;
    let low = 2 * first_bit + 1;
    for &p in base {
        // first odd multiple of p that is >= max(p*p, low)
        let mut m = (p * p).max(low.div_ceil(p) * p);
        if m % 2 == 0 {
            m += p;
        }
        let mut bit = m / 2;
        while bit < end_bit {
            let local = bit - first_bit;
            chunk[(local / 64) as usize] |= 1 << (local % 64);
            bit += p;
        }
    }
}
