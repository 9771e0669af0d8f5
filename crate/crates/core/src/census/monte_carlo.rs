//! Monte Carlo estimates over sampled cycle types.
//!
//! Samples are cut into fixed-size chunks; chunk `i` draws from stream `i`
//! of the master seed. Chunk hit counts are integers, so the total depends
//! only on `(seed, samples, CHUNK_SIZE)` and never on thread scheduling.

use rayon::prelude::*;

use super::event::PreparedEvent;
use crate::cycle_type::{CycleType, Parity};
use crate::error::{Error, Result};
use crate::rng::RandomStream;

pub const CHUNK_SIZE: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub hits: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Estimate {
    pub fn proportion(&self) -> f64 {
        self.hits as f64 / self.samples as f64
    }

    /// `sqrt(q (1 - q) / samples)`.
    pub fn stderr(&self) -> f64 {
        let q = self.proportion();
        (q * (1.0 - q) / self.samples as f64).sqrt()
    }
}

/// Estimates the proportion of `S_n` (or of `A_n` when `alternating`) in
/// the event. Even permutations are obtained by discarding odd draws.
pub fn estimate(
    event: &PreparedEvent,
    samples: u64,
    seed: u64,
    alternating: bool,
) -> Result<Estimate> {
    if samples == 0 {
        return Err(Error::domain("samples must be at least 1"));
    }
    let n = event.degree();
    let chunks = samples.div_ceil(CHUNK_SIZE);
    let hits = (0..chunks)
        .into_par_iter()
        .map(|chunk| -> Result<u64> {
            let len = CHUNK_SIZE.min(samples - chunk * CHUNK_SIZE);
            let mut rng = RandomStream::new(seed, chunk);
            let mut hits = 0;
            let mut taken = 0;
            while taken < len {
                let ct = CycleType::sample(n, &mut rng)?;
                if alternating && ct.parity() == Parity::Odd {
                    continue;
                }
                taken += 1;
                if event.holds(ct.parts()) {
                    hits += 1;
                }
            }
            Ok(hits)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(Estimate {
        hits,
        samples,
        seed,
    })
}
