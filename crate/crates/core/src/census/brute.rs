//! Enumeration of every permutation of small degree; the reference oracle
//! for the class-based census.

use num_bigint::BigUint;
use num_traits::Zero;

use super::event::PreparedEvent;
use super::partition::ClassCounts;
use crate::cycle_type::{view, Parity};
use crate::error::{Error, Result};

pub const BRUTE_FORCE_CAP: usize = 9;

/// Calls `visit` with the one-line images of every permutation of `0..n`
/// (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&a);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Cycle type of a raw image array into `parts` (sorted pairs).
fn cycle_parts(images: &[usize], counts: &mut [usize], parts: &mut Vec<(usize, usize)>) {
    let n = images.len();
    counts.iter_mut().for_each(|c| *c = 0);
    let mut seen: u64 = 0;
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            len += 1;
            x = images[x];
        }
        counts[len] += 1;
    }
    parts.clear();
    parts.extend(
        counts
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m > 0)
            .map(|(l, &m)| (l, m)),
    );
}

/// Per-event counts by applying each event to all `n!` permutations.
pub fn brute_force_counts(n: usize, events: &[PreparedEvent]) -> Result<ClassCounts> {
    if n == 0 {
        return Err(Error::domain("degree must be at least 1"));
    }
    if n > BRUTE_FORCE_CAP {
        return Err(Error::Resource {
            what: "brute-force degree",
            value: n as u64,
            cap: BRUTE_FORCE_CAP as u64,
            hint: "use the exact partition census instead",
        });
    }
    if let Some(ev) = events.iter().find(|e| e.degree() != n) {
        return Err(Error::domain(format!(
            "event {} was prepared for degree {}, census is for {n}",
            ev.event(),
            ev.degree()
        )));
    }
    let mut total = [0u64; 2];
    let mut per_event = vec![[0u64; 2]; events.len()];
    let mut counts = vec![0usize; n + 1];
    let mut parts = Vec::with_capacity(n);
    for_each_permutation(n, |images| {
        cycle_parts(images, &mut counts, &mut parts);
        let slot = match view::parity(n, &parts) {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        total[slot] += 1;
        for (ev, acc) in events.iter().zip(per_event.iter_mut()) {
            if ev.holds(&parts) {
                acc[slot] += 1;
            }
        }
    });
    let big = |x: u64| {
        if x == 0 {
            BigUint::zero()
        } else {
            BigUint::from(x)
        }
    };
    Ok(ClassCounts {
        n,
        total: [big(total[0]), big(total[1])],
        per_event: per_event
            .into_iter()
            .map(|[e, o]| [big(e), big(o)])
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn heap_visits_each_permutation_once() {
        for n in 1..=6 {
            let mut seen = HashSet::new();
            for_each_permutation(n, |a| {
                assert!(seen.insert(a.to_vec()));
            });
            assert_eq!(seen.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn cap() {
        use crate::census::event::Event;
        let ev = Event::Always.prepare(10).unwrap();
        assert!(brute_force_counts(10, &[ev]).is_err());
    }
}
