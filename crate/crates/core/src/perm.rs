//! Permutations in one-line image form.
//!
//! Points are `0..n` internally. All text uses points `1..=n`: one-line form
//! `"2 1 4 5 3"` and cycle notation `"(1 2)(3 4 5)"`, where fixed points are
//! left implicit and the identity prints as `"()"`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::rng::RandomStream;

/// Largest degree `Permutation::sample` will allocate by default.
pub const DEFAULT_MAX_SAMPLE_DEGREE: usize = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the image of point `i` (0-based).
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::domain("degree must be at least 1"));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::domain(format!(
                    "images are not a permutation of 1..={n}"
                )));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Disjoint cycles (including fixed points), each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut counts = vec![0usize; n + 1];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            counts[len] += 1;
        }
        let parts = counts
            .into_iter()
            .enumerate()
            .filter(|&(_, m)| m > 0)
            .collect();
        CycleType::from_sorted_parts(n, parts)
    }

    /// `self^exponent`, rotating each cycle by `exponent mod length`.
    pub fn power(&self, exponent: &BigUint) -> Permutation {
        let mut images = vec![0; self.degree()];
        for cycle in self.cycles() {
            let len = cycle.len();
            let shift = (exponent % len)
                .to_usize()
                .expect("remainder below cycle length");
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + shift) % len];
            }
        }
        Permutation { images }
    }

    pub fn pow_u64(&self, exponent: u64) -> Permutation {
        self.power(&BigUint::from(exponent))
    }

    /// `self` followed by `other`: the result maps `i` to `other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Some permutation with the given cycle type: cycles laid out on
    /// consecutive points, shortest first.
    pub fn realize(ct: &CycleType) -> Permutation {
        let mut images = Vec::with_capacity(ct.degree());
        let mut base = 0;
        for len in ct.lengths() {
            images.extend((1..len).map(|k| base + k));
            images.push(base);
            base += len;
        }
        Permutation { images }
    }

    /// Uniform random permutation by an unbiased Fisher-Yates shuffle.
    pub fn sample(n: usize, rng: &mut RandomStream) -> Result<Self> {
        Self::sample_capped(n, rng, DEFAULT_MAX_SAMPLE_DEGREE)
    }

    pub fn sample_capped(n: usize, rng: &mut RandomStream, max_degree: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("degree must be at least 1"));
        }
        if n > max_degree {
            return Err(Error::Resource {
                what: "permutation degree",
                value: n as u64,
                cap: max_degree as u64,
                hint: "sample cycle types instead for large degrees",
            });
        }
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            images.swap(i, j);
        }
        Ok(Permutation { images })
    }

    /// One-line form with 1-based points: `"2 1 4 5 3"`.
    pub fn to_one_line(&self) -> String {
        let words: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        words.join(" ")
    }

    pub fn parse_one_line(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|w| match w.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::parse(format!("bad point {w:?} in one-line form"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images).map_err(|e| Error::parse(e.to_string()))
    }

    /// Canonical cycle notation: nontrivial cycles only, each led by its
    /// smallest point, ordered by that point.
    pub fn to_cycle_notation(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            out.push('(');
            let words: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            out.push_str(&words.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Parses cycle notation over points `1..=n`; unlisted points are fixed.
    pub fn parse_cycle_notation(s: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::parse("degree must be at least 1"));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::parse("unterminated cycle"))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| match w.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    _ => Err(Error::parse(format!("point {w:?} outside 1..={n}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            for &x in &points {
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::parse(format!("point {} repeated", x + 1)));
                }
            }
            for (i, &x) in points.iter().enumerate() {
                images[x] = points[(i + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_type::Parity;
    use proptest::prelude::*;

    fn one_line(s: &str) -> Permutation {
        Permutation::parse_one_line(s).unwrap()
    }

    /// Sign by sorting with adjacent swaps, independent of cycle structure.
    fn sign_by_transpositions(p: &Permutation) -> Parity {
        let mut v = p.images().to_vec();
        let mut swaps = 0;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if swaps % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn all_permutations(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation::new(prefix.clone()).unwrap());
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::parse_one_line("1 1").is_err());
        assert!(Permutation::parse_one_line("0 1").is_err());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type().to_string(), "1^4");
        assert_eq!(one_line("2 1 4 5 3").cycle_type().to_string(), "3,2");
        assert_eq!(one_line("2 3 4 5 6 1").cycle_type().to_string(), "6");
    }

    #[test]
    fn power_examples() {
        let s = one_line("2 3 4 1");
        assert_eq!(s.pow_u64(0), Permutation::identity(4));
        // brute-force composition
        assert_eq!(s.pow_u64(2), s.then(&s));
        assert_eq!(s.pow_u64(2).cycle_type().to_string(), "2^2");
        let order = s.cycle_type().order();
        assert_eq!(s.power(&order), Permutation::identity(4));
    }

    #[test]
    fn power_agrees_with_repeated_composition() {
        let mut rng = RandomStream::new(11, 0);
        for _ in 0..50 {
            let s = Permutation::sample(9, &mut rng).unwrap();
            let mut acc = Permutation::identity(9);
            for e in 0..40u64 {
                assert_eq!(s.pow_u64(e), acc);
                assert_eq!(
                    s.pow_u64(e).cycle_type(),
                    s.cycle_type().power(&BigUint::from(e))
                );
                acc = acc.then(&s);
            }
        }
    }

    #[test]
    fn parity_matches_transposition_count() {
        for n in 1..=6 {
            for p in all_permutations(n) {
                assert_eq!(p.cycle_type().parity(), sign_by_transpositions(&p), "{p}");
            }
        }
    }

    #[test]
    fn notation_examples() {
        let p = one_line("2 1 4 5 3");
        assert_eq!(p.to_cycle_notation(), "(1 2)(3 4 5)");
        assert_eq!(
            Permutation::parse_cycle_notation("(3 4 5)(1 2)", 5).unwrap(),
            p
        );
        assert_eq!(
            Permutation::parse_cycle_notation("(4 5 3)(2 1)", 5).unwrap(),
            p
        );
        assert_eq!(Permutation::identity(3).to_cycle_notation(), "()");
        assert_eq!(
            Permutation::parse_cycle_notation("()", 3).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            Permutation::parse_cycle_notation("", 3).unwrap(),
            Permutation::identity(3)
        );
        assert!(Permutation::parse_cycle_notation("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycle_notation("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycle_notation("(1 2", 3).is_err());
    }

    #[test]
    fn realize_has_requested_type() {
        let ct: CycleType = "5,3^2,2,1^4".parse().unwrap();
        assert_eq!(Permutation::realize(&ct).cycle_type(), ct);
    }

    #[test]
    fn sampling_n1_and_determinism() {
        let mut rng = RandomStream::new(1, 0);
        assert_eq!(
            Permutation::sample(1, &mut rng).unwrap(),
            Permutation::identity(1)
        );
        let a = Permutation::sample(50, &mut RandomStream::new(99, 4)).unwrap();
        let b = Permutation::sample(50, &mut RandomStream::new(99, 4)).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            Permutation::sample_capped(10, &mut rng, 5),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn mean_fixed_points_is_one() {
        let mut rng = RandomStream::new(2024, 0);
        let draws = 100_000;
        let total: usize = (0..draws)
            .map(|_| {
                let p = Permutation::sample(100, &mut rng).unwrap();
                p.images()
                    .iter()
                    .enumerate()
                    .filter(|(i, x)| i == *x)
                    .count()
            })
            .sum();
        let mean = total as f64 / draws as f64;
        assert!((mean - 1.0).abs() < 0.03, "mean {mean}");
    }

    #[test]
    fn sample_is_uniform_on_s4() {
        let mut rng = RandomStream::new(4, 0);
        let draws = 240_000usize;
        let mut counts = std::collections::HashMap::new();
        for _ in 0..draws {
            *counts
                .entry(Permutation::sample(4, &mut rng).unwrap())
                .or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 24);
        let p = 1.0 / 24.0;
        let sd = (draws as f64 * p * (1.0 - p)).sqrt();
        for (perm, c) in counts {
            let z = (c as f64 - draws as f64 * p) / sd;
            assert!(z.abs() < 5.0, "{perm}: z = {z}");
        }
    }

    fn perm_strategy() -> impl Strategy<Value = Permutation> {
        (1usize..40, any::<u64>())
            .prop_map(|(n, seed)| Permutation::sample(n, &mut RandomStream::new(seed, 0)).unwrap())
    }

    proptest! {
        #[test]
        fn power_is_additive(p in perm_strategy(), a in 0u64..=1_000_000_000, b in 0u64..=1_000_000_000) {
            prop_assert_eq!(p.pow_u64(a + b), p.pow_u64(a).then(&p.pow_u64(b)));
        }

        #[test]
        fn text_forms_round_trip(p in perm_strategy()) {
            let n = p.degree();
            let cyc = p.to_cycle_notation();
            prop_assert_eq!(Permutation::parse_cycle_notation(&cyc, n).unwrap().to_cycle_notation(), cyc.clone());
            prop_assert_eq!(&Permutation::parse_cycle_notation(&cyc, n).unwrap(), &p);
            let line = p.to_one_line();
            prop_assert_eq!(Permutation::parse_one_line(&line).unwrap().to_one_line(), line);
        }

        #[test]
        fn witness_power_is_prime_cycle(p in perm_strategy()) {
            let ct = p.cycle_type();
            if let Some(w) = ct.prime_cycle_witness(None) {
                let q = p.power(&w.exponent).cycle_type();
                prop_assert!(q.is_cycle());
                prop_assert_eq!(q.multiplicity(w.prime as usize), 1);
                prop_assert!(crate::arith::is_prime(w.prime));
            }
        }
    }
}
