//! Textual sets of cycle lengths: `"1-4,7"`, `"primes"`, `"odd"`, `"even"`.
//!
//! Items are comma separated; each is an integer, an inclusive range `a-b`,
//! or a preset resolved against the degree `n`. An empty string or `"none"`
//! is the empty set.

use std::collections::BTreeSet;

use crate::arith::is_prime;
use crate::error::{Error, Result};

pub fn parse_set(spec: &str, n: usize) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "none" => {}
            "all" => out.extend(1..=n),
            "primes" => out.extend((2..=n).filter(|&k| is_prime(k as u64))),
            "odd" => out.extend((1..=n).step_by(2)),
            "even" => out.extend((2..=n).step_by(2)),
            _ => {
                let (lo, hi) = match item.split_once('-') {
                    Some((a, b)) => (parse_point(a, item)?, parse_point(b, item)?),
                    None => {
                        let v = parse_point(item, item)?;
                        (v, v)
                    }
                };
                if lo > hi {
                    return Err(Error::parse(format!("empty range {item:?}")));
                }
                if lo < 1 || hi > n {
                    return Err(Error::parse(format!(
                        "{item:?} is outside the allowed lengths 1..={n}"
                    )));
                }
                out.extend(lo..=hi);
            }
        }
    }
    Ok(out)
}

fn parse_point(s: &str, item: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad set item {item:?}")))
}

/// Compact range form of a set, e.g. `1-4,7`.
pub fn format_set(set: &BTreeSet<usize>) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut iter = set.iter().copied().peekable();
    while let Some(start) = iter.next() {
        let mut end = start;
        while iter.peek() == Some(&(end + 1)) {
            end = iter.next().unwrap();
        }
        out.push(if start == end {
            start.to_string()
        } else {
            format!("{start}-{end}")
        });
    }
    out.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn grammar() {
        assert_eq!(parse_set("1-4,7", 10).unwrap(), set(&[1, 2, 3, 4, 7]));
        assert_eq!(parse_set("primes", 12).unwrap(), set(&[2, 3, 5, 7, 11]));
        assert_eq!(parse_set("odd", 6).unwrap(), set(&[1, 3, 5]));
        assert_eq!(parse_set("even", 6).unwrap(), set(&[2, 4, 6]));
        assert_eq!(parse_set("", 6).unwrap(), set(&[]));
        assert_eq!(parse_set("none", 6).unwrap(), set(&[]));
        assert_eq!(parse_set(" 2 , 2-3 ", 6).unwrap(), set(&[2, 3]));
        assert!(parse_set("0", 6).is_err());
        assert!(parse_set("7", 6).is_err());
        assert!(parse_set("4-2", 6).is_err());
        assert!(parse_set("x", 6).is_err());
    }

    #[test]
    fn format_compacts_runs() {
        assert_eq!(format_set(&set(&[1, 2, 3, 4, 7, 9, 10])), "1-4,7,9-10");
        assert_eq!(format_set(&set(&[])), "");
        let s = set(&[2, 3, 5, 8, 9]);
        assert_eq!(parse_set(&format_set(&s), 9).unwrap(), s);
    }
}
