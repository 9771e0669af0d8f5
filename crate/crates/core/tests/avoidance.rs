use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use permcensus::arith::ratio_to_f64;
use permcensus::avoidance::{
    approximate_series, avoidance_series, bound_report, harmonic_error, theorem1_bound,
    AvoidanceSpec,
};
use permcensus::census::for_each_permutation;
use permcensus::hp;
use permcensus::Permutation;

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn subset(mask: u32, n: usize) -> Vec<usize> {
    (1..=n).filter(|k| mask >> (k - 1) & 1 == 1).collect()
}

#[test]
fn recurrence_matches_enumeration_for_all_subsets_of_six() {
    let mut cycle_lengths = Vec::new();
    for_each_permutation(6, |images| {
        let p = Permutation::new(images.to_vec()).unwrap();
        cycle_lengths.push(p.cycle_type().lengths().collect::<Vec<_>>());
    });
    assert_eq!(cycle_lengths.len(), 720);
    for mask in 0..64u32 {
        let set = subset(mask, 6);
        let hits = cycle_lengths
            .iter()
            .filter(|ls| ls.iter().all(|l| !set.contains(l)))
            .count();
        let spec = AvoidanceSpec::new(6, set.clone()).unwrap();
        let series = avoidance_series(&spec).unwrap();
        assert_eq!(series.last(), &q(hits as i64, 720), "C = {set:?}");
    }
}

#[test]
fn only_n_cycles_survive() {
    for n in 2..=300usize {
        let spec = AvoidanceSpec::new(n, 1..n).unwrap();
        assert_eq!(
            avoidance_series(&spec).unwrap().last(),
            &q(1, n as i64),
            "n = {n}"
        );
    }
}

#[test]
fn single_length_inclusion_exclusion() {
    let n = 200usize;
    for l in [2usize, 3, 5] {
        let spec = AvoidanceSpec::new(n, [l]).unwrap();
        let mut expected = BigRational::zero();
        let mut term = BigRational::one();
        for j in 0..=n / l {
            if j > 0 {
                term /= BigRational::from_integer(BigInt::from(l * j));
            }
            if j % 2 == 0 {
                expected += &term;
            } else {
                expected -= &term;
            }
        }
        assert_eq!(
            avoidance_series(&spec).unwrap().last(),
            &expected,
            "l = {l}"
        );
        let limit = (-1.0 / l as f64).exp();
        assert!((ratio_to_f64(&expected) - limit).abs() < 1e-12);
    }
}

#[test]
fn derangements_converge_fast() {
    let spec = AvoidanceSpec::new(50, [1]).unwrap();
    let p50 = ratio_to_f64(avoidance_series(&spec).unwrap().last());
    assert!((p50 - (-1f64).exp()).abs() < 1e-12);
}

#[test]
fn approximate_series_tracks_exact() {
    let spec = AvoidanceSpec::parse(400, "primes").unwrap();
    let exact = avoidance_series(&spec).unwrap();
    let approx = approximate_series(&spec).unwrap();
    for (e, a) in exact.proportions().iter().zip(&approx) {
        assert!((ratio_to_f64(e) - a).abs() < 1e-12);
    }
}

#[test]
fn harmonic_error_range() {
    for n in [1usize, 2, 5, 10, 100, 1000] {
        let e = hp::to_f64(&harmonic_error(n).unwrap());
        assert!(e > 0.0 && e < 0.5 / n as f64, "n = {n}: {e}");
    }
}

fn arb_spec(max_n: usize) -> impl Strategy<Value = AvoidanceSpec> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set(1..=n, 0..=n)
            .prop_map(move |set| AvoidanceSpec::new(n, set).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn bound_is_strict(spec in arb_spec(120)) {
        let p = avoidance_series(&spec).unwrap().last().clone();
        let bound = theorem1_bound(&spec);
        prop_assert_eq!(hp::compare_ratio(&p, &bound), Some(std::cmp::Ordering::Less));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bounds_are_ordered(spec in arb_spec(200)) {
        let r = bound_report(&spec);
        prop_assert!(r.bound_thm1 < r.bound_mans);
        if let Some(et) = &r.bound_et {
            prop_assert_eq!(hp::compare_ratio(et, &r.bound_thm1), Some(std::cmp::Ordering::Greater));
        }
    }

    #[test]
    fn larger_sets_avoid_less(spec in arb_spec(80), extra in 1usize..=80) {
        let n = spec.degree();
        let mut bigger = spec.set().clone();
        bigger.insert(1 + (extra - 1) % n);
        let bigger = AvoidanceSpec::new(n, bigger).unwrap();
        let small = avoidance_series(&spec).unwrap();
        let large = avoidance_series(&bigger).unwrap();
        for (a, b) in small.proportions().iter().zip(large.proportions()) {
            prop_assert!(b <= a);
        }
    }
}
