//! Property tests for the fiber-exterior engine: lattice equivariance,
//! mirror duality, attainment dichotomy, and extremum consistency.

use num_bigint::BigInt;
use proptest::prelude::*;
use seifert_engine::{
    fiber_exterior_interval, rational_longitude, y_minus_of_k, y_plus_of_k, FiberExteriorInput,
    DEFAULT_PERIOD_CAP,
};
use slope_core::{ExtendedSlope, IntMatrix2, SlopeInterval};

fn finite_slope() -> impl Strategy<Value = ExtendedSlope> {
    (-24i64..=24, 1i64..=6)
        .prop_map(|(n, d)| ExtendedSlope::new(BigInt::from(n), BigInt::from(d)).unwrap())
}

fn finite_vec() -> impl Strategy<Value = Vec<ExtendedSlope>> {
    proptest::collection::vec(finite_slope(), 0..4)
}

fn bi_interval() -> impl Strategy<Value = SlopeInterval> {
    prop_oneof![
        finite_slope().prop_map(SlopeInterval::LongitudeComplement),
        (finite_slope(), finite_slope())
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| SlopeInterval::arc(a, b, true, true).unwrap()),
    ]
}

fn input_strategy() -> impl Strategy<Value = FiberExteriorInput> {
    (finite_vec(), proptest::collection::vec(bi_interval(), 0..3))
        .prop_map(|(s, b)| FiberExteriorInput::new(s, b))
}

fn shifted(input: &FiberExteriorInput, shift: &[i64]) -> FiberExteriorInput {
    let slopes = input
        .seifert_slopes
        .iter()
        .zip(shift)
        .map(|(y, s)| y.add_integer(&BigInt::from(*s)))
        .collect();
    FiberExteriorInput::new(slopes, input.bi_intervals.clone())
}

fn mirrored(input: &FiberExteriorInput) -> FiberExteriorInput {
    let neg = IntMatrix2::new(-1, 0, 0, 1).unwrap();
    FiberExteriorInput::new(
        input.seifert_slopes.iter().map(|y| y.neg()).collect(),
        input
            .bi_intervals
            .iter()
            .map(|i| i.map_lft(&neg))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn lattice_shift_leaves_result_invariant(input in input_strategy(), seed in any::<u64>()) {
        let r1 = fiber_exterior_interval(&input, DEFAULT_PERIOD_CAP);
        let shift_vals: Vec<i64> = {
            // Derive a deterministic zero-sum shift from the seed.
            let mut v: Vec<i64> = (0..input.seifert_slopes.len())
                .map(|i| ((seed >> (i % 60)) as i64 % 5) - 2)
                .collect();
            let s: i64 = v.iter().sum();
            if let Some(last) = v.last_mut() { *last -= s; }
            v
        };
        let r2 = fiber_exterior_interval(&shifted(&input, &shift_vals), DEFAULT_PERIOD_CAP);
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn mirror_swaps_and_negates_extrema(input in input_strategy()) {
        let r = fiber_exterior_interval(&input, DEFAULT_PERIOD_CAP);
        let m = fiber_exterior_interval(&mirrored(&input), DEFAULT_PERIOD_CAP);
        match (r, m) {
            (Ok(r), Ok(m)) => {
                prop_assert_eq!(m.y_minus, r.y_plus.neg());
                prop_assert_eq!(m.y_plus, r.y_minus.neg());
                prop_assert_eq!(m.minus_attained, r.plus_attained);
                prop_assert_eq!(m.plus_attained, r.minus_attained);
                prop_assert_eq!(m.is_bc, r.is_bc);
            }
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "asymmetric outcome: {a:?} vs {b:?}"),
        }
    }

    #[test]
    fn attainment_dichotomy_and_longitude(slopes in finite_vec()) {
        let input = FiberExteriorInput::from_slopes(slopes.clone());
        let r = fiber_exterior_interval(&input, DEFAULT_PERIOD_CAP).unwrap();
        prop_assert_eq!(r.minus_attained, r.plus_attained);
        prop_assert_eq!(r.is_bc, !r.minus_attained);
        if r.is_bc {
            let l = rational_longitude(&slopes);
            prop_assert_eq!(&r.y_minus, &l);
            prop_assert_eq!(&r.y_plus, &l);
            prop_assert_eq!(r.interval, SlopeInterval::LongitudeComplement(l));
        }
    }

    #[test]
    fn window_values_bounded_by_extrema(input in input_strategy(), k in 1u64..=80) {
        if let Ok(r) = fiber_exterior_interval(&input, DEFAULT_PERIOD_CAP) {
            if !r.y_minus.is_infinite() && !r.y_plus.is_infinite() {
                let lo = y_minus_of_k(&input, k);
                let hi = y_plus_of_k(&input, k);
                prop_assert!(lo <= r.y_minus, "y₋({k}) = {lo} exceeds sup {}", r.y_minus);
                prop_assert!(hi >= r.y_plus, "y₊({k}) = {hi} undercuts inf {}", r.y_plus);
            }
        }
    }

    #[test]
    fn attained_extrema_are_witnessed(slopes in finite_vec()) {
        let input = FiberExteriorInput::from_slopes(slopes);
        let r = fiber_exterior_interval(&input, DEFAULT_PERIOD_CAP).unwrap();
        if r.minus_attained {
            let witnessed = (1..=240).any(|k| y_minus_of_k(&input, k) == r.y_minus);
            prop_assert!(witnessed, "sup {} not witnessed for k ≤ 240", r.y_minus);
        }
    }
}
