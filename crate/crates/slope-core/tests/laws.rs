//! Property tests for the slope and interval algebra.

use num_bigint::BigInt;
use proptest::prelude::*;
use slope_core::{
    covers_circle, intersects, is_subset, ExtendedSlope, IntMatrix2, SlopeInterval,
};

fn slope_strategy() -> impl Strategy<Value = ExtendedSlope> {
    (-40i64..=40, 0i64..=12)
        .prop_filter("0/0 is not a slope", |(n, d)| *n != 0 || *d != 0)
        .prop_map(|(n, d)| ExtendedSlope::new(BigInt::from(n), BigInt::from(d)).unwrap())
}

fn interval_strategy() -> impl Strategy<Value = SlopeInterval> {
    prop_oneof![
        Just(SlopeInterval::Empty),
        Just(SlopeInterval::FullCircle),
        slope_strategy().prop_map(SlopeInterval::Point),
        slope_strategy().prop_map(SlopeInterval::LongitudeComplement),
        (slope_strategy(), slope_strategy(), any::<bool>(), any::<bool>())
            .prop_filter("arc endpoints must differ", |(lo, hi, _, _)| lo != hi)
            .prop_map(|(lo, hi, lc, hc)| SlopeInterval::arc(lo, hi, lc, hc).unwrap()),
    ]
}

/// Small stock of unimodular matrices, both orientations.
fn matrix_strategy() -> impl Strategy<Value = IntMatrix2> {
    prop_oneof![
        Just(IntMatrix2::identity()),
        Just(IntMatrix2::new(6, 1, 1, 0).unwrap()),
        Just(IntMatrix2::new(2, -1, 3, -2).unwrap()),
        Just(IntMatrix2::new(0, 1, 1, 0).unwrap()),
        Just(IntMatrix2::new(1, 5, 0, 1).unwrap()),
        Just(IntMatrix2::new(4, -1, -5, 1).unwrap()),
        Just(IntMatrix2::new(3, -2, 2, -1).unwrap()),
        Just(IntMatrix2::new(0, -1, 1, 0).unwrap()),
    ]
}

proptest! {
    #[test]
    fn parse_display_roundtrip(s in slope_strategy()) {
        let t: ExtendedSlope = s.to_string().parse().unwrap();
        prop_assert_eq!(s, t);
    }

    #[test]
    fn complement_is_involution(i in interval_strategy()) {
        prop_assert_eq!(i.complement().complement(), i);
    }

    #[test]
    fn complement_membership_flips(i in interval_strategy(), s in slope_strategy()) {
        prop_assert_eq!(i.contains(&s), !i.complement().contains(&s));
    }

    #[test]
    fn interval_and_complement_partition_circle(i in interval_strategy()) {
        let c = i.complement();
        prop_assert!(covers_circle(&i, &c));
        prop_assert!(!intersects(&i, &c));
    }

    #[test]
    fn interior_subset_closure(i in interval_strategy()) {
        prop_assert!(is_subset(&i.interior(), &i));
        prop_assert!(is_subset(&i, &i.closure()));
    }

    #[test]
    fn subset_via_complement_cover(a in interval_strategy(), b in interval_strategy()) {
        prop_assert_eq!(is_subset(&a, &b), covers_circle(&a.complement(), &b));
    }

    #[test]
    fn subset_agrees_with_pointwise_membership(
        a in interval_strategy(),
        b in interval_strategy(),
        pts in proptest::collection::vec(slope_strategy(), 1..24),
    ) {
        if is_subset(&a, &b) {
            for p in &pts {
                prop_assert!(!a.contains(p) || b.contains(p));
            }
        }
        if !intersects(&a, &b) {
            for p in &pts {
                prop_assert!(!(a.contains(p) && b.contains(p)));
            }
        }
    }

    #[test]
    fn lft_preserves_membership(
        i in interval_strategy(),
        m in matrix_strategy(),
        s in slope_strategy(),
    ) {
        let fs = slope_core::lft_apply(&m, &s);
        prop_assert_eq!(i.contains(&s), i.map_lft(&m).contains(&fs));
    }

    #[test]
    fn lft_inverse_roundtrips_interval(i in interval_strategy(), m in matrix_strategy()) {
        prop_assert_eq!(i.map_lft(&m).map_lft(&m.inverse()), i);
    }

    #[test]
    fn linear_order_total_and_consistent(a in slope_strategy(), b in slope_strategy()) {
        use std::cmp::Ordering;
        match a.cmp(&b) {
            Ordering::Equal => prop_assert_eq!(&a, &b),
            Ordering::Less => prop_assert_eq!(b.cmp(&a), Ordering::Greater),
            Ordering::Greater => prop_assert_eq!(b.cmp(&a), Ordering::Less),
        }
        if !a.is_infinite() && !b.is_infinite() {
            // Cross-multiplied comparison agrees with the rational order.
            let lhs = a.numer() * b.denom();
            let rhs = b.numer() * a.denom();
            prop_assert_eq!(a.cmp(&b), lhs.cmp(&rhs));
        }
    }
}
