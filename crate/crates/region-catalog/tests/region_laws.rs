//! Cross-cutting laws for the region catalog: the closed-form
//! predicates against the recursive oracle across every regime,
//! Λ-orbit invariance, containment of the guaranteed inner regions,
//! and a negative control showing that a subtly weakened closed form
//! is detected by the oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;
use region_catalog::{
    inner_min_regions, lo_ctf_regions, torus_region_label_sf, InnerVariant, TorusSatelliteSpec,
};
use satellite_graph::{
    CompanionKnot, SatelliteTree, Session, SlopeAssignment, TreeEdge, VertexData,
};
use slope_core::ExtendedSlope;

fn s(num: i64, den: i64) -> ExtendedSlope {
    ExtendedSlope::new(BigInt::from(num), BigInt::from(den)).unwrap()
}

fn inf() -> ExtendedSlope {
    ExtendedSlope::infinity()
}

fn cable(genus: u64, p: i64, q: i64, n: usize) -> TorusSatelliteSpec {
    TorusSatelliteSpec::new(genus, p, q, n).unwrap()
}

fn oracle_lspace(spec: &TorusSatelliteSpec, y: &[ExtendedSlope]) -> bool {
    let tree = spec.tree();
    let session = Session::new(&tree).unwrap();
    let mut a = SlopeAssignment::new();
    for (i, yi) in y.iter().enumerate() {
        a.set("v1", i + 1, yi.clone());
    }
    session.is_lspace_filling(&a).unwrap().lspace
}

fn small_rational() -> impl Strategy<Value = ExtendedSlope> {
    (-40i64..=40, 1i64..=10).prop_map(|(n, d)| s(n, d))
}

fn slope_or_special() -> impl Strategy<Value = ExtendedSlope> {
    prop_oneof![
        8 => small_rational(),
        1 => Just(inf()),
        1 => Just(s(0, 1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    /// The closed-form label agrees with the recursive oracle in every
    /// regime: two-sided, integer lattice, lattice ray, genus-zero
    /// two-sided, longitude scan, and the mirrored pattern.
    #[test]
    fn closed_form_matches_oracle_across_regimes(
        y1 in slope_or_special(),
        y2 in slope_or_special(),
        which in 0usize..6,
    ) {
        let spec = match which {
            0 => cable(5, 2, 23, 2),
            1 => cable(5, 2, 3, 2),
            2 => cable(3, 1, 4, 2),
            3 => cable(0, 2, 3, 2),
            4 => cable(0, 3, 1, 2),
            _ => cable(0, 2, -3, 2),
        };
        let y = [y1, y2];
        let closed = torus_region_label_sf(&spec, &y).unwrap().lspace;
        prop_assert_eq!(closed, oracle_lspace(&spec, &y));
    }

    /// Integer reparameterizations with zero total shift preserve the
    /// label and every orbit-level flag.
    #[test]
    fn lambda_shift_preserves_closed_labels(
        y1 in small_rational(),
        y2 in small_rational(),
        k in -6i64..=6,
    ) {
        let spec = cable(5, 2, 23, 2);
        let y = [y1.clone(), y2.clone()];
        let shifted = [
            y1.checked_add(&s(k, 1)).unwrap(),
            y2.checked_add(&s(-k, 1)).unwrap(),
        ];
        let a = torus_region_label_sf(&spec, &y).unwrap();
        let b = torus_region_label_sf(&spec, &shifted).unwrap();
        prop_assert_eq!(a.lspace, b.lspace);
        prop_assert_eq!(a.in_lambda_orbit_of_lstar, b.in_lambda_orbit_of_lstar);
        prop_assert_eq!(a.in_b, b.in_b);
        prop_assert_eq!(
            region_catalog::in_lambda_orbit_plus(&y),
            region_catalog::in_lambda_orbit_plus(&shifted)
        );
        prop_assert_eq!(
            region_catalog::in_lambda_orbit_minus(&spec, &y),
            region_catalog::in_lambda_orbit_minus(&spec, &shifted)
        );
    }

    /// The margin excluded from the lower-bound guarantees is a union of
    /// Λ-orbits.
    #[test]
    fn excluded_margin_is_shift_invariant(
        y1 in small_rational(),
        y2 in small_rational(),
        k in -6i64..=6,
    ) {
        let regions = lo_ctf_regions(&cable(5, 2, 23, 2)).unwrap();
        let y = [y1.clone(), y2.clone()];
        let shifted = [
            y1.checked_add(&s(k, 1)).unwrap(),
            y2.checked_add(&s(-k, 1)).unwrap(),
        ];
        prop_assert_eq!(
            regions.in_excluded_margin_sf(&y),
            regions.in_excluded_margin_sf(&shifted)
        );
    }

    /// Genus-zero patterns with opposite fiber weights are mirrors:
    /// negating every slope preserves the label and swaps the two
    /// one-sided pieces.
    #[test]
    fn mirror_symmetry_under_negation(y1 in small_rational(), y2 in small_rational()) {
        let spec_pos = cable(0, 2, 3, 2);
        let spec_neg = cable(0, 2, -3, 2);
        let y = [y1.clone(), y2.clone()];
        let yn = [y1.neg(), y2.neg()];
        let a = torus_region_label_sf(&spec_pos, &y).unwrap();
        let b = torus_region_label_sf(&spec_neg, &yn).unwrap();
        prop_assert_eq!(a.lspace, b.lspace);
        prop_assert_eq!(a.in_l_minus, b.in_l_plus);
        prop_assert_eq!(a.in_l_plus, b.in_l_minus);
    }
}

/// Reducibility laws on the fiber-slope hyperplanes: one fiber slope
/// (rest finite) fills to a connected sum of L-spaces in the two-sided
/// regime, two or more never give an L-space. The oracle agrees.
#[test]
fn reducible_loci_classification() {
    let spec = cable(5, 2, 23, 2);
    for finite in [s(-3, 1), s(0, 1), s(7, 5), s(41, 7)] {
        let one_fiber = [inf(), finite.clone()];
        let label = torus_region_label_sf(&spec, &one_fiber).unwrap();
        assert!(label.in_r && !label.in_z);
        assert!(label.lspace);
        assert_eq!(oracle_lspace(&spec, &one_fiber), true);

        let two_fibers = [inf(), inf()];
        let label = torus_region_label_sf(&spec, &two_fibers).unwrap();
        assert!(label.in_z && label.in_b);
        assert!(!label.lspace);
        assert_eq!(oracle_lspace(&spec, &two_fibers), false);
    }
}

fn two_vertex_tree(child_p: i64, child_q: i64, j: i64) -> SatelliteTree {
    let mut vertices = BTreeMap::new();
    vertices.insert(
        "r".to_string(),
        VertexData {
            p: BigInt::from(2),
            q: BigInt::from(3),
            n: 2,
        },
    );
    vertices.insert(
        "c".to_string(),
        VertexData {
            p: BigInt::from(child_p),
            q: BigInt::from(child_q),
            n: 1,
        },
    );
    SatelliteTree {
        vertices,
        root: "r".to_string(),
        edges: vec![TreeEdge {
            from: "c".to_string(),
            to: "r".to_string(),
            j,
        }],
        companion: CompanionKnot::Unknot,
    }
}

fn random_slope(rng: &mut ChaCha8Rng) -> ExtendedSlope {
    if rng.gen_ratio(1, 12) {
        return inf();
    }
    let den = rng.gen_range(1..=6i64);
    let num = rng.gen_range(-6 * den..=6 * den);
    s(num, den)
}

/// Every sampled assignment inside a guaranteed inner region is an
/// L-space filling according to the oracle.
#[test]
fn inner_regions_sit_inside_oracle() {
    let configs = [
        (two_vertex_tree(3, -2, 1), InnerVariant::Iterated),
        (two_vertex_tree(2, 13, 1), InnerVariant::Algebraic),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1234);
    for (tree, variant) in configs {
        let inner = inner_min_regions(&tree, variant, false).unwrap();
        let session = Session::new(&tree).unwrap();
        let mut hits = 0usize;
        for _ in 0..400 {
            let mut a = SlopeAssignment::new();
            a.set("c", 1, random_slope(&mut rng));
            a.set("r", 2, random_slope(&mut rng));
            if !inner.contains(&a).unwrap() {
                continue;
            }
            hits += 1;
            assert!(
                session.is_lspace_filling(&a).unwrap().lspace,
                "inner region point is not an L-space filling: {}",
                a.to_json_string()
            );
        }
        assert!(hits >= 40, "sampling found only {hits} inner-region points");
    }
}

/// A deliberately weakened two-sided test that forgets the boundary
/// refinement on the ceiling side misclassifies a known filling; the
/// oracle and the real closed form both catch it.
#[test]
fn weakened_closed_form_is_caught_by_oracle() {
    fn weakened_lspace(y: &[ExtendedSlope]) -> bool {
        let sum_floor: BigInt = y.iter().map(|v| v.floor().unwrap()).sum();
        let sum_ceil: BigInt = y.iter().map(|v| v.ceil().unwrap()).sum();
        let not_lspace = sum_floor < BigInt::from(0) && sum_ceil > BigInt::from(0);
        !not_lspace
    }

    let spec = cable(5, 2, 23, 2);
    // Surgery coordinates (36, 36) in the fiber basis.
    let y = [s(-1, 10), s(-1, 10)];
    assert!(weakened_lspace(&y), "the weakened form should claim L here");
    assert!(!torus_region_label_sf(&spec, &y).unwrap().lspace);
    assert!(!oracle_lspace(&spec, &y));
}
