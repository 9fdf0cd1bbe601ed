//! Self-check suites: randomized invariants, cross-checks between the
//! recursive oracle and the closed-form predicates, and a negative
//! control that verifies a deliberately weakened predicate is caught.

use std::collections::BTreeMap;
use std::process::ExitCode;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;
use region_catalog::{
    inner_min_regions, torus_label_sf_capped, CellOutcome, InnerVariant, RasterBasis,
    RasterMode, RasterRequest, TorusSatelliteSpec,
};
use satellite_graph::{
    reduced_endpoint_bounds_check, CompanionKnot, SatelliteTree, Session, SlopeAssignment,
    TreeEdge, VertexData,
};
use seifert_engine::{torus_data_floor_bound_holds, DEFAULT_PERIOD_CAP};
use slope_core::{covers_circle, is_subset, lft_apply, ExtendedSlope, IntMatrix2, SlopeInterval};

/// Default seed for the randomized suites; override with `--seed`.
const DEFAULT_SEED: u64 = 0x5eed_0001;

type SuiteFn = fn(&mut ChaCha8Rng) -> Result<(), String>;

const SUITES: &[(&str, SuiteFn)] = &[
    ("quotient-floor-bound", suite_quotient_floor_bound),
    ("endpoint-bounds", suite_endpoint_bounds),
    ("lambda-invariance", suite_lambda_invariance),
    ("mirror-symmetry", suite_mirror_symmetry),
    ("inner-containment", suite_inner_containment),
    ("grid-equivalence", suite_grid_equivalence),
    ("interval-laws", suite_interval_laws),
    ("negative-control", suite_negative_control),
];

pub fn cmd_check(filter: Option<&str>, seed: Option<u64>) -> Result<ExitCode, String> {
    let seed = seed.unwrap_or(DEFAULT_SEED);
    if let Some(name) = filter {
        if !SUITES.iter().any(|(n, _)| *n == name) {
            let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
            return Err(format!(
                "unknown suite {name:?}; available: {}",
                names.join(", ")
            ));
        }
    }

    let mut failures = 0usize;
    for (index, (name, run)) in SUITES.iter().enumerate() {
        if let Some(f) = filter {
            if *name != f {
                continue;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed ^ ((index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)),
        );
        match run(&mut rng) {
            Ok(()) => println!("suite {name}: PASS"),
            Err(msg) => {
                failures += 1;
                println!("suite {name}: FAIL");
                eprintln!("suite {name}: {msg}");
            }
        }
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn s(num: i64, den: i64) -> ExtendedSlope {
    ExtendedSlope::new(BigInt::from(num), BigInt::from(den)).expect("nonzero pair")
}

fn inf() -> ExtendedSlope {
    ExtendedSlope::infinity()
}

fn random_slope(rng: &mut ChaCha8Rng, allow_infinite: bool) -> ExtendedSlope {
    if allow_infinite && rng.gen_ratio(1, 12) {
        return inf();
    }
    let den = rng.gen_range(1..=6i64);
    let num = rng.gen_range(-6 * den..=6 * den);
    s(num, den)
}

/// A two-vertex tree with an unknot companion: root weights (2, 3), one
/// child spliced into the chosen root slot (`j = -1` for the exceptional
/// fiber).
fn two_vertex(root_n: usize, child_p: i64, child_q: i64, j: i64) -> SatelliteTree {
    let mut vertices = BTreeMap::new();
    vertices.insert(
        "r".to_string(),
        VertexData {
            p: BigInt::from(2),
            q: BigInt::from(3),
            n: root_n,
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

/// Randomly fills every unfilled component of `tree`.
fn random_assignment(
    tree: &SatelliteTree,
    rng: &mut ChaCha8Rng,
    allow_infinite: bool,
) -> Result<SlopeAssignment, String> {
    let mut a = SlopeAssignment::new();
    for id in tree.vertices.keys() {
        for slot in tree.free_slots(id).map_err(|e| e.to_string())? {
            a.set(id, slot, random_slope(rng, allow_infinite));
        }
    }
    Ok(a)
}

fn describe(a: &SlopeAssignment) -> String {
    a.to_json_string()
}

/// Exhaustive check of the floor/ceiling quotient bound behind the
/// window-scan endpoint formulas.
fn suite_quotient_floor_bound(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    for p in 2..=20i64 {
        for q in 2..=20i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            for k in 1..=500i64 {
                if !torus_data_floor_bound_holds(p, q, k) {
                    return Err(format!("quotient floor bound fails at p={p}, q={q}, k={k}"));
                }
            }
        }
    }
    Ok(())
}

/// The classified endpoints of every vertex interval respect the
/// reduced-data bounds on randomized trees and fillings.
fn suite_endpoint_bounds(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let trees = vec![
        SatelliteTree::single_vertex(2, 23, 2, CompanionKnot::PositiveLSpaceKnot { genus: 5 }),
        SatelliteTree::single_vertex(2, 3, 3, CompanionKnot::PositiveLSpaceKnot { genus: 1 }),
        SatelliteTree::single_vertex(3, 4, 2, CompanionKnot::Unknot),
        two_vertex(2, 3, -2, 1),
        two_vertex(2, 2, 13, -1),
    ];
    for round in 0..60 {
        for tree in &trees {
            let a = random_assignment(tree, rng, false)?;
            for id in tree.vertices.keys() {
                match reduced_endpoint_bounds_check(tree, id, &a) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Err(format!(
                            "endpoint bound violated at vertex {id:?} in round {round}, \
                             slopes {}",
                            describe(&a)
                        ))
                    }
                    Err(e) => return Err(format!("vertex {id:?}: {e}")),
                }
            }
        }
    }
    Ok(())
}

/// The oracle verdict is invariant under integer reparameterizations
/// with zero total shift at a vertex.
fn suite_lambda_invariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let trees = vec![
        SatelliteTree::single_vertex(2, 23, 2, CompanionKnot::PositiveLSpaceKnot { genus: 5 }),
        SatelliteTree::single_vertex(2, 3, 3, CompanionKnot::PositiveLSpaceKnot { genus: 1 }),
        two_vertex(3, 3, -2, 1),
    ];
    for tree in &trees {
        let session = Session::new(tree).map_err(|e| e.to_string())?;
        // Shift at the vertex with the most unfilled components.
        let (vertex, slots) = tree
            .vertices
            .keys()
            .map(|id| (id.clone(), tree.free_slots(id).expect("validated tree")))
            .max_by_key(|(_, slots)| slots.len())
            .expect("nonempty tree");
        if slots.len() < 2 {
            return Err(format!(
                "test tree rooted at {:?} has no vertex with two unfilled components",
                tree.root
            ));
        }
        for round in 0..50 {
            let mut a = random_assignment(tree, rng, true)?;
            let i1 = slots[rng.gen_range(0..slots.len())];
            let mut i2 = slots[rng.gen_range(0..slots.len())];
            while i2 == i1 {
                i2 = slots[rng.gen_range(0..slots.len())];
            }
            // The two shifted coordinates must be finite.
            for slot in [i1, i2] {
                if a.get(&vertex, slot).expect("just filled").is_infinite() {
                    a.set(&vertex, slot, random_slope(rng, false));
                }
            }
            let before = session
                .is_lspace_filling(&a)
                .map_err(|e| e.to_string())?
                .lspace;

            let k = ExtendedSlope::from_integer(rng.gen_range(1..=3i64));
            let mut shifted = a.clone();
            let y1 = shifted.get(&vertex, i1).expect("filled").clone();
            let y2 = shifted.get(&vertex, i2).expect("filled").clone();
            shifted.set(&vertex, i1, y1.checked_add(&k).expect("finite"));
            shifted.set(&vertex, i2, y2.checked_add(&k.neg()).expect("finite"));
            let after = session
                .is_lspace_filling(&shifted)
                .map_err(|e| e.to_string())?
                .lspace;
            if before != after {
                return Err(format!(
                    "verdict changed under a zero-sum shift at {vertex:?} in round {round}: \
                     {} -> {}",
                    describe(&a),
                    describe(&shifted)
                ));
            }
        }
    }
    Ok(())
}

/// Negating every vertex weight `q` and every slope gives the mirror
/// manifold, so the oracle verdict is unchanged (unknot companions).
fn suite_mirror_symmetry(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let pairs = vec![
        (
            SatelliteTree::single_vertex(2, 3, 2, CompanionKnot::Unknot),
            SatelliteTree::single_vertex(2, -3, 2, CompanionKnot::Unknot),
        ),
        (two_vertex(2, 3, -2, 1), two_vertex_mirror(2, 3, -2, 1)),
    ];
    for (tree, mirror) in &pairs {
        let session = Session::new(tree).map_err(|e| e.to_string())?;
        let mirror_session = Session::new(mirror).map_err(|e| e.to_string())?;
        for round in 0..50 {
            let a = random_assignment(tree, rng, true)?;
            let mut b = SlopeAssignment::new();
            for ((vertex, slot), y) in a.iter() {
                b.set(vertex, *slot, y.neg());
            }
            let direct = session
                .is_lspace_filling(&a)
                .map_err(|e| e.to_string())?
                .lspace;
            let mirrored = mirror_session
                .is_lspace_filling(&b)
                .map_err(|e| e.to_string())?
                .lspace;
            if direct != mirrored {
                return Err(format!(
                    "mirror verdicts disagree in round {round}: slopes {}",
                    describe(&a)
                ));
            }
        }
    }
    Ok(())
}

/// `two_vertex` with both vertex weights `q` negated.
fn two_vertex_mirror(root_n: usize, child_p: i64, child_q: i64, j: i64) -> SatelliteTree {
    let mut tree = two_vertex(root_n, child_p, child_q, j);
    for v in tree.vertices.values_mut() {
        v.q = -v.q.clone();
    }
    tree
}

/// Every sampled point of a guaranteed inner region is an L-space
/// filling according to the oracle.
fn suite_inner_containment(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let cases = vec![
        (two_vertex(2, 3, -2, 1), InnerVariant::Iterated),
        (two_vertex(2, 2, 13, -1), InnerVariant::Algebraic),
    ];
    for (tree, variant) in &cases {
        let inner = inner_min_regions(tree, *variant, false).map_err(|e| e.to_string())?;
        let session = Session::new(tree).map_err(|e| e.to_string())?;
        let mut hits = 0usize;
        for _ in 0..300 {
            let a = random_assignment(tree, rng, true)?;
            if !inner.contains(&a).map_err(|e| e.to_string())? {
                continue;
            }
            hits += 1;
            let verdict = session
                .is_lspace_filling(&a)
                .map_err(|e| e.to_string())?
                .lspace;
            if !verdict {
                return Err(format!(
                    "inner-region point is not an L-space filling: {}",
                    describe(&a)
                ));
            }
        }
        if hits < 10 {
            return Err(format!(
                "only {hits} of 300 samples landed in the inner region; the check is \
                 too weak to be meaningful"
            ));
        }
    }
    Ok(())
}

/// Oracle and closed form agree cell by cell over a sample window.
fn suite_grid_equivalence(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    let req = RasterRequest {
        tree: SatelliteTree::single_vertex(
            2,
            23,
            2,
            CompanionKnot::PositiveLSpaceKnot { genus: 5 },
        ),
        free: [("v1".into(), 1), ("v1".into(), 2)],
        pins: SlopeAssignment::new(),
        window: (s(40, 1), s(50, 1), s(40, 1), s(50, 1)),
        step: s(1, 2),
        basis: RasterBasis::S3,
        mode: RasterMode::Diff,
        period_cap: DEFAULT_PERIOD_CAP,
        threads: 1,
    };
    let grid = region_catalog::raster_region(&req).map_err(|e| e.to_string())?;
    for cell in &grid.cells {
        match &cell.outcome {
            CellOutcome::Diff {
                oracle_lspace,
                closed_lspace,
            } if oracle_lspace == closed_lspace => {}
            other => {
                return Err(format!(
                    "cell ({}, {}) disagrees: {other:?}",
                    cell.a1, cell.a2
                ))
            }
        }
    }
    Ok(())
}

fn random_interval(rng: &mut ChaCha8Rng) -> SlopeInterval {
    match rng.gen_range(0..10u8) {
        0 => SlopeInterval::Empty,
        1 => SlopeInterval::FullCircle,
        2 | 3 => SlopeInterval::Point(random_slope(rng, true)),
        4 | 5 => SlopeInterval::LongitudeComplement(random_slope(rng, true)),
        _ => {
            let lo = random_slope(rng, true);
            let mut hi = random_slope(rng, true);
            while hi == lo {
                hi = random_slope(rng, true);
            }
            SlopeInterval::Arc {
                lo,
                hi,
                lo_closed: rng.gen(),
                hi_closed: rng.gen(),
            }
        }
    }
}

/// A random determinant-±1 integer matrix.
fn random_unimodular(rng: &mut ChaCha8Rng) -> IntMatrix2 {
    let k1 = rng.gen_range(-3..=3i64);
    let k2 = rng.gen_range(-3..=3i64);
    // [[1, k1], [0, 1]] · [[1, 0], [k2, 1]] has determinant 1.
    let (a, b, c, d) = (1 + k1 * k2, k1, k2, 1i64);
    if rng.gen() {
        // Swapping the rows flips the determinant to -1.
        IntMatrix2::new(c, d, a, b).expect("determinant -1")
    } else {
        IntMatrix2::new(a, b, c, d).expect("determinant 1")
    }
}

/// Algebraic laws of circular slope intervals on random data.
fn suite_interval_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for round in 0..10_000 {
        let i = random_interval(rng);
        let c = i.complement();
        if c.complement() != i {
            return Err(format!("complement is not involutive on {i:?} (round {round})"));
        }
        if !covers_circle(&i, &c) {
            return Err(format!(
                "interval and complement fail to cover the circle: {i:?} (round {round})"
            ));
        }
        if !is_subset(&i.interior(), &i) || !is_subset(&i, &i.closure()) {
            return Err(format!(
                "interior/closure ordering fails on {i:?} (round {round})"
            ));
        }
        let m = random_unimodular(rng);
        let mapped = i.map_lft(&m);
        for _ in 0..3 {
            let x = random_slope(rng, true);
            // Exactly one of the two sides contains every slope.
            if i.contains(&x) == c.contains(&x) {
                return Err(format!(
                    "complement membership is not a negation at {x} of {i:?} (round {round})"
                ));
            }
            if i.contains(&x) != mapped.contains(&lft_apply(&m, &x)) {
                return Err(format!(
                    "fractional-linear map does not preserve membership at {x} of {i:?} \
                     (round {round})"
                ));
            }
        }
    }
    Ok(())
}

/// A deliberately weakened two-sided predicate must be caught by the
/// oracle; the honest closed form must not be.
fn suite_negative_control(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    let spec = TorusSatelliteSpec::new(5, 2, 23, 2).map_err(|e| e.to_string())?;
    let ys = vec![s(-1, 10), s(-1, 10)];

    // Drops the residue refinement from the negative-side test.
    let floor_sum: BigInt = ys.iter().map(|y| y.floor().expect("finite")).sum();
    let ceil_sum: BigInt = ys.iter().map(|y| y.ceil().expect("finite")).sum();
    let weakened_lspace = !(floor_sum < BigInt::zero() && ceil_sum > BigInt::zero());

    let honest = torus_label_sf_capped(&spec, &ys, DEFAULT_PERIOD_CAP)
        .map_err(|e| e.to_string())?
        .lspace;

    let tree = spec.tree();
    let session = Session::new(&tree).map_err(|e| e.to_string())?;
    let mut a = SlopeAssignment::new();
    for (slot, y) in ys.iter().enumerate() {
        a.set("v1", slot + 1, y.clone());
    }
    let oracle = session
        .is_lspace_filling(&a)
        .map_err(|e| e.to_string())?
        .lspace;

    if weakened_lspace == oracle {
        return Err(
            "the weakened predicate agrees with the oracle at the sentinel point, so the \
             control has lost its teeth"
                .into(),
        );
    }
    if honest != oracle {
        return Err("the honest closed form disagrees with the oracle at the sentinel point".into());
    }
    Ok(())
}
