//! Reduced interval endpoints and the a-priori bounds they satisfy.
//!
//! The reduced endpoints are the vertex interval's extrema with the
//! integer parts of all filled slopes and pulled child data stripped
//! away; they live in a window of width one around the fiber's data
//! slope and obey sharper one-sided bounds whenever a certain residue
//! sum is positive. Checking those bounds on computed states is a
//! strong self-test of the window search.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use slope_core::{bracket_mod, lft_apply, ExtendedSlope};

use crate::splice::smooth_splice_matrix;
use crate::state::{bi_interval_endpoints, Session, SlotContribution};
use crate::{GraphError, SatelliteTree, SlopeAssignment};

/// The vertex interval's extrema with the integer parts of the filled
/// slopes and pulled child data stripped away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedEndpoints {
    pub minus: ExtendedSlope,
    pub plus: ExtendedSlope,
}

struct ReducedData {
    endpoints: ReducedEndpoints,
    /// Finite point contributions: filled slopes and pulled
    /// compressible-child longitudes (the fiber's own data slope is
    /// excluded).
    points: Vec<ExtendedSlope>,
    /// (lo, hi) endpoint pairs of pulled incompressible children.
    lohi: Vec<(ExtendedSlope, ExtendedSlope)>,
}

/// Strips the integer parts of all point and interval data out of the
/// computed extrema at `id`. Returns `None` when the reduction is not
/// defined: an exceptional child occupies the data slot, some input is
/// infinite, or the subtree is dead.
pub fn reduced_endpoints(
    t: &SatelliteTree,
    id: &str,
    a: &SlopeAssignment,
) -> Result<Option<ReducedEndpoints>, GraphError> {
    let session = Session::new(t)?;
    Ok(reduced_data(&session, id, a)?.map(|d| d.endpoints))
}

fn reduced_data(
    session: &Session<'_>,
    id: &str,
    a: &SlopeAssignment,
) -> Result<Option<ReducedData>, GraphError> {
    let outcome = session.assemble(id, a)?;
    if outcome.dead {
        return Ok(None);
    }
    let asm = &outcome.assembled;
    if !matches!(asm.slot, SlotContribution::ExceptionalData(_)) {
        return Ok(None);
    }
    let mut points: Vec<ExtendedSlope> = asm.assigned.clone();
    points.extend(asm.smooth_bc.iter().map(|(_, s)| s.clone()));
    if points.iter().any(ExtendedSlope::is_infinite) {
        return Ok(None);
    }
    let mut lohi = Vec::new();
    for (_, interval) in &asm.smooth_bi {
        let (lo, hi) = bi_interval_endpoints(interval);
        if lo.is_infinite() || hi.is_infinite() {
            return Ok(None);
        }
        lohi.push((lo, hi));
    }

    let state = session.vertex_state(id, a)?;
    let extrema = state
        .extrema
        .expect("non-dead states carry window extrema");

    let mut shift_minus = BigInt::zero();
    let mut shift_plus = BigInt::zero();
    for y in &points {
        shift_minus += y.floor().expect("finite by the check above");
        shift_plus += y.ceil().expect("finite by the check above");
    }
    for (lo, hi) in &lohi {
        shift_minus += hi.ceil().expect("finite by the check above") - BigInt::one();
        shift_plus += lo.floor().expect("finite by the check above") + BigInt::one();
    }
    Ok(Some(ReducedData {
        endpoints: ReducedEndpoints {
            minus: extrema.y_minus.add_integer(&shift_minus),
            plus: extrema.y_plus.add_integer(&shift_plus),
        },
        points,
        lohi,
    }))
}

/// The residue sum controlling the lower reduced endpoint at scale `k`:
/// each incompressible child contributes ⌈{hi}·k⌉ − 1 and each point
/// contributes ⌊{y}·k⌋, where {·} is the fractional part.
fn residue_sum_minus(data: &ReducedData, k: &BigInt) -> BigInt {
    let k = ExtendedSlope::from_integer(k.clone());
    let mut acc = BigInt::zero();
    for (_, hi) in &data.lohi {
        let f = hi.frac().expect("finite");
        acc += f.checked_mul(&k).expect("finite").ceil().expect("finite") - BigInt::one();
    }
    for y in &data.points {
        let f = y.frac().expect("finite");
        acc += f.checked_mul(&k).expect("finite").floor().expect("finite");
    }
    acc
}

/// Mirror of [`residue_sum_minus`] for the upper endpoint: fractional
/// parts are taken of the negated data.
fn residue_sum_plus(data: &ReducedData, k: &BigInt) -> BigInt {
    let k = ExtendedSlope::from_integer(k.clone());
    let mut acc = BigInt::zero();
    for (lo, _) in &data.lohi {
        let f = lo.neg().frac().expect("finite");
        acc += f.checked_mul(&k).expect("finite").ceil().expect("finite") - BigInt::one();
    }
    for y in &data.points {
        let f = y.neg().frac().expect("finite");
        acc += f.checked_mul(&k).expect("finite").floor().expect("finite");
    }
    acc
}

/// Verifies the one-sided bounds on the reduced endpoints at `id`, both
/// in the vertex's own basis and through its childward splice map.
/// Vacuously true when the reduction is undefined (exceptional child,
/// infinite input, or dead subtree) or when neither residue-sum trigger
/// fires.
pub fn reduced_endpoint_bounds_check(
    t: &SatelliteTree,
    id: &str,
    a: &SlopeAssignment,
) -> Result<bool, GraphError> {
    let session = Session::new(t)?;
    let Some(data) = reduced_data(&session, id, a)? else {
        return Ok(true);
    };

    let piece = t.seifert(id)?;
    let p = &piece.p;
    let q = &piece.q;
    // The margin bounds need multiplicity at least two: at p = 1 the
    // strict inequalities degrade to equalities (e.g. (p,q) = (1,3)
    // filled at 11/2 has upper reduced endpoint exactly 1/3 + 1/6).
    if *p < BigInt::from(2) {
        return Ok(true);
    }
    let phi = smooth_splice_matrix(&piece);
    let p_over_q = ExtendedSlope::new(p.clone(), q.clone()).expect("q is nonzero");
    let ceil_bound = ExtendedSlope::from_integer(p_over_q.ceil().expect("finite") - BigInt::one());
    let floor_bound =
        ExtendedSlope::from_integer(p_over_q.floor().expect("finite") + BigInt::one());
    // p*/q is the pole of the childward splice map: the slope it sends
    // to ∞. Both bounds say the reduced endpoints keep a quantified
    // distance from it on the correct side.
    let pole = ExtendedSlope::new(piece.p_star.clone(), q.clone()).expect("q is nonzero");

    let k_pos = bracket_mod(p, q);
    let k_neg = bracket_mod(&-p.clone(), q);

    // Scale at which each trigger is evaluated: the residue of ±p mod
    // |q|, with the roles swapped when q is negative.
    let (k_minus, k_plus) = if q.is_positive() {
        (k_pos, k_neg)
    } else {
        (k_neg, k_pos)
    };

    let mut ok = true;
    if k_minus >= BigInt::one() && residue_sum_minus(&data, &k_minus).is_positive() {
        let margin = ExtendedSlope::new(BigInt::one(), &k_minus * q.abs()).expect("nonzero");
        let upper = pole.checked_sub(&margin).expect("finite arithmetic");
        ok &= data.endpoints.minus.cmp_linear(&upper) == Ordering::Less;
        ok &= lft_apply(&phi, &data.endpoints.minus).cmp_linear(&ceil_bound) == Ordering::Greater;
    }
    if k_plus >= BigInt::one() && residue_sum_plus(&data, &k_plus).is_positive() {
        let margin = ExtendedSlope::new(BigInt::one(), &k_plus * q.abs()).expect("nonzero");
        let lower = pole.checked_add(&margin).expect("finite arithmetic");
        ok &= data.endpoints.plus.cmp_linear(&lower) == Ordering::Greater;
        ok &= lft_apply(&phi, &data.endpoints.plus).cmp_linear(&floor_bound) == Ordering::Less;
    }
    Ok(ok)
}
