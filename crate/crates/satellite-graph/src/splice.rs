//! Splice matrices, edge determinants, and the algebraicity test.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use slope_core::{lft_apply, ExtendedSlope, IntMatrix2};

use crate::{GraphError, SatelliteTree, TreeEdge};
use seifert_engine::SeifertVertex;

/// Slope map of a smooth splice with child piece `w`: the child's outer
/// boundary is glued to a parent link component so that the gluing
/// exchanges the roles of fiber and base directions. The matrix is
/// `[[p_w, −q*_w], [q_w, −p*_w]]` with determinant −1.
pub fn smooth_splice_matrix(w: &SeifertVertex) -> IntMatrix2 {
    IntMatrix2::new(
        w.p.clone(),
        -w.q_star.clone(),
        w.q.clone(),
        -w.p_star.clone(),
    )
    .expect("splice matrix of a valid piece is unimodular")
}

/// Slope map of the splice along edge `e`, sending child-basis slopes to
/// the parent basis. Smooth edges use [`smooth_splice_matrix`]; the
/// exceptional splice (`j = −1`) composes with the parent's change of
/// basis at its multiplicity-`p` fiber, `[[p*_u, −q*_u], [−q_u, p_u]]`.
/// Both cases have determinant −1 (orientation reversing).
pub fn splice_matrix(t: &SatelliteTree, e: &TreeEdge) -> Result<IntMatrix2, GraphError> {
    let w = t.seifert(&e.from)?;
    let m = smooth_splice_matrix(&w);
    if e.j == -1 {
        let u = t.seifert(&e.to)?;
        let basis = IntMatrix2::new(
            u.p_star.clone(),
            -u.q_star.clone(),
            -u.q.clone(),
            u.p.clone(),
        )?;
        Ok(basis.mul(&m))
    } else {
        Ok(m)
    }
}

/// The two distinguished slopes of a splice edge: `xi` is the image of ∞
/// under the splice map (where the child's fiber direction lands in the
/// parent basis) and `eta` its preimage (the child-basis slope sent to
/// the parent's fiber direction). Both govern the monotone-stratum
/// conditions.
pub fn asymptotes(
    t: &SatelliteTree,
    e: &TreeEdge,
) -> Result<(ExtendedSlope, ExtendedSlope), GraphError> {
    let m = splice_matrix(t, e)?;
    let xi = lft_apply(&m, &ExtendedSlope::infinity());
    let eta = lft_apply(&m.inverse(), &ExtendedSlope::infinity());
    Ok((xi, eta))
}

/// Intersection weight of one edge: for the exceptional splice
/// `Δ = p_to·q_from − p_from·q_to`, for a smooth splice
/// `Δ = q_from − p_to·p_from·q_to`.
pub fn edge_delta(t: &SatelliteTree, e: &TreeEdge) -> Result<BigInt, GraphError> {
    let child = t.vertex(&e.from)?;
    let parent = t.vertex(&e.to)?;
    Ok(if e.j == -1 {
        &parent.p * &child.q - &child.p * &parent.q
    } else {
        &child.q - &parent.p * &child.p * &parent.q
    })
}

/// Result of [`algebraicity_check`]: the per-edge intersection weights
/// (keyed by the child vertex id) and whether the tree is the exterior
/// of an algebraic link (all vertex weights `q > 0` and all edge weights
/// positive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicityReport {
    pub is_algebraic: bool,
    pub deltas: BTreeMap<String, BigInt>,
}

pub fn algebraicity_check(t: &SatelliteTree) -> Result<AlgebraicityReport, GraphError> {
    t.require_valid()?;
    let mut deltas = BTreeMap::new();
    let mut is_algebraic = t
        .vertices
        .values()
        .all(|v| v.q > BigInt::zero());
    for e in &t.edges {
        let delta = edge_delta(t, e)?;
        if delta <= BigInt::zero() {
            is_algebraic = false;
        }
        deltas.insert(e.from.clone(), delta);
    }
    Ok(AlgebraicityReport {
        is_algebraic,
        deltas,
    })
}
