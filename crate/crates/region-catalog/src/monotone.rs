//! The monotone stratum of the region.
//!
//! An assignment is *monotone at a vertex* when every incoming splice
//! pulls the child's interval interior across the parent's fiber pole
//! `∞`, and the vertex's own interval spans its outgoing pole — for the
//! root that pole is the companion gluing slope `q*/p`, for any other
//! vertex it is the preimage of `∞` under its outgoing splice. On the
//! stratum where every vertex is monotone, the recursive verdict reduces
//! to nested interval containment, which is where the closed-form inner
//! regions are sharp along their boundary faces.

use satellite_graph::{splice_matrix, SatelliteTree, Session, SlopeAssignment};
use slope_core::ExtendedSlope;

use crate::CatalogError;

/// Monotonicity of one vertex under `a`, reusing a session's memo.
pub fn monotone_at_session(
    session: &Session<'_>,
    vertex: &str,
    a: &SlopeAssignment,
) -> Result<bool, CatalogError> {
    let tree = session.tree();
    tree.vertex(vertex)?;

    for edge in tree.incoming(vertex) {
        let child = session.vertex_state(&edge.from, a)?;
        let m = splice_matrix(tree, edge)?;
        if !child
            .interval
            .interior()
            .map_lft(&m)
            .contains(&ExtendedSlope::infinity())
        {
            return Ok(false);
        }
    }

    let own = session.vertex_state(vertex, a)?;
    let pole = match tree.outgoing(vertex) {
        Some(edge) => {
            // The vertex's interval is pushed into the parent's basis by
            // the splice map; monotonicity asks it to span the parent's
            // fiber pole there. Equivalently: test the pushed interval
            // against ∞.
            let m = splice_matrix(tree, edge)?;
            return Ok(own
                .interval
                .interior()
                .map_lft(&m)
                .contains(&ExtendedSlope::infinity()));
        }
        None => {
            // Root: the companion pull sends ∞ to q*/p.
            let piece = tree.seifert(vertex)?;
            ExtendedSlope::new(piece.q_star.clone(), piece.p.clone())
                .expect("p > 0 in a valid piece")
        }
    };
    Ok(own.interval.interior().contains(&pole))
}

/// One-shot form of [`monotone_at_session`].
pub fn monotone_at(
    tree: &SatelliteTree,
    vertex: &str,
    a: &SlopeAssignment,
) -> Result<bool, CatalogError> {
    let session = Session::new(tree)?;
    monotone_at_session(&session, vertex, a)
}

/// Stratum membership: the filling is an L-space and every vertex is
/// monotone.
pub fn monotone_stratum_member_session(
    session: &Session<'_>,
    a: &SlopeAssignment,
) -> Result<bool, CatalogError> {
    let verdict = session.is_lspace_filling(a)?;
    if !verdict.lspace {
        return Ok(false);
    }
    for id in session.tree().vertices.keys() {
        if !monotone_at_session(session, id, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One-shot form of [`monotone_stratum_member_session`].
pub fn monotone_stratum_member(
    tree: &SatelliteTree,
    a: &SlopeAssignment,
) -> Result<bool, CatalogError> {
    let session = Session::new(tree)?;
    monotone_stratum_member_session(&session, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use satellite_graph::CompanionKnot;
    use slope_core::ExtendedSlope;

    fn genus5_tree() -> SatelliteTree {
        SatelliteTree::single_vertex(
            BigInt::from(2),
            BigInt::from(23),
            2,
            CompanionKnot::PositiveLSpaceKnot { genus: 5 },
        )
    }

    fn assign(tree: &SatelliteTree, ys: &[(i64, i64)]) -> SlopeAssignment {
        let mut a = SlopeAssignment::default();
        let root = tree.root.clone();
        for (i, (n, d)) in ys.iter().enumerate() {
            a.set(&root, i + 1, ExtendedSlope::from_fraction(*n, *d));
        }
        a
    }

    #[test]
    fn positive_corner_is_in_stratum() {
        let t = genus5_tree();
        // Seifert data (1, 1) ⟷ surgery (47, 47): compressible state
        // whose longitude −3/2 sits inside the pulled companion arc, and
        // the longitude-complement interval spans q*/p = 1/2.
        let a = assign(&t, &[(1, 1), (1, 1)]);
        assert!(monotone_stratum_member(&t, &a).unwrap());
        assert!(monotone_at(&t, &t.root, &a).unwrap());
    }

    #[test]
    fn non_lspace_point_is_monotone_but_not_member() {
        let t = genus5_tree();
        // Seifert data (−1/6, −1/6) ⟷ surgery (40, 40): the vertex
        // interval {x ≥ 2} ∪ {x ≤ 3/5} still spans 1/2, but the filling
        // is not an L-space, so stratum membership fails.
        let a = assign(&t, &[(-1, 6), (-1, 6)]);
        assert!(monotone_at(&t, &t.root, &a).unwrap());
        assert!(!monotone_stratum_member(&t, &a).unwrap());
    }

    #[test]
    fn pole_in_interval_gap_breaks_monotonicity() {
        let t = genus5_tree();
        // Seifert data (−1/3, 1/4): the window search gives the interval
        // {x ≥ 5/7} ∪ {x ≤ 0}, whose gap contains the companion pole
        // 1/2, so the root is not monotone (and the filling is not an
        // L-space either).
        let a = assign(&t, &[(-1, 3), (1, 4)]);
        assert!(!monotone_at(&t, &t.root, &a).unwrap());
        assert!(!monotone_stratum_member(&t, &a).unwrap());
    }

    #[test]
    fn integer_data_is_compressible_and_in_stratum() {
        let t = genus5_tree();
        // Integral Seifert data always classifies as compressible; the
        // longitude-complement interval spans every pole and the
        // longitude 13/2 lies in the pulled companion arc.
        let a = assign(&t, &[(-3, 1), (-3, 1)]);
        assert!(monotone_at(&t, &t.root, &a).unwrap());
        assert!(monotone_stratum_member(&t, &a).unwrap());
    }
}
