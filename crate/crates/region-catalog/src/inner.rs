//! Closed-form inner approximations of the L-space region of a whole
//! splice tree.
//!
//! For each vertex `v` with unfilled components `I_v` the approximation
//! gives three pieces over the tuple `y ∈ (ℚ∪{∞})^{I_v}`:
//!
//! * `L^min−`: `Σ⌈y_i⌉ ≤ m⁻_v`, minus (when present) the boundary-layer
//!   exclusion `{Σ⌈y⌉ = 0, Σ⌊frac(−y_i)·t⁻⌋ = 0}`;
//! * `ℛ∖𝒵`: exactly one coordinate at the fiber slope ∞, the rest
//!   finite and arbitrary;
//! * `L^min+`: `Σ⌊y_i⌋ ≥ m⁺_v`, minus (when present)
//!   `{Σ⌊y⌋ = 0, Σ⌊frac(y_i)·t⁺⌋ = 0}`.
//!
//! The product over all vertices of the three-piece unions is contained
//! in the L-space region decided by the recursive oracle, and lies in
//! the monotone stratum. The bounds `m^±` aggregate one constant per
//! incoming splice and a correction depending on the vertex's own
//! weights and its outgoing splice; the two lower-bound variants differ
//! in those constants. Exclusion multipliers arise only at vertices with
//! no spliced link component (`J_v = ∅`); a multiplier of `0` degenerates
//! to excluding the entire `Σ = 0` boundary layer.
//!
//! At the root the correction terms are shared by both variants, and for
//! a single-vertex tree the minus piece with its exclusion is exactly
//! the negative-side Λ-orbit of the two-sided regime — the inner region
//! is sharp there.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use satellite_graph::{algebraicity_check, edge_delta, CompanionKnot, SatelliteTree, SlopeAssignment};
use slope_core::{bracket_mod, ExtendedSlope};

use crate::util::{all_finite, residue_sum_neg, residue_sum_pos, sum_ceil, sum_floor};
use crate::CatalogError;

/// Which family of lower-bound formulas to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerVariant {
    /// Iterated torus-link satellites: every splice is smooth; vertex
    /// weights `q` may be negative (but not zero).
    Iterated,
    /// Algebraic-link satellites: all vertex weights `q > 0` and all
    /// edge intersection weights positive; exceptional splices allowed.
    Algebraic,
}

/// The three-piece inner region of a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexInnerRegion {
    /// Vertex id in the tree.
    pub vertex: String,
    /// Unfilled component indices at this vertex, ascending.
    pub slots: Vec<usize>,
    /// Lower bound of the positive piece: `Σ⌊y_i⌋ ≥ m_plus`.
    pub m_plus: BigInt,
    /// Upper bound of the negative piece: `Σ⌈y_i⌉ ≤ m_minus`.
    pub m_minus: BigInt,
    /// Boundary-layer exclusion multiplier for the positive piece.
    pub exclusion_plus: Option<BigInt>,
    /// Boundary-layer exclusion multiplier for the negative piece.
    pub exclusion_minus: Option<BigInt>,
    /// Set on the root factor when the degenerate boundary fallback was
    /// requested: the negative piece is removed entirely.
    pub minus_piece_removed: bool,
}

impl VertexInnerRegion {
    /// Number of unfilled components at this vertex.
    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    /// Membership in the negative piece (finite tuples only).
    pub fn in_l_min_minus(&self, y: &[ExtendedSlope]) -> bool {
        if self.minus_piece_removed || y.len() != self.arity() || !all_finite(y) {
            return false;
        }
        let sc = sum_ceil(y).expect("finite");
        if sc > self.m_minus {
            return false;
        }
        if let Some(t) = &self.exclusion_minus {
            if sc.is_zero() && residue_sum_neg(y, t).is_zero() {
                return false;
            }
        }
        true
    }

    /// Membership in the positive piece (finite tuples only).
    pub fn in_l_min_plus(&self, y: &[ExtendedSlope]) -> bool {
        if y.len() != self.arity() || !all_finite(y) {
            return false;
        }
        let sf = sum_floor(y).expect("finite");
        if sf < self.m_plus {
            return false;
        }
        if let Some(t) = &self.exclusion_plus {
            if sf.is_zero() && residue_sum_pos(y, t).is_zero() {
                return false;
            }
        }
        true
    }

    /// Membership in the single-∞ piece: exactly one coordinate at the
    /// fiber slope, the others finite (arbitrary).
    pub fn in_r_minus_z(&self, y: &[ExtendedSlope]) -> bool {
        y.len() == self.arity() && y.iter().filter(|s| s.is_infinite()).count() == 1
    }

    /// Union of the three pieces.
    pub fn contains(&self, y: &[ExtendedSlope]) -> bool {
        if y.len() != self.arity() {
            return false;
        }
        match y.iter().filter(|s| s.is_infinite()).count() {
            0 => self.in_l_min_minus(y) || self.in_l_min_plus(y),
            1 => true,
            _ => false,
        }
    }
}

/// The product inner region over all vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerRegions {
    pub variant: InnerVariant,
    /// Per-vertex factors, sorted by vertex id.
    pub per_vertex: Vec<VertexInnerRegion>,
}

impl InnerRegions {
    pub fn vertex(&self, id: &str) -> Option<&VertexInnerRegion> {
        self.per_vertex.iter().find(|v| v.vertex == id)
    }

    /// Membership of a full slope assignment: every vertex factor must
    /// contain its tuple.
    pub fn contains(&self, a: &SlopeAssignment) -> Result<bool, CatalogError> {
        for v in &self.per_vertex {
            let mut y = Vec::with_capacity(v.slots.len());
            for &i in &v.slots {
                let s = a.get(&v.vertex, i).ok_or_else(|| {
                    CatalogError::InvalidInput(format!(
                        "missing slope for vertex {:?} component {i}",
                        v.vertex
                    ))
                })?;
                y.push(s.clone());
            }
            if !v.contains(&y) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `⌈a/b⌉` for `b > 0`.
fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// Per-edge constants added into the parent's bounds (negative side,
/// positive side).
fn in_edge_terms(
    tree: &SatelliteTree,
    variant: InnerVariant,
    edge_idx: usize,
) -> Result<(BigInt, BigInt), CatalogError> {
    let edge = &tree.edges[edge_idx];
    let child = tree.vertex(&edge.from)?;
    match variant {
        InnerVariant::Iterated => {
            let minus = child.p.div_floor(&child.q) + BigInt::one();
            let plus = child.p.div_ceil(&child.q) - BigInt::one();
            Ok((minus, plus))
        }
        InnerVariant::Algebraic => {
            if edge.j == -1 {
                let parent = tree.vertex(&edge.to)?;
                let delta = edge_delta(tree, edge)?;
                let minus = ceil_div(&child.p, &(&parent.p * &delta)) + BigInt::one();
                Ok((minus, BigInt::zero()))
            } else {
                Ok((BigInt::one(), BigInt::zero()))
            }
        }
    }
}

/// The correction terms and exclusion multipliers of one vertex's own
/// weights: `(corr_minus, corr_plus, excl_minus, excl_plus)`.
#[allow(clippy::type_complexity)]
fn own_terms(
    tree: &SatelliteTree,
    variant: InnerVariant,
    id: &str,
) -> Result<(BigInt, BigInt, Option<BigInt>, Option<BigInt>), CatalogError> {
    let v = tree.vertex(id)?;
    let j_nonempty = !tree.smooth_in_slots(id).is_empty();
    let one = BigInt::one();
    let two = BigInt::from(2);
    // p/q < −1 ⟺ q < 0 and p + q > 0; p/q > 1 ⟺ q > 0 and p > q.
    let ratio_lt_neg_one = v.q.is_negative() && (&v.p + &v.q).is_positive();
    let ratio_gt_one = v.q.is_positive() && v.p > v.q;

    let is_root = tree.outgoing(id).is_none();
    if is_root {
        // Shared by both variants. With spliced components the −1-style
        // margins below suffice; without them the boundary-layer
        // exclusions built by the caller make the bounds exact.
        let corr_minus = if v.q == one {
            two.clone()
        } else if j_nonempty && (v.q > one || ratio_lt_neg_one) {
            one.clone()
        } else {
            BigInt::zero()
        };
        let corr_plus = if v.q == -one.clone() {
            two
        } else if j_nonempty && (v.q < -one.clone() || ratio_gt_one) {
            one
        } else {
            BigInt::zero()
        };
        return Ok((corr_minus, corr_plus, None, None));
    }

    match variant {
        InnerVariant::Iterated => {
            let corr_minus = if v.q == one {
                two.clone()
            } else if j_nonempty && (v.q > one || ratio_lt_neg_one) {
                one.clone()
            } else {
                BigInt::zero()
            };
            let corr_plus = if v.q == -one.clone() {
                two
            } else if j_nonempty && (v.q < -one.clone() || ratio_gt_one) {
                one.clone()
            } else {
                BigInt::zero()
            };
            let (excl_minus, excl_plus) = if j_nonempty {
                (None, None)
            } else {
                let em = if v.q > one {
                    Some(bracket_mod(&-&v.p, &v.q))
                } else if ratio_lt_neg_one {
                    Some(bracket_mod(&v.p, &v.q))
                } else {
                    None
                };
                let ep = if ratio_gt_one {
                    Some(bracket_mod(&v.p, &v.q))
                } else if v.q < -one {
                    Some(bracket_mod(&-&v.p, &v.q))
                } else {
                    None
                };
                (em, ep)
            };
            Ok((corr_minus, corr_plus, excl_minus, excl_plus))
        }
        InnerVariant::Algebraic => {
            let out = tree.outgoing(id).expect("non-root has an outgoing edge");
            let exceptional_out = out.j == -1;
            let corr_minus = if exceptional_out {
                let parent = tree.vertex(&out.to)?;
                let delta = edge_delta(tree, out)?;
                ceil_div(&parent.p, &(&v.p * &delta)) + BigInt::one()
            } else if j_nonempty {
                one
            } else {
                BigInt::zero()
            };
            let excl_minus = if !j_nonempty && !exceptional_out {
                Some(&v.q - &v.p)
            } else {
                None
            };
            Ok((corr_minus, BigInt::zero(), excl_minus, None))
        }
    }
}

/// Builds the per-vertex inner regions of a tree.
///
/// `allow_root_boundary` opts into the degenerate case of a nontrivial
/// companion with root weights `p = 1, q = 2·genus − 1`: the product
/// region is then valid with the root's negative piece removed. Without
/// the flag that case (and any root weights below the companion
/// threshold) is reported as a hypothesis violation.
pub fn inner_min_regions(
    tree: &SatelliteTree,
    variant: InnerVariant,
    allow_root_boundary: bool,
) -> Result<InnerRegions, CatalogError> {
    tree.require_valid()?;

    match variant {
        InnerVariant::Iterated => {
            if tree.edges.iter().any(|e| e.j == -1) {
                return Err(CatalogError::HypothesisNotMet(
                    "the iterated lower bound covers smooth splices only; this tree has an \
                     exceptional splice (use the algebraic variant)"
                        .into(),
                ));
            }
            for (id, v) in &tree.vertices {
                if v.q.is_zero() {
                    return Err(CatalogError::HypothesisNotMet(format!(
                        "vertex {id:?} has weight q = 0 (an unlink pattern), outside the \
                         iterated lower-bound hypotheses"
                    )));
                }
            }
        }
        InnerVariant::Algebraic => {
            let report = algebraicity_check(tree)?;
            if !report.is_algebraic {
                return Err(CatalogError::HypothesisNotMet(
                    "the tree is not the exterior of an algebraic link: the algebraic lower \
                     bound needs every vertex weight q > 0 and every edge intersection weight \
                     positive"
                        .into(),
                ));
            }
        }
    }

    // Companion gate and root-boundary fallback.
    let root_id = tree.root.clone();
    let root = tree.vertex(&root_id)?;
    let mut minus_removed_at_root = false;
    let companion_threshold = match &tree.companion {
        CompanionKnot::Unknot => BigInt::from(-1),
        CompanionKnot::PositiveLSpaceKnot { genus } => {
            let n = BigInt::from(2) * BigInt::from(*genus) - BigInt::one();
            let qp_ok = root.q >= &root.p * &n;
            let strict_ok = root.q > n;
            if !(qp_ok && strict_ok) {
                if qp_ok && root.p.is_one() && root.q == n {
                    if allow_root_boundary {
                        minus_removed_at_root = true;
                    } else {
                        return Err(CatalogError::HypothesisNotMet(format!(
                            "root weights ({}, {}) sit exactly at the companion threshold \
                             2·genus − 1 = {n}: the region is a coproduct there, not a \
                             product; request the boundary fallback to get the product \
                             region with the root's negative piece removed",
                            root.p, root.q
                        )));
                    }
                } else if root.p.is_one() {
                    return Err(CatalogError::HypothesisNotMet(format!(
                        "root weights ({}, {}) lie below the companion threshold \
                         2·genus − 1 = {n}: the region is the lattice ray there and has no \
                         product inner approximation",
                        root.p, root.q
                    )));
                } else {
                    return Err(CatalogError::HypothesisNotMet(format!(
                        "root weights ({}, {}) lie below the companion threshold \
                         2·genus − 1 = {n}: the region is the integer lattice there and has \
                         no product inner approximation",
                        root.p, root.q
                    )));
                }
            }
            n
        }
        CompanionKnot::FloerSimple { .. } => {
            return Err(CatalogError::HypothesisNotMet(
                "the closed-form lower bounds are proven for unknot and positive-knot \
                 companions only"
                    .into(),
            ));
        }
    };

    let mut per_vertex = Vec::new();
    for id in tree.vertices.keys() {
        let v = tree.vertex(id)?;
        let slots = tree.free_slots(id)?;
        let (corr_minus, corr_plus, mut excl_minus, mut excl_plus) =
            own_terms(tree, variant, id)?;

        let mut sum_minus = BigInt::zero();
        let mut sum_plus = BigInt::zero();
        for k in 0..tree.edges.len() {
            if tree.edges[k].to == *id {
                let (cm, cp) = in_edge_terms(tree, variant, k)?;
                sum_minus += cm;
                sum_plus += cp;
            }
        }

        let is_root = *id == root_id;
        let minus_piece_removed = is_root && minus_removed_at_root;
        if is_root && tree.smooth_in_slots(id).is_empty() {
            // Exact boundary-layer exclusions at a root with no spliced
            // link components: width of the correction layer between the
            // fiber slope and the companion threshold.
            let two = BigInt::from(2);
            if v.q >= two && !minus_piece_removed {
                excl_minus = Some(&v.q - &v.p * &companion_threshold);
            }
            if v.q <= -two {
                excl_plus = Some(v.q.abs() - &v.p * &companion_threshold);
            }
        }

        per_vertex.push(VertexInnerRegion {
            vertex: id.clone(),
            slots,
            m_plus: -sum_plus + corr_plus,
            m_minus: -sum_minus - corr_minus,
            exclusion_plus: excl_plus,
            exclusion_minus: excl_minus,
            minus_piece_removed,
        });
    }

    Ok(InnerRegions {
        variant,
        per_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use satellite_graph::{TreeEdge, VertexData};
    use std::collections::BTreeMap;

    fn s(a: i64, b: i64) -> ExtendedSlope {
        ExtendedSlope::from_fraction(a, b)
    }

    fn two_vertex_tree(
        root_pq: (i64, i64),
        child_pq: (i64, i64),
        j: i64,
        companion: CompanionKnot,
    ) -> SatelliteTree {
        let mut vertices = BTreeMap::new();
        vertices.insert(
            "r".to_string(),
            VertexData {
                p: BigInt::from(root_pq.0),
                q: BigInt::from(root_pq.1),
                n: 2,
            },
        );
        vertices.insert(
            "c".to_string(),
            VertexData {
                p: BigInt::from(child_pq.0),
                q: BigInt::from(child_pq.1),
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
            companion,
        }
    }

    #[test]
    fn single_vertex_unknot_bounds() {
        let t = SatelliteTree::single_vertex(
            BigInt::from(2),
            BigInt::from(3),
            2,
            CompanionKnot::Unknot,
        );
        let r = inner_min_regions(&t, InnerVariant::Iterated, false).unwrap();
        let v = r.vertex(&t.root).unwrap();
        assert_eq!(v.m_plus, BigInt::zero());
        assert_eq!(v.m_minus, BigInt::zero());
        assert_eq!(v.exclusion_minus, Some(BigInt::from(5)));
        assert_eq!(v.exclusion_plus, None);
        assert!(!v.minus_piece_removed);
        assert_eq!(v.arity(), 2);

        // Boundary-layer membership: Seifert data (−1/5, 0) survives the
        // exclusion (frac(1/5)·5 = 1), (−1/6, 0) does not.
        assert!(v.in_l_min_minus(&[s(-1, 5), s(0, 1)]));
        assert!(!v.in_l_min_minus(&[s(-1, 6), s(0, 1)]));
        assert!(v.in_l_min_minus(&[s(-1, 2), s(-3, 1)]));
        assert!(v.in_l_min_plus(&[s(1, 2), s(1, 2)]));
        assert!(!v.in_l_min_plus(&[s(-1, 5), s(0, 1)]));
        assert!(v.in_r_minus_z(&[ExtendedSlope::infinity(), s(7, 3)]));
        assert!(!v.in_r_minus_z(&[ExtendedSlope::infinity(), ExtendedSlope::infinity()]));
        assert!(v.contains(&[ExtendedSlope::infinity(), s(7, 3)]));
    }

    #[test]
    fn iterated_two_vertex_bounds() {
        let t = two_vertex_tree((2, 3), (3, -2), 1, CompanionKnot::Unknot);
        let r = inner_min_regions(&t, InnerVariant::Iterated, false).unwrap();
        let root = r.vertex("r").unwrap();
        let child = r.vertex("c").unwrap();

        // Child: leaf with p/q = −3/2 < −1 and q < −1.
        assert_eq!(child.m_minus, BigInt::zero());
        assert_eq!(child.m_plus, BigInt::zero());
        assert_eq!(child.exclusion_minus, Some(BigInt::one()));
        assert_eq!(child.exclusion_plus, Some(BigInt::one()));
        // Multiplier 1 boundary layers are excluded entirely:
        // the pieces are {Σ⌈y⌉ ≤ −1} and {Σ⌊y⌋ ≥ 1}.
        assert!(child.in_l_min_minus(&[s(-1, 1)]));
        assert!(!child.in_l_min_minus(&[s(-1, 2)]));
        assert!(child.in_l_min_plus(&[s(1, 1)]));
        assert!(!child.in_l_min_plus(&[s(1, 2)]));

        // Root: child term ⌊3/−2⌋+1 = −1 on the minus side and
        // ⌈3/−2⌉−1 = −2 on the plus side, q = 3 > 1 correction 1.
        assert_eq!(root.m_minus, BigInt::zero());
        assert_eq!(root.m_plus, BigInt::from(2));
        assert_eq!(root.exclusion_minus, None);
        assert_eq!(root.exclusion_plus, None);
        assert_eq!(root.arity(), 1);
    }

    #[test]
    fn algebraic_two_vertex_bounds() {
        let t = two_vertex_tree((2, 3), (2, 13), 1, CompanionKnot::Unknot);
        let r = inner_min_regions(&t, InnerVariant::Algebraic, false).unwrap();
        let root = r.vertex("r").unwrap();
        let child = r.vertex("c").unwrap();

        assert_eq!(child.m_minus, BigInt::zero());
        assert_eq!(child.m_plus, BigInt::zero());
        assert_eq!(child.exclusion_minus, Some(BigInt::from(11)));
        assert_eq!(child.exclusion_plus, None);

        assert_eq!(root.m_minus, BigInt::from(-2));
        assert_eq!(root.m_plus, BigInt::zero());
        assert_eq!(root.exclusion_minus, None);
    }

    #[test]
    fn algebraic_exceptional_leaf_bounds() {
        let t = two_vertex_tree((2, 3), (2, 7), -1, CompanionKnot::Unknot);
        // Δ = p_root·q_child − p_child·q_root = 14 − 6 = 8 > 0.
        let r = inner_min_regions(&t, InnerVariant::Algebraic, false).unwrap();
        let child = r.vertex("c").unwrap();
        // m⁻ = −(⌈p_root/(p_child·Δ)⌉ + 1) = −(⌈2/16⌉ + 1) = −2.
        assert_eq!(child.m_minus, BigInt::from(-2));
        assert_eq!(child.exclusion_minus, None);
        assert_eq!(child.m_plus, BigInt::zero());

        let root = r.vertex("r").unwrap();
        // In-edge term ⌈2/16⌉ + 1 = 2; no spliced link component, so the
        // exact boundary exclusion with width q + p applies.
        assert_eq!(root.m_minus, BigInt::from(-2));
        assert_eq!(root.exclusion_minus, Some(BigInt::from(5)));
        assert_eq!(root.m_plus, BigInt::zero());
        // Both of the root's own link components stay unfilled.
        assert_eq!(root.arity(), 2);
    }

    #[test]
    fn iterated_rejects_exceptional_edges() {
        let t = two_vertex_tree((2, 3), (2, 7), -1, CompanionKnot::Unknot);
        let err = inner_min_regions(&t, InnerVariant::Iterated, false).unwrap_err();
        assert!(matches!(err, CatalogError::HypothesisNotMet(_)));
    }

    #[test]
    fn algebraic_rejects_negative_weights() {
        let t = two_vertex_tree((2, 3), (3, -2), 1, CompanionKnot::Unknot);
        let err = inner_min_regions(&t, InnerVariant::Algebraic, false).unwrap_err();
        assert!(matches!(err, CatalogError::HypothesisNotMet(_)));
    }

    #[test]
    fn companion_threshold_gate() {
        let below = SatelliteTree::single_vertex(
            BigInt::from(2),
            BigInt::from(9),
            1,
            CompanionKnot::PositiveLSpaceKnot { genus: 5 },
        );
        assert!(matches!(
            inner_min_regions(&below, InnerVariant::Iterated, false),
            Err(CatalogError::HypothesisNotMet(_))
        ));

        let at_boundary = SatelliteTree::single_vertex(
            BigInt::from(1),
            BigInt::from(9),
            1,
            CompanionKnot::PositiveLSpaceKnot { genus: 5 },
        );
        assert!(matches!(
            inner_min_regions(&at_boundary, InnerVariant::Iterated, false),
            Err(CatalogError::HypothesisNotMet(_))
        ));
        let fallback = inner_min_regions(&at_boundary, InnerVariant::Iterated, true).unwrap();
        let v = fallback.vertex(&at_boundary.root).unwrap();
        assert!(v.minus_piece_removed);
        assert!(!v.in_l_min_minus(&[s(-2, 1)]));
        assert!(v.in_l_min_plus(&[s(0, 1)]));

        let above = SatelliteTree::single_vertex(
            BigInt::from(2),
            BigInt::from(23),
            2,
            CompanionKnot::PositiveLSpaceKnot { genus: 5 },
        );
        let r = inner_min_regions(&above, InnerVariant::Iterated, false).unwrap();
        let v = r.vertex(&above.root).unwrap();
        assert_eq!(v.m_minus, BigInt::zero());
        assert_eq!(v.m_plus, BigInt::zero());
        // Exact exclusion width δ = q − p·(2g−1) = 23 − 18 = 5.
        assert_eq!(v.exclusion_minus, Some(BigInt::from(5)));
    }

    #[test]
    fn floer_simple_companion_rejected() {
        use slope_core::SlopeInterval;
        let t = SatelliteTree::single_vertex(
            BigInt::from(2),
            BigInt::from(3),
            1,
            CompanionKnot::FloerSimple {
                interval: SlopeInterval::closed_arc(s(1, 1), ExtendedSlope::infinity()).unwrap(),
            },
        );
        assert!(matches!(
            inner_min_regions(&t, InnerVariant::Iterated, false),
            Err(CatalogError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn assignment_membership() {
        let t = two_vertex_tree((2, 3), (3, -2), 1, CompanionKnot::Unknot);
        let r = inner_min_regions(&t, InnerVariant::Iterated, false).unwrap();
        let mut a = SlopeAssignment::new();
        a.set("r", 2, s(5, 2)); // Σ⌊y⌋ = 2 ≥ m⁺ = 2
        a.set("c", 1, s(-3, 2)); // Σ⌈y⌉ = −1 ≤ 0, excluded layer avoided
        assert!(r.contains(&a).unwrap());

        let mut b = SlopeAssignment::new();
        b.set("r", 2, s(3, 2)); // Σ⌊y⌋ = 1 < 2 and Σ⌈y⌉ = 2 > 0
        b.set("c", 1, s(-3, 2));
        assert!(!r.contains(&b).unwrap());
    }
}
