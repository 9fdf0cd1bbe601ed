//! Recursive boundary-interval computation over the tree and the root
//! gluing test against the companion knot.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use slope_core::{covers_circle, lft_apply, ExtendedSlope, IntMatrix2, SlopeInterval};

use seifert_engine::{
    fiber_exterior_interval, EngineError, FiberExteriorInput, SeifertVertex, DEFAULT_PERIOD_CAP,
};

use crate::splice::splice_matrix;
use crate::{CompanionKnot, GraphError, SatelliteTree, SlopeAssignment};

/// Interval endpoint data of one vertex state: the two extrema of the
/// periodic window search and whether each is attained at finite k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexExtrema {
    pub y_minus: ExtendedSlope,
    pub y_plus: ExtendedSlope,
    pub minus_attained: bool,
    pub plus_attained: bool,
}

/// The classified L-space interval of the subtree below one vertex, seen
/// on that vertex's outer boundary in its own Seifert basis.
///
/// `j_bc`/`j_bi` partition the smooth child slots by whether the child
/// subtree is boundary compressible; `j_bi_z_plus`/`j_bi_z_minus` list
/// the incompressible child slots whose pulled interval has an integral
/// upper/lower endpoint. `extrema` is `None` exactly when the interval
/// is empty by propagation from a child with no L-space fillings (then
/// no window search ran).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexIntervalState {
    pub interval: SlopeInterval,
    pub is_bc: bool,
    pub extrema: Option<VertexExtrema>,
    pub j_bc: Vec<i64>,
    pub j_bi: Vec<i64>,
    pub j_bi_z_plus: Vec<i64>,
    pub j_bi_z_minus: Vec<i64>,
}

/// What occupies the exceptional-fiber slot in the assembled engine
/// input for one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum SlotContribution {
    /// No exceptional child: the fiber's own data slope −q*/p.
    ExceptionalData(ExtendedSlope),
    /// Exceptional child that is boundary compressible, pulled to a
    /// point (its longitude through the splice map).
    PulledPoint(ExtendedSlope),
    /// Boundary-incompressible exceptional child, pulled to an interval.
    PulledInterval(SlopeInterval),
}

/// The engine input of one vertex, broken down by provenance. Kept for
/// the reduced-endpoint bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct AssembledVertex {
    pub slot: SlotContribution,
    /// Filled slopes of the unfilled components, in slot order.
    pub assigned: Vec<ExtendedSlope>,
    /// Smooth boundary-compressible children: (slot, pulled longitude).
    pub smooth_bc: Vec<(i64, ExtendedSlope)>,
    /// Smooth boundary-incompressible children: (slot, pulled interval).
    pub smooth_bi: Vec<(i64, SlopeInterval)>,
}

/// Result of the root gluing test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LspaceVerdict {
    pub lspace: bool,
    pub root_interval: VertexIntervalState,
}

/// A validated tree with per-vertex pieces, splice matrices, and a memo
/// of computed states keyed by the subtree's filled slopes. Build one
/// per thread for grid scans; every method takes `&self`.
pub struct Session<'t> {
    tree: &'t SatelliteTree,
    period_cap: u64,
    pieces: BTreeMap<String, SeifertVertex>,
    /// Incoming edges per vertex, sorted by (slot, child id).
    children: BTreeMap<String, Vec<usize>>,
    /// Splice matrix per edge (indexed like `tree.edges`).
    matrices: Vec<IntMatrix2>,
    /// Free slots in the subtree under each vertex, canonical order.
    subtree_slots: BTreeMap<String, Vec<(String, usize)>>,
    memo: RefCell<HashMap<(String, Vec<String>), VertexIntervalState>>,
}

impl<'t> Session<'t> {
    pub fn new(tree: &'t SatelliteTree) -> Result<Self, GraphError> {
        Self::with_period_cap(tree, DEFAULT_PERIOD_CAP)
    }

    pub fn with_period_cap(tree: &'t SatelliteTree, period_cap: u64) -> Result<Self, GraphError> {
        tree.require_valid()?;
        let mut pieces = BTreeMap::new();
        for id in tree.vertices.keys() {
            pieces.insert(id.clone(), tree.seifert(id)?);
        }
        let mut children: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for id in tree.vertices.keys() {
            let mut idx: Vec<usize> = (0..tree.edges.len())
                .filter(|&k| tree.edges[k].to == *id)
                .collect();
            idx.sort_by_key(|&k| (tree.edges[k].j, tree.edges[k].from.clone()));
            children.insert(id.clone(), idx);
        }
        let matrices = tree
            .edges
            .iter()
            .map(|e| splice_matrix(tree, e))
            .collect::<Result<Vec<_>, _>>()?;
        let mut subtree_slots = BTreeMap::new();
        for id in tree.vertices.keys() {
            let mut slots = Vec::new();
            collect_subtree_slots(tree, &children, id, &mut slots)?;
            subtree_slots.insert(id.clone(), slots);
        }
        Ok(Self {
            tree,
            period_cap,
            pieces,
            children,
            matrices,
            subtree_slots,
            memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn tree(&self) -> &SatelliteTree {
        self.tree
    }

    fn piece(&self, id: &str) -> &SeifertVertex {
        &self.pieces[id]
    }

    fn memo_key(&self, id: &str, a: &SlopeAssignment) -> Result<(String, Vec<String>), GraphError> {
        let mut values = Vec::new();
        for (v, i) in &self.subtree_slots[id] {
            let slope = a.get(v, *i).ok_or_else(|| {
                GraphError::AssignmentMismatch(format!(
                    "missing slope for vertex {v:?} component {i}"
                ))
            })?;
            values.push(slope.to_string());
        }
        Ok((id.to_string(), values))
    }

    /// Engine input assembly for one vertex, recursing into children.
    /// Errors if any child's interval is a single slope or the full
    /// circle (no proven gluing rule); a child with an empty interval
    /// short-circuits to `Ok(None)` (dead subtree).
    pub(crate) fn assemble(
        &self,
        id: &str,
        a: &SlopeAssignment,
    ) -> Result<AssembleOutcome, GraphError> {
        let piece = self.piece(id);
        let mut j_bc = Vec::new();
        let mut j_bi = Vec::new();
        let mut j_bi_z_plus = Vec::new();
        let mut j_bi_z_minus = Vec::new();
        let mut smooth_bc = Vec::new();
        let mut smooth_bi = Vec::new();
        let mut slot = SlotContribution::ExceptionalData(piece.exceptional_data_slope());
        let mut dead = false;

        for &k in &self.children[id] {
            let edge = &self.tree.edges[k];
            let st = self.vertex_state(&edge.from, a)?;
            let m = &self.matrices[k];
            if st.interval == SlopeInterval::Empty {
                dead = true;
                if edge.j != -1 {
                    j_bi.push(edge.j);
                }
                continue;
            }
            if st.is_bc {
                let l = st
                    .extrema
                    .as_ref()
                    .expect("compressible states come from the engine")
                    .y_minus
                    .clone();
                let pulled = lft_apply(m, &l);
                if edge.j == -1 {
                    slot = SlotContribution::PulledPoint(pulled);
                } else {
                    j_bc.push(edge.j);
                    smooth_bc.push((edge.j, pulled));
                }
                continue;
            }
            match &st.interval {
                SlopeInterval::Arc { .. } | SlopeInterval::LongitudeComplement(_) => {
                    let pulled = st.interval.map_lft(m);
                    if edge.j == -1 {
                        slot = SlotContribution::PulledInterval(pulled);
                    } else {
                        let (lo, hi) = bi_interval_endpoints(&pulled);
                        if hi.is_integer() {
                            j_bi_z_plus.push(edge.j);
                        }
                        if lo.is_integer() {
                            j_bi_z_minus.push(edge.j);
                        }
                        j_bi.push(edge.j);
                        smooth_bi.push((edge.j, pulled));
                    }
                }
                other => {
                    return Err(GraphError::Engine(EngineError::UnclassifiedStructure(
                        format!(
                            "child {:?} has interval {other:?}, for which no gluing rule is \
                             proven",
                            edge.from
                        ),
                    )))
                }
            }
        }

        j_bc.sort_unstable();
        j_bi.sort_unstable();
        j_bi_z_plus.sort_unstable();
        j_bi_z_minus.sort_unstable();

        let mut assigned = Vec::new();
        for i in self.tree.free_slots(id)? {
            let slope = a.get(id, i).ok_or_else(|| {
                GraphError::AssignmentMismatch(format!(
                    "missing slope for vertex {id:?} component {i}"
                ))
            })?;
            assigned.push(slope.clone());
        }

        let assembled = AssembledVertex {
            slot,
            assigned,
            smooth_bc,
            smooth_bi,
        };
        Ok(AssembleOutcome {
            assembled,
            dead,
            j_bc,
            j_bi,
            j_bi_z_plus,
            j_bi_z_minus,
        })
    }

    /// The classified interval at `id`'s outer boundary.
    pub fn vertex_state(
        &self,
        id: &str,
        a: &SlopeAssignment,
    ) -> Result<VertexIntervalState, GraphError> {
        let key = self.memo_key(id, a)?;
        if let Some(hit) = self.memo.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let outcome = self.assemble(id, a)?;
        let state = if outcome.dead {
            VertexIntervalState {
                interval: SlopeInterval::Empty,
                is_bc: false,
                extrema: None,
                j_bc: outcome.j_bc,
                j_bi: outcome.j_bi,
                j_bi_z_plus: outcome.j_bi_z_plus,
                j_bi_z_minus: outcome.j_bi_z_minus,
            }
        } else {
            let input = outcome.assembled.engine_input();
            let result = fiber_exterior_interval(&input, self.period_cap)?;
            debug_assert!(
                !(outcome.assembled.is_integral_compressible_pattern()) || result.is_bc,
                "integral all-compressible data must classify as compressible at {id:?}"
            );
            VertexIntervalState {
                interval: result.interval,
                is_bc: result.is_bc,
                extrema: Some(VertexExtrema {
                    y_minus: result.y_minus,
                    y_plus: result.y_plus,
                    minus_attained: result.minus_attained,
                    plus_attained: result.plus_attained,
                }),
                j_bc: outcome.j_bc,
                j_bi: outcome.j_bi,
                j_bi_z_plus: outcome.j_bi_z_plus,
                j_bi_z_minus: outcome.j_bi_z_minus,
            }
        };
        self.memo.borrow_mut().insert(key, state.clone());
        Ok(state)
    }

    /// Decides whether filling every unfilled component per `a` and
    /// gluing the companion to the root boundary yields an L-space.
    pub fn is_lspace_filling(&self, a: &SlopeAssignment) -> Result<LspaceVerdict, GraphError> {
        self.tree.check_assignment(a)?;
        let root_state = self.vertex_state(&self.tree.root, a)?;
        let pull = root_pull_matrix(self.piece(&self.tree.root));

        let lspace = match &self.tree.companion {
            CompanionKnot::Unknot => {
                // Gluing a solid torus is the Dehn filling of the root at
                // the image of the companion's meridian (surgery slope 0),
                // so honest closed membership decides.
                let filling = lft_apply(&pull, &ExtendedSlope::zero());
                root_state.interval.contains(&filling)
            }
            CompanionKnot::PositiveLSpaceKnot { genus } => {
                let n = BigInt::from(2u32) * BigInt::from(*genus) - BigInt::from(1u32);
                let knot_interval = SlopeInterval::closed_arc(
                    ExtendedSlope::from_integer(n),
                    ExtendedSlope::infinity(),
                )
                .expect("the surgery interval of a positive knot is nondegenerate");
                let pulled = knot_interval.map_lft(&pull);
                glue_knotlike(&root_state, &pulled)
            }
            CompanionKnot::FloerSimple { interval } => {
                if interval.interior() == SlopeInterval::Empty {
                    return Err(GraphError::GluingHypothesesUnmet(
                        "the companion interval has at most one slope; the gluing criterion \
                         requires more than one L-space filling"
                            .into(),
                    ));
                }
                let pulled = interval.map_lft(&pull);
                glue_knotlike(&root_state, &pulled)
            }
        };
        Ok(LspaceVerdict {
            lspace,
            root_interval: root_state,
        })
    }
}

/// Gluing test against a nontrivial-knot companion whose L-space
/// interval pulls back to `pulled` on the root boundary: for a
/// boundary-incompressible root the two interval interiors must cover
/// the circle; for a compressible root the longitude must lie in the
/// closed pulled interval; an empty root interval glues to nothing.
fn glue_knotlike(root_state: &VertexIntervalState, pulled: &SlopeInterval) -> bool {
    if root_state.interval == SlopeInterval::Empty {
        return false;
    }
    if root_state.is_bc {
        let l = &root_state
            .extrema
            .as_ref()
            .expect("compressible states come from the engine")
            .y_minus;
        return pulled.closure().contains(l);
    }
    covers_circle(&pulled.interior(), &root_state.interval.interior())
}

/// Change of basis from the companion's surgery coordinates to the root
/// piece's Seifert basis: `[[q*, −p*], [p, −q]]`, determinant +1.
pub(crate) fn root_pull_matrix(root: &SeifertVertex) -> IntMatrix2 {
    IntMatrix2::new(
        root.q_star.clone(),
        -root.p_star.clone(),
        root.p.clone(),
        -root.q.clone(),
    )
    .expect("the basis change of a valid piece is unimodular")
}

pub(crate) struct AssembleOutcome {
    pub assembled: AssembledVertex,
    pub dead: bool,
    pub j_bc: Vec<i64>,
    pub j_bi: Vec<i64>,
    pub j_bi_z_plus: Vec<i64>,
    pub j_bi_z_minus: Vec<i64>,
}

impl AssembledVertex {
    pub fn engine_input(&self) -> FiberExteriorInput {
        let mut slopes = Vec::with_capacity(1 + self.assigned.len() + self.smooth_bc.len());
        let mut intervals = Vec::with_capacity(1 + self.smooth_bi.len());
        match &self.slot {
            SlotContribution::ExceptionalData(s) | SlotContribution::PulledPoint(s) => {
                slopes.push(s.clone())
            }
            SlotContribution::PulledInterval(i) => intervals.push(i.clone()),
        }
        slopes.extend(self.assigned.iter().cloned());
        slopes.extend(self.smooth_bc.iter().map(|(_, s)| s.clone()));
        intervals.extend(self.smooth_bi.iter().map(|(_, i)| i.clone()));
        FiberExteriorInput::new(slopes, intervals)
    }

    /// Fast-path pattern: no exceptional child, no incompressible
    /// children, and every filled slope and pulled child longitude is an
    /// integer — such data always classifies as boundary compressible.
    /// Used as a debug cross-check of the window search.
    fn is_integral_compressible_pattern(&self) -> bool {
        matches!(self.slot, SlotContribution::ExceptionalData(_))
            && self.smooth_bi.is_empty()
            && self
                .assigned
                .iter()
                .chain(self.smooth_bc.iter().map(|(_, s)| s))
                .all(ExtendedSlope::is_integer)
    }
}

/// The (lo, hi) endpoints a pulled incompressible child contributes.
pub(crate) fn bi_interval_endpoints(interval: &SlopeInterval) -> (ExtendedSlope, ExtendedSlope) {
    match interval {
        SlopeInterval::Arc { lo, hi, .. } => (lo.clone(), hi.clone()),
        SlopeInterval::LongitudeComplement(l) => (l.clone(), l.clone()),
        _ => unreachable!("callers pass arcs or longitude complements"),
    }
}

fn collect_subtree_slots(
    tree: &SatelliteTree,
    children: &BTreeMap<String, Vec<usize>>,
    id: &str,
    out: &mut Vec<(String, usize)>,
) -> Result<(), GraphError> {
    for i in tree.free_slots(id)? {
        out.push((id.to_string(), i));
    }
    for &k in &children[id] {
        collect_subtree_slots(tree, children, &tree.edges[k].from, out)?;
    }
    Ok(())
}

/// One-shot form of [`Session::vertex_state`].
pub fn vertex_interval(
    t: &SatelliteTree,
    id: &str,
    a: &SlopeAssignment,
) -> Result<VertexIntervalState, GraphError> {
    Session::new(t)?.vertex_state(id, a)
}

/// One-shot form of [`Session::is_lspace_filling`].
pub fn is_lspace_filling(
    t: &SatelliteTree,
    a: &SlopeAssignment,
) -> Result<LspaceVerdict, GraphError> {
    Session::new(t)?.is_lspace_filling(a)
}
