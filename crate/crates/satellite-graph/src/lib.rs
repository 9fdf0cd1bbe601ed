//! Rooted splice trees of Seifert pieces (satellites by torus links,
//! iterated torus links, and algebraic links) and the recursive oracle
//! deciding which Dehn fillings of such a satellite are L-spaces.
//!
//! A tree vertex is the exterior of an `(np, nq)` torus link in a solid
//! torus; edges splice a child's outer boundary either onto one of the
//! parent's link components (a smooth splice) or onto the parent's
//! multiplicity-`p` exceptional fiber (an exceptional splice). Filling
//! every remaining link component with a rational slope and gluing a
//! companion-knot exterior to the root boundary produces a closed
//! graph manifold; [`is_lspace_filling`] decides whether it is an
//! L-space by recursively classifying each vertex's boundary interval
//! with the fiber-exterior engine and applying the interval gluing
//! criterion at the root.

mod assign;
mod bounds;
mod splice;
mod state;
mod tree;

pub use assign::SlopeAssignment;
pub use bounds::{reduced_endpoint_bounds_check, reduced_endpoints, ReducedEndpoints};
pub use splice::{
    algebraicity_check, asymptotes, edge_delta, smooth_splice_matrix, splice_matrix,
    AlgebraicityReport,
};
pub use state::{
    is_lspace_filling, vertex_interval, LspaceVerdict, Session, VertexExtrema,
    VertexIntervalState,
};
pub use tree::{
    validate_tree, CompanionKnot, Diagnostic, SatelliteTree, TreeEdge, VertexData,
};

use seifert_engine::EngineError;
use slope_core::SlopeError;

/// Errors from tree handling and the recursive oracle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// The tree fails structural validation; the message lists diagnostics.
    #[error("invalid satellite tree: {0}")]
    InvalidTree(String),
    /// The tree or slope file could not be parsed.
    #[error("parse error: {0}")]
    ParseInput(String),
    /// The slope assignment does not match the tree's unfilled slots.
    #[error("slope assignment mismatch: {0}")]
    AssignmentMismatch(String),
    /// A vertex or edge reference does not exist in the tree.
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    /// The companion/root combination falls outside the proven gluing
    /// criteria (e.g. a companion interval with at most one L-space
    /// filling glued to a boundary-incompressible root).
    #[error("gluing hypotheses unmet: {0}")]
    GluingHypothesesUnmet(String),
    /// Propagated from the fiber-interval engine.
    #[error(transparent)]
    Engine(#[from] EngineError),
    /// Propagated from slope/interval arithmetic.
    #[error(transparent)]
    Slope(#[from] SlopeError),
}
