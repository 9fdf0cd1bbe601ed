//! Closed-form L-space region machinery for torus-link satellites.
//!
//! This crate complements the recursive oracle in `satellite-graph` with
//! direct set descriptions:
//!
//! * [`psi`]/[`psi_inv`] — the basis change between Seifert-data slopes
//!   and conventional surgery coefficients;
//! * [`torus_region_label`] — the exact L-space region of a satellite of
//!   a single vertex (torus-link pattern), with the special-set flags;
//! * [`inner_min_regions`] — per-vertex product inner approximations of
//!   the region of a satellite by an iterated torus link or algebraic
//!   link, with the `m⁺`/`m⁻` thresholds and exceptional-layer
//!   exclusions;
//! * [`monotone_at`]/[`monotone_stratum_member`] — the monotone-stratum
//!   predicate (every splice map carries the interval interior over ∞);
//! * [`topology_classify`] — the homotopy type of the region;
//! * [`lo_ctf_regions`] — left-orderability and taut-foliation region
//!   bounds derived from the non-L-space set;
//! * [`raster_region`] — deterministic 2-D rasters (CSV/SVG/PGM) of any
//!   of the above over exact rational grids.
//!
//! Everything is exact rational arithmetic; no floating point is used
//! anywhere, including in the raster emitters.

mod inner;
mod loctf;
mod monotone;
mod psi;
mod raster;
mod topology;
mod torus;
mod util;

pub use inner::{inner_min_regions, InnerRegions, InnerVariant, VertexInnerRegion};
pub use loctf::{lo_ctf_regions, LoCtfCase, LoCtfRegions};
pub use monotone::{
    monotone_at, monotone_at_session, monotone_stratum_member, monotone_stratum_member_session,
};
pub use psi::{psi, psi_inv, psi_matrix};
pub use raster::{
    oracle_point_label, raster_region, CellOutcome, PointLabel, RasterBasis, RasterCell,
    RasterFormat, RasterGrid, RasterMode, RasterRequest,
};
pub use topology::{topology_classify, RetractKind, TopologyReport};
pub use torus::{
    in_lambda_orbit_minus, in_lambda_orbit_plus, n_pq, torus_label_s3_capped,
    torus_label_sf_capped, torus_region_label, torus_region_label_sf, RegionLabel,
    TorusSatelliteSpec,
};

use satellite_graph::GraphError;
use seifert_engine::EngineError;

/// Errors from region construction and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    /// Malformed satellite data (non-coprime weights, bad arity, …).
    #[error("invalid satellite data: {0}")]
    InvalidInput(String),
    /// A stated hypothesis of the region description fails for this
    /// tree, so the closed form does not apply (the oracle still does).
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    /// The requested region is not described in closed form for these
    /// parameters; the boundary case is explicitly left unresolved.
    #[error("no closed form available: {0}")]
    OpenBoundaryCase(String),
    /// Propagated engine failure (e.g. period cap exceeded).
    #[error(transparent)]
    Engine(#[from] EngineError),
    /// Propagated tree/oracle failure.
    #[error(transparent)]
    Graph(#[from] GraphError),
}
