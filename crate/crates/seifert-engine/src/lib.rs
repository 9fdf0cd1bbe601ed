//! Classification of L-space Dehn filling slopes on one boundary component
//! of a Seifert fibered piece, by exact extremization of the floor/ceiling
//! objectives over a finite period window, together with the bookkeeping
//! types for distinguished slope sets and lattice canonicalization.

mod fiber;
mod special;
mod vertex;

pub use fiber::{
    fiber_exterior_interval, rational_longitude, y_minus_of_k, y_plus_of_k, FiberExteriorInput,
    FiberIntervalResult,
};
pub use special::{classify_special_slope, lambda_canonicalize, SpecialSlopeFlags};
pub use vertex::{pstar_qstar, torus_data_floor_bound_holds, SeifertVertex};

use thiserror::Error;

/// Default bound on the extremization window length.
pub const DEFAULT_PERIOD_CAP: u64 = 1_000_000;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum EngineError {
    /// The denominator lcm exceeds the configured window cap; answering
    /// would require an unreasonably long exact scan.
    #[error("extremization period {period} exceeds cap {cap}")]
    PeriodOverflow { period: String, cap: u64 },
    /// The computed attainment/endpoint pattern falls outside the proved
    /// structure cases; refusing to guess.
    #[error("unclassified structure case: {0}")]
    UnclassifiedStructure(String),
    /// Malformed input data.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
