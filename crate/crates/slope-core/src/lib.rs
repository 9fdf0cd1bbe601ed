//! Exact arithmetic on the projective circle of Dehn-surgery slopes.
//!
//! Slopes are reduced fractions over arbitrary-precision integers, with a
//! single point at infinity; intervals are finite unions of circle arcs
//! closed under complement and unimodular linear fractional maps. All set
//! predicates are decided exactly — no floating point anywhere.

mod interval;
mod matrix;
mod residue;
mod slope;

pub use interval::{ccw_strictly_between, covers_circle, intersects, is_subset, SlopeInterval};
pub use matrix::{lft_apply, IntMatrix2};
pub use residue::{bracket_mod, split_floor, FracResidue};
pub use slope::ExtendedSlope;

use thiserror::Error;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum SlopeError {
    /// The pair 0/0 does not name a point of the projective circle.
    #[error("indeterminate slope 0/0")]
    IndeterminateSlope,
    /// Matrix determinant is not ±1.
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    /// Text did not parse as a slope.
    #[error("cannot parse slope from {0:?}")]
    ParseSlope(String),
    /// Arc endpoints coincide; use a degenerate interval kind instead.
    #[error("arc endpoints coincide at {0}")]
    DegenerateArc(String),
}
