//! Slope regions whose fillings are guaranteed left-orderable (`lo_…`)
//! or guaranteed to admit a co-oriented taut foliation (`f_…`), for
//! satellites with winding number `p > 1` around a nontrivial companion.
//!
//! Two regimes admit a description:
//!
//! * **exact** — when `2·genus − 1 > (q+1)/p`, the left-orderable set
//!   equals the non-L-space set, and the foliation set equals the
//!   non-L-space set minus the reducible locus ℛ;
//! * **lower bound** — when `2·genus − 1 < q/p`, both sets contain the
//!   corresponding difference minus the Λ-orbit of a thin rectangle
//!   margin near the reducing slope (membership outside that margin is
//!   guaranteed; inside it nothing is asserted).
//!
//! The remaining window `2·genus − 1 ∈ [q/p, (q+1)/p]` has no known
//! description and is reported as an open boundary case.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use slope_core::ExtendedSlope;

use crate::psi::psi_inv;
use crate::torus::{torus_region_label_sf, TorusSatelliteSpec};
use crate::util::{all_finite, sum_ceil};
use crate::CatalogError;

/// Which flavor of guarantee the predicates carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoCtfCase {
    /// `2·genus − 1 > (q+1)/p`: the predicates describe the regions
    /// exactly.
    Exact,
    /// `2·genus − 1 < q/p`: the predicates are sufficient conditions
    /// (inner bounds); they are silent inside the excluded margin.
    LowerBound,
}

/// Membership predicates for the guaranteed left-orderable region and
/// the guaranteed taut-foliation region.
#[derive(Clone, Debug)]
pub struct LoCtfRegions {
    spec: TorusSatelliteSpec,
    case: LoCtfCase,
}

/// Builds the predicates for a satellite with `p > 1` and a nontrivial
/// companion (`genus ≥ 1`).
pub fn lo_ctf_regions(spec: &TorusSatelliteSpec) -> Result<LoCtfRegions, CatalogError> {
    if spec.genus() == 0 {
        return Err(CatalogError::HypothesisNotMet(
            "left-orderability and foliation regions require a nontrivial companion \
             (genus ≥ 1)"
                .into(),
        ));
    }
    if *spec.p() <= BigInt::one() {
        return Err(CatalogError::HypothesisNotMet(format!(
            "left-orderability and foliation regions require winding number p > 1, got p = {}",
            spec.p()
        )));
    }
    let np = spec.surgery_threshold() * spec.p();
    let case = if np > spec.q() + BigInt::one() {
        LoCtfCase::Exact
    } else if np < *spec.q() {
        LoCtfCase::LowerBound
    } else {
        return Err(CatalogError::OpenBoundaryCase(format!(
            "2·genus − 1 = {} lies in the boundary window [q/p, (q+1)/p] = [{}/{p}, {}/{p}], \
             where no description of the left-orderable or foliation regions is available",
            spec.surgery_threshold(),
            spec.q(),
            spec.q() + BigInt::one(),
            p = spec.p(),
        )));
    };
    Ok(LoCtfRegions {
        spec: spec.clone(),
        case,
    })
}

impl LoCtfRegions {
    pub fn case(&self) -> LoCtfCase {
        self.case
    }

    pub fn spec(&self) -> &TorusSatelliteSpec {
        &self.spec
    }

    /// Guaranteed left-orderable fillings, fiber-basis coordinates.
    /// Exact in the [`LoCtfCase::Exact`] regime; a sufficient condition
    /// in the [`LoCtfCase::LowerBound`] regime.
    pub fn lo_lower_bound_sf(&self, y: &[ExtendedSlope]) -> Result<bool, CatalogError> {
        let label = torus_region_label_sf(&self.spec, y)?;
        Ok(!label.lspace && !self.in_excluded_margin_sf(y))
    }

    /// Guaranteed left-orderable fillings, surgery-basis coordinates.
    pub fn lo_lower_bound(&self, alpha: &[ExtendedSlope]) -> Result<bool, CatalogError> {
        self.lo_lower_bound_sf(&self.to_fiber_basis(alpha))
    }

    /// Fillings guaranteed to admit a co-oriented taut foliation,
    /// fiber-basis coordinates: the left-orderable guarantee minus the
    /// reducible locus ℛ.
    pub fn f_region_sf(&self, y: &[ExtendedSlope]) -> Result<bool, CatalogError> {
        let label = torus_region_label_sf(&self.spec, y)?;
        Ok(!label.lspace && !label.in_r && !self.in_excluded_margin_sf(y))
    }

    /// Fillings guaranteed to admit a co-oriented taut foliation,
    /// surgery-basis coordinates.
    pub fn f_region(&self, alpha: &[ExtendedSlope]) -> Result<bool, CatalogError> {
        self.f_region_sf(&self.to_fiber_basis(alpha))
    }

    /// The Λ-orbit of the rectangle margin the lower-bound regime stays
    /// silent on: all coordinates finite with `Σ⌈y⌉ = 0`, every
    /// fractional part `frac(−yᵢ) < 1/δ`, and at least one
    /// `frac(−yᵢ) ≥ 1/(δ+p)`, where `δ = q − p·(2·genus − 1)`.
    /// Always empty in the exact regime.
    pub fn in_excluded_margin_sf(&self, y: &[ExtendedSlope]) -> bool {
        if self.case != LoCtfCase::LowerBound {
            return false;
        }
        if !all_finite(y) {
            return false;
        }
        match sum_ceil(y) {
            Some(s) if s.is_zero() => {}
            _ => return false,
        }
        let delta = self.spec.delta();
        debug_assert!(delta.is_positive());
        let delta_p = &delta + self.spec.p();
        let mut any_in_band = false;
        for yi in y {
            let f = yi.neg().frac().expect("finite coordinate");
            // frac(−yᵢ) < 1/δ ⟺ numer·δ < denom (frac ≥ 0, denom > 0).
            if f.numer() * &delta >= *f.denom() {
                return false;
            }
            // frac(−yᵢ) ≥ 1/(δ+p) ⟺ numer·(δ+p) ≥ denom.
            if f.numer() * &delta_p >= *f.denom() {
                any_in_band = true;
            }
        }
        any_in_band
    }

    /// Surgery-basis margin test.
    pub fn in_excluded_margin(&self, alpha: &[ExtendedSlope]) -> bool {
        self.in_excluded_margin_sf(&self.to_fiber_basis(alpha))
    }

    fn to_fiber_basis(&self, alpha: &[ExtendedSlope]) -> Vec<ExtendedSlope> {
        let pq = self.spec.pq();
        alpha.iter().map(|a| psi_inv(a, &pq)).collect()
    }
}
