//! Exact L-space region of a single torus-link satellite vertex.
//!
//! The region of the satellite of a knot `K` by the `(np, nq)` torus
//! link splits into structurally different regimes depending on how the
//! companion's surgery threshold `N = 2·genus(K) − 1` compares with
//! `q/p`:
//!
//! * **lattice** (`N > q/p`, `p > 1`): only the integer Seifert-data
//!   vectors with zero sum are L-space fillings;
//! * **lattice ray** (`N > q/p`, `p = 1`): additionally one coordinate
//!   may move along a short closed segment;
//! * **two-sided** (`N ≤ q/p`, or an unknot companion with
//!   `p, q ≥ 2`): the region is a union of a negative-side box
//!   difference, a positive-side box, and the single-∞ stratum, all up
//!   to the reparameterization lattice Λ;
//! * **longitude scan** (unknot companion, `p = 1`): membership is
//!   decided pointwise by the periodic window search — the boundary of
//!   this region is not piecewise-linear, so only the pointwise test is
//!   exact;
//! * **unlink** (`q = 0`, unknot companion): a filling is an L-space
//!   exactly when no coordinate is at the fiber slope.
//!
//! All predicates work in Seifert-data coordinates; [`torus_region_label`]
//! accepts conventional surgery coefficients and converts through `ψ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use satellite_graph::{CompanionKnot, SatelliteTree};
use seifert_engine::{
    classify_special_slope, fiber_exterior_interval, FiberExteriorInput, DEFAULT_PERIOD_CAP,
};
use slope_core::ExtendedSlope;

use crate::psi::psi_inv;
use crate::util::{all_finite, residue_sum_neg, sum_ceil, sum_floor, sum_slopes};
use crate::CatalogError;

/// A single satellite vertex: the `(np, nq)` torus-link pattern in a
/// solid torus, glued to a companion of the given genus (0 = unknot,
/// otherwise a positive L-space knot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSatelliteSpec {
    genus: u64,
    p: BigInt,
    q: BigInt,
    n: usize,
}

impl TorusSatelliteSpec {
    pub fn new(
        genus: u64,
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        n: usize,
    ) -> Result<Self, CatalogError> {
        let p = p.into();
        let q = q.into();
        if !p.is_positive() {
            return Err(CatalogError::InvalidInput(format!(
                "torus pattern needs p > 0, got p = {p}"
            )));
        }
        if n == 0 {
            return Err(CatalogError::InvalidInput(
                "torus pattern needs at least one link component".into(),
            ));
        }
        if p.gcd(&q) != BigInt::one() {
            return Err(CatalogError::InvalidInput(format!(
                "torus pattern needs gcd(p, q) = 1, got ({p}, {q})"
            )));
        }
        Ok(Self { genus, p, q, n })
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pq(&self) -> BigInt {
        &self.p * &self.q
    }

    /// Left endpoint `N = 2·genus − 1` of the companion's own L-space
    /// surgery interval (−1 for the unknot).
    pub fn surgery_threshold(&self) -> BigInt {
        BigInt::from(2) * BigInt::from(self.genus) - BigInt::one()
    }

    /// Left endpoint `N_pq = pq − p − q + 2·genus·p` of the satellite's
    /// region in surgery coordinates (two-sided regime, `n = 1`).
    pub fn n_pq(&self) -> BigInt {
        self.pq() - &self.p - &self.q + BigInt::from(2) * BigInt::from(self.genus) * &self.p
    }

    /// Width `δ = pq − N_pq = p + q − 2·genus·p` of the correction layer
    /// in surgery coordinates.
    pub fn delta(&self) -> BigInt {
        &self.p + &self.q - BigInt::from(2) * BigInt::from(self.genus) * &self.p
    }

    pub fn companion(&self) -> CompanionKnot {
        if self.genus == 0 {
            CompanionKnot::Unknot
        } else {
            CompanionKnot::PositiveLSpaceKnot { genus: self.genus }
        }
    }

    /// The equivalent one-vertex satellite tree, for oracle runs.
    pub fn tree(&self) -> SatelliteTree {
        SatelliteTree::single_vertex(self.p.clone(), self.q.clone(), self.n, self.companion())
    }

    /// True when the two-sided closed form applies: a nontrivial
    /// companion with `N ≤ q/p`, or an unknot companion with
    /// `p, q ≥ 2`.
    pub fn is_two_sided(&self) -> bool {
        let two = BigInt::from(2);
        if self.genus >= 1 {
            self.surgery_threshold() * &self.p <= self.q
        } else {
            self.p >= two && self.q >= two
        }
    }
}

/// `N_pq` as a free function, for call sites holding only the spec.
pub fn n_pq(spec: &TorusSatelliteSpec) -> BigInt {
    spec.n_pq()
}

/// Full classification of one slope vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionLabel {
    /// The filling is an L-space.
    pub lspace: bool,
    /// Some coordinate is at the fiber slope (surgery coefficient `pq`):
    /// the filling is a nontrivial connected sum.
    pub in_r: bool,
    /// At least two coordinates are at the fiber slope: the sum has
    /// `S¹×S²` summands and is never an L-space.
    pub in_z: bool,
    /// The filling has positive first Betti number (the rational
    /// longitude hypersurface, plus all of the `in_z` locus).
    pub in_b: bool,
    /// Raw membership in the negative-side fundamental-domain piece of
    /// the two-sided regime (false in every other regime). Unlike all
    /// other flags this is **not** invariant under the lattice Λ.
    pub in_l_minus: bool,
    /// Raw membership in the positive-side fundamental-domain piece
    /// (two-sided regime only); not Λ-invariant.
    pub in_l_plus: bool,
    /// Membership in the Λ-orbit of the fundamental region; by the
    /// region structure theorems this coincides with `lspace`, and the
    /// equality is exercised by the cross-check suites.
    pub in_lambda_orbit_of_lstar: bool,
    /// Monotone-stratum membership; `None` when the label was produced
    /// by a closed form (which does not compute vertex intervals).
    pub monotone: Option<bool>,
}

impl RegionLabel {
    /// `"R|Z|B|LSTAR|MONO"`-style token string (empty when no flag set).
    pub fn flags_string(&self) -> String {
        let mut tokens = Vec::new();
        if self.in_r {
            tokens.push("R");
        }
        if self.in_z {
            tokens.push("Z");
        }
        if self.in_b {
            tokens.push("B");
        }
        if self.in_lambda_orbit_of_lstar {
            tokens.push("LSTAR");
        }
        if self.monotone == Some(true) {
            tokens.push("MONO");
        }
        tokens.join("|")
    }
}

/// Positive-side Λ-orbit membership of the two-sided regime:
/// `Σ⌊y_i⌋ ≥ 0` over finite vectors.
pub fn in_lambda_orbit_plus(y: &[ExtendedSlope]) -> bool {
    match sum_floor(y) {
        Some(s) => !s.is_negative(),
        None => false,
    }
}

/// Negative-side Λ-orbit membership of the two-sided regime:
/// `Σ⌈y_i⌉ ≤ −1`, or `Σ⌈y_i⌉ = 0` with some fractional part
/// `frac(−y_i) ≥ 1/δ`. Empty when the correction width `δ` vanishes.
pub fn in_lambda_orbit_minus(spec: &TorusSatelliteSpec, y: &[ExtendedSlope]) -> bool {
    let delta = spec.delta();
    if !delta.is_positive() {
        return false;
    }
    let Some(sc) = sum_ceil(y) else {
        return false;
    };
    if sc <= BigInt::from(-1) {
        return true;
    }
    sc.is_zero() && residue_sum_neg(y, &delta).is_positive()
}

/// Raw negative-side fundamental piece: every surgery coefficient in
/// `[−∞, pq⟩` but not all of them in `[−∞, N_pq⟩`. In Seifert-data
/// coordinates: all `y_i ≤ 0`, not all in `⟨−1/δ, 0]`.
fn in_raw_l_minus(spec: &TorusSatelliteSpec, y: &[ExtendedSlope]) -> bool {
    if !all_finite(y) || y.iter().any(|s| s.numer().is_positive()) {
        return false;
    }
    let delta = spec.delta();
    if !delta.is_positive() {
        return false;
    }
    // y ∈ ⟨−1/δ, 0] ⟺ δ·y > −1 (with y ≤ 0 already known).
    let inner = |s: &ExtendedSlope| {
        let dy = s
            .checked_mul(&ExtendedSlope::from_integer(delta.clone()))
            .expect("finite product");
        dy.cmp_linear(&ExtendedSlope::from_integer(-1)) == std::cmp::Ordering::Greater
    };
    !y.iter().all(inner)
}

/// Raw positive-side fundamental piece: every surgery coefficient in
/// `⟨pq, +∞]`, i.e. all `y_i ≥ 0` finite.
fn in_raw_l_plus(y: &[ExtendedSlope]) -> bool {
    all_finite(y) && y.iter().all(|s| !s.numer().is_negative())
}

/// Which closed form governs a spec.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Regime {
    /// Nontrivial companion, `N > q/p`, `p > 1`.
    Lattice,
    /// Nontrivial companion, `N > q/p`, `p = 1`.
    LatticeRay,
    /// `N ≤ q/p` (nontrivial) or unknot with `p, q ≥ 2`.
    TwoSided,
    /// Unknot companion, `p = 1` after the `(p, 1) ↦ (1, p)` exchange;
    /// the stored value is the effective `q`.
    LongitudeScan(BigInt),
    /// Unknot companion, `q = 0`.
    Unlink,
    /// Unknot companion, `q < 0`: mirror of the `(p, −q)` pattern.
    Mirror,
}

fn regime(spec: &TorusSatelliteSpec) -> Regime {
    let one = BigInt::one();
    if spec.genus >= 1 {
        if spec.surgery_threshold() * &spec.p > spec.q {
            if spec.p > one {
                Regime::Lattice
            } else {
                Regime::LatticeRay
            }
        } else {
            Regime::TwoSided
        }
    } else if spec.q.is_negative() {
        Regime::Mirror
    } else if spec.q.is_zero() {
        Regime::Unlink
    } else if spec.p == one {
        Regime::LongitudeScan(spec.q.clone())
    } else if spec.q == one {
        // The (np, n) and (n, np) torus links coincide, and the basis
        // change ψ depends only on the product pq, so the p = 1 form
        // applies verbatim with the roles of p and q exchanged.
        Regime::LongitudeScan(spec.p.clone())
    } else {
        Regime::TwoSided
    }
}

/// Two-sided regime membership over finite vectors.
fn two_sided_lspace_finite(spec: &TorusSatelliteSpec, y: &[ExtendedSlope]) -> bool {
    let delta = spec.delta();
    let sf = sum_floor(y).expect("caller ensures finite coordinates");
    if delta.is_zero() {
        return !sf.is_negative();
    }
    // Lower extremum y₋ = −Σ⌊y_i⌋; upper extremum y₊ = −Σ⌈y_i⌉, pushed
    // down one correction step 1/δ when the residue sum vanishes. The
    // filling fails to be an L-space exactly when y₊ < 0 < y₋.
    let y_minus_positive = sf.is_negative();
    let sc = sum_ceil(y).expect("finite");
    let y_plus_negative = if residue_sum_neg(y, &delta).is_zero() {
        // y₊ = −Σ⌈y⌉ − 1/δ < 0 ⟺ Σ⌈y⌉ ≥ 0.
        !sc.is_negative()
    } else {
        sc.is_positive()
    };
    !(y_minus_positive && y_plus_negative)
}

/// Pointwise membership for the unknot `p = 1` regime: the companion
/// filling slope 0 must lie in the fiber-exterior interval of the data
/// `(1/q, y₁, …, yₙ)`.
fn longitude_scan_lspace(
    q: &BigInt,
    y: &[ExtendedSlope],
    period_cap: u64,
) -> Result<bool, CatalogError> {
    let mut slopes = Vec::with_capacity(y.len() + 1);
    slopes.push(
        ExtendedSlope::new(BigInt::one(), q.clone())
            .expect("q ≥ 1 in the longitude-scan regime"),
    );
    slopes.extend(y.iter().cloned());
    let input = FiberExteriorInput::from_slopes(slopes);
    let result = fiber_exterior_interval(&input, period_cap)?;
    Ok(result.interval.contains(&ExtendedSlope::zero()))
}

/// Exact region label in Seifert-data coordinates.
pub fn torus_region_label_sf(
    spec: &TorusSatelliteSpec,
    y: &[ExtendedSlope],
) -> Result<RegionLabel, CatalogError> {
    torus_label_sf_capped(spec, y, DEFAULT_PERIOD_CAP)
}

/// As [`torus_region_label_sf`] with an explicit window-search period
/// cap (only the longitude-scan regime runs a window search).
pub fn torus_label_sf_capped(
    spec: &TorusSatelliteSpec,
    y: &[ExtendedSlope],
    period_cap: u64,
) -> Result<RegionLabel, CatalogError> {
    if y.len() != spec.n {
        return Err(CatalogError::InvalidInput(format!(
            "expected {} slope coordinates, got {}",
            spec.n,
            y.len()
        )));
    }
    let special = classify_special_slope(y);
    let pq = spec.pq();
    // Positive first Betti number: at least two fiber-slope fillings, or
    // the rational-longitude hypersurface Σy = −1/(pq). For the unlink
    // pattern (pq = 0) the longitude is the fiber slope itself.
    let in_b = if pq.is_zero() {
        special.in_r
    } else {
        special.in_z
            || sum_slopes(y).is_some_and(|s| {
                s == ExtendedSlope::new(BigInt::from(-1), pq.clone()).expect("pq nonzero")
            })
    };

    let built = |lspace: bool,
                 in_l_minus: bool,
                 in_l_plus: bool,
                 in_orbit: bool| RegionLabel {
        lspace,
        in_r: special.in_r,
        in_z: special.in_z,
        in_b,
        in_l_minus,
        in_l_plus,
        in_lambda_orbit_of_lstar: in_orbit,
        monotone: None,
    };

    match regime(spec) {
        Regime::Mirror => {
            let mirrored = TorusSatelliteSpec::new(0u64, spec.p.clone(), -spec.q.clone(), spec.n)?;
            let ym: Vec<ExtendedSlope> = y.iter().map(ExtendedSlope::neg).collect();
            let inner = torus_label_sf_capped(&mirrored, &ym, period_cap)?;
            // Orientation reversal exchanges the two one-sided pieces.
            Ok(built(
                inner.lspace,
                inner.in_l_plus,
                inner.in_l_minus,
                inner.in_lambda_orbit_of_lstar,
            ))
        }
        Regime::Unlink => {
            // Each coordinate fills one unlink component; a fiber-slope
            // coordinate produces an S¹×S² summand.
            Ok(built(!special.in_r, false, false, !special.in_r))
        }
        Regime::Lattice => {
            let lspace = !special.in_r
                && y.iter().all(ExtendedSlope::is_integer)
                && sum_slopes(y).is_some_and(|s| s.is_zero());
            Ok(built(lspace, false, false, lspace))
        }
        Regime::LatticeRay => {
            let lspace = lattice_ray_lspace(spec, y);
            Ok(built(lspace, false, false, lspace))
        }
        Regime::LongitudeScan(q_eff) => {
            let lspace = if special.in_z {
                false
            } else if special.in_r {
                true
            } else {
                longitude_scan_lspace(&q_eff, y, period_cap)?
            };
            Ok(built(lspace, false, false, lspace))
        }
        Regime::TwoSided => {
            let lspace = if special.in_z {
                false
            } else if special.in_r {
                true
            } else {
                two_sided_lspace_finite(spec, y)
            };
            let orbit = (special.in_r && !special.in_z)
                || in_lambda_orbit_minus(spec, y)
                || in_lambda_orbit_plus(y);
            Ok(built(
                lspace,
                in_raw_l_minus(spec, y),
                in_raw_l_plus(y),
                orbit,
            ))
        }
    }
}

/// `N > q`, `p = 1`: all finite, at most one non-integral coordinate,
/// and `Σy ∈ [0, 1/(N−q)]`.
fn lattice_ray_lspace(spec: &TorusSatelliteSpec, y: &[ExtendedSlope]) -> bool {
    if !all_finite(y) {
        return false;
    }
    if y.iter().filter(|s| !s.is_integer()).count() > 1 {
        return false;
    }
    let s = sum_slopes(y).expect("finite");
    if s.numer().is_negative() {
        return false;
    }
    let gap = spec.surgery_threshold() - &spec.q;
    debug_assert!(gap.is_positive());
    let upper = ExtendedSlope::new(BigInt::one(), gap).expect("positive gap");
    s.cmp_linear(&upper) != std::cmp::Ordering::Greater
}

/// Exact region label in conventional surgery coordinates.
pub fn torus_region_label(
    spec: &TorusSatelliteSpec,
    alpha: &[ExtendedSlope],
) -> Result<RegionLabel, CatalogError> {
    torus_label_s3_capped(spec, alpha, DEFAULT_PERIOD_CAP)
}

/// As [`torus_region_label`] with an explicit period cap.
pub fn torus_label_s3_capped(
    spec: &TorusSatelliteSpec,
    alpha: &[ExtendedSlope],
    period_cap: u64,
) -> Result<RegionLabel, CatalogError> {
    let pq = spec.pq();
    let y: Vec<ExtendedSlope> = alpha.iter().map(|a| psi_inv(a, &pq)).collect();
    torus_label_sf_capped(spec, &y, period_cap)
}
