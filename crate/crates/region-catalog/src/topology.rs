//! Homotopy-type classification of the closure of the L-space region
//! inside the real slope torus.
//!
//! With `N = 2·genus − 1` the classification depends on how `N` compares
//! with `q/p` and `q/p + 1`, on whether `p = 1`, and on the number of
//! link components `n`:
//!
//! * `i.a` — `N > q/p` with `p > 1`, or `N > q/p + 1` with `p = 1`: the
//!   region closure deformation retracts onto the reparameterization
//!   lattice Λ (a discrete set);
//! * `i.b` — `N = q/p + 1` and `n > 2` (forces `p = 1`): the region has
//!   first homology of rank `C(n,2) − 1`, with fundamental group the
//!   kernel of the map from the free group on pair generators `x_ij`
//!   (`1 ≤ i < j ≤ n`) to the slope lattice sending `x_ij ↦ ε_i − ε_j`
//!   (`ε_i` the i-th standard basis vector);
//! * `i.c` — `N = q/p + 1` and `n ∈ {1, 2}`: contractible of dimension 1;
//! * `ii.a` — `N = q/p` (forces `p = 1`): contractible of dimension `n`;
//! * `ii.b` — `N < q/p`, or an unknot companion: the region closure
//!   deformation retracts onto an `(n−1)`-torus parallel to the
//!   rational-longitude locus.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::torus::TorusSatelliteSpec;
use crate::CatalogError;

/// What the region closure deformation retracts onto.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RetractKind {
    /// The discrete reparameterization lattice Λ (case `i.a`).
    Lattice,
    /// An `(n−1)`-torus parallel to the rational-longitude locus
    /// (case `ii.b`).
    Torus { dim: usize },
    /// A contractible 1-complex (case `i.c`).
    ContractibleDim1,
    /// A contractible `n`-complex (case `ii.a`).
    ContractibleDimN { dim: usize },
}

/// Classification result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyReport {
    /// One of `"i.a"`, `"i.b"`, `"i.c"`, `"ii.a"`, `"ii.b"`.
    pub case_label: String,
    /// Rank of the first homology of the region closure, when the
    /// retract determines it (`None` for the discrete-lattice case).
    pub h1_rank: Option<u64>,
    pub retract: RetractKind,
    /// For case `i.b`: a description of the generator basis behind the
    /// homology computation.
    pub epsilon_generators: Option<String>,
}

/// Classifies the homotopy type of the region closure. Requires `q > 0`.
pub fn topology_classify(spec: &TorusSatelliteSpec) -> Result<TopologyReport, CatalogError> {
    if !spec.q().is_positive() {
        return Err(CatalogError::HypothesisNotMet(format!(
            "the topological classification is stated for q > 0, got q = {}",
            spec.q()
        )));
    }
    let n = spec.n();
    let threshold = spec.surgery_threshold();
    let np = &threshold * spec.p();

    // Unknot companions always land in the torus-retract case.
    if spec.genus() == 0 || np < *spec.q() {
        return Ok(TopologyReport {
            case_label: "ii.b".into(),
            h1_rank: Some(n as u64 - 1),
            retract: RetractKind::Torus { dim: n - 1 },
            epsilon_generators: None,
        });
    }
    if np == *spec.q() {
        return Ok(TopologyReport {
            case_label: "ii.a".into(),
            h1_rank: Some(0),
            retract: RetractKind::ContractibleDimN { dim: n },
            epsilon_generators: None,
        });
    }
    // Here N > q/p. A one-step margin matters only for p = 1.
    let one_above = spec.q() + spec.p();
    if np == one_above {
        if n > 2 {
            let rank = (n as u64) * (n as u64 - 1) / 2 - 1;
            return Ok(TopologyReport {
                case_label: "i.b".into(),
                h1_rank: Some(rank),
                retract: RetractKind::Lattice,
                epsilon_generators: Some(format!(
                    "free generators x_ij for 1 ≤ i < j ≤ {n}, mapped to ε_i − ε_j in the \
                     slope lattice ℤ^{n} (ε_i the i-th standard basis vector); the fundamental \
                     group is the kernel of that map and H₁ has rank C({n},2) − 1"
                )),
            });
        }
        return Ok(TopologyReport {
            case_label: "i.c".into(),
            h1_rank: Some(0),
            retract: RetractKind::ContractibleDim1,
            epsilon_generators: None,
        });
    }
    debug_assert!(np > one_above || spec.p() > &BigInt::from(1));
    Ok(TopologyReport {
        case_label: "i.a".into(),
        h1_rank: None,
        retract: RetractKind::Lattice,
        epsilon_generators: None,
    })
}
