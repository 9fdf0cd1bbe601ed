//! Shared exact-arithmetic helpers over tuples of slopes.

use num_bigint::BigInt;
use num_traits::Zero;
use slope_core::ExtendedSlope;

pub(crate) fn all_finite(y: &[ExtendedSlope]) -> bool {
    y.iter().all(|s| !s.is_infinite())
}

/// Σy over finite tuples, `None` if any coordinate is ∞.
pub(crate) fn sum_slopes(y: &[ExtendedSlope]) -> Option<ExtendedSlope> {
    let mut acc = ExtendedSlope::zero();
    for s in y {
        acc = acc.checked_add(s)?;
    }
    Some(acc)
}

/// Σ⌊y_i⌋, `None` if any coordinate is ∞.
pub(crate) fn sum_floor(y: &[ExtendedSlope]) -> Option<BigInt> {
    let mut acc = BigInt::zero();
    for s in y {
        acc += s.floor()?;
    }
    Some(acc)
}

/// Σ⌈y_i⌉, `None` if any coordinate is ∞.
pub(crate) fn sum_ceil(y: &[ExtendedSlope]) -> Option<BigInt> {
    let mut acc = BigInt::zero();
    for s in y {
        acc += s.ceil()?;
    }
    Some(acc)
}

/// `Σ_i ⌊frac(−y_i)·scale⌋` over a finite tuple: the scaled-residue sum
/// deciding whether a boundary-layer point clears the correction step.
/// Every term is nonnegative for `scale ≥ 0`, so the sum vanishes iff
/// every `frac(−y_i) < 1/scale`.
pub(crate) fn residue_sum_neg(y: &[ExtendedSlope], scale: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for s in y {
        let f = s.neg().frac().expect("caller ensures finite coordinates");
        let scaled = f
            .checked_mul(&ExtendedSlope::from_integer(scale.clone()))
            .expect("finite product");
        acc += scaled.floor().expect("finite");
    }
    acc
}

/// `Σ_i ⌊frac(y_i)·scale⌋`, the mirror of [`residue_sum_neg`].
pub(crate) fn residue_sum_pos(y: &[ExtendedSlope], scale: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for s in y {
        let f = s.frac().expect("caller ensures finite coordinates");
        let scaled = f
            .checked_mul(&ExtendedSlope::from_integer(scale.clone()))
            .expect("finite product");
        acc += scaled.floor().expect("finite");
    }
    acc
}
