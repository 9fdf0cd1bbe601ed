//! Basis change between Seifert-data slopes and surgery coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use slope_core::{lft_apply, ExtendedSlope, IntMatrix2};

/// The basis-change matrix `[[pq, 1], [1, 0]]` (determinant −1) sending
/// a Seifert-data slope `y` to the surgery coefficient `pq + 1/y`.
pub fn psi_matrix(pq: &BigInt) -> IntMatrix2 {
    IntMatrix2::new(pq.clone(), BigInt::one(), BigInt::one(), BigInt::zero())
        .expect("[[pq,1],[1,0]] has determinant -1")
}

/// Surgery coefficient of the Seifert-data slope `y`: `pq + 1/y`, with
/// `ψ(∞) = pq` and `ψ(0) = ∞`. Total as a projective map.
pub fn psi(y: &ExtendedSlope, pq: &BigInt) -> ExtendedSlope {
    lft_apply(&psi_matrix(pq), y)
}

/// Exact inverse of [`psi`]: `α ↦ 1/(α − pq)`.
pub fn psi_inv(alpha: &ExtendedSlope, pq: &BigInt) -> ExtendedSlope {
    lft_apply(&psi_matrix(pq).inverse(), alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64) -> ExtendedSlope {
        ExtendedSlope::from_fraction(a, b)
    }

    #[test]
    fn psi_fixed_values() {
        let pq = BigInt::from(46);
        assert_eq!(psi(&ExtendedSlope::infinity(), &pq), s(46, 1));
        assert_eq!(psi(&s(1, 1), &pq), s(47, 1));
        assert_eq!(psi(&s(-1, 1), &pq), s(45, 1));
        assert_eq!(psi(&s(-1, 6), &BigInt::from(6)), ExtendedSlope::zero());
        assert_eq!(psi(&ExtendedSlope::zero(), &pq), ExtendedSlope::infinity());
    }

    #[test]
    fn psi_inv_round_trip() {
        let pq = BigInt::from(46);
        for (a, b) in [(47, 1), (45, 1), (0, 1), (46, 1), (1, 0), (-3, 7)] {
            let alpha = ExtendedSlope::new(BigInt::from(a), BigInt::from(b)).unwrap();
            assert_eq!(psi(&psi_inv(&alpha, &pq), &pq), alpha);
            assert_eq!(psi_inv(&psi(&alpha, &pq), &pq), alpha);
        }
    }
}
