//! Distinguished slope-vector sets: reducible slopes (some component ∞),
//! exceptional slopes (at least two ∞), the false-reducible pattern, and
//! canonical representatives under the zero-sum integer reparameterization
//! lattice Λ.

use num_bigint::BigInt;
use num_traits::Zero;
use slope_core::ExtendedSlope;

/// Flags for one slope vector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SpecialSlopeFlags {
    /// Some component is ∞ (the filling acquires a connected summand).
    pub in_r: bool,
    /// At least two components are ∞ (the filling acquires an S¹×S²
    /// summand and is never an L-space).
    pub in_z: bool,
    /// The false-reducible pattern: exactly one ∞, at most one nonzero
    /// finite component, all remaining components 0. Only meaningful for
    /// pieces without exceptional fibers; n = 1 vectors never qualify.
    pub in_r0: bool,
}

pub fn classify_special_slope(vec: &[ExtendedSlope]) -> SpecialSlopeFlags {
    let n_inf = vec.iter().filter(|y| y.is_infinite()).count();
    let in_r = n_inf >= 1;
    let in_z = n_inf >= 2;
    let in_r0 = vec.len() >= 2 && n_inf == 1 && {
        let finite_nonzero = vec
            .iter()
            .filter(|y| !y.is_infinite() && !y.is_zero())
            .count();
        finite_nonzero <= 1
    };
    SpecialSlopeFlags { in_r, in_z, in_r0 }
}

/// Canonical representative of a slope vector modulo Λ = {l ∈ ℤⁿ : Σl = 0}.
///
/// Every finite component except the last finite one is reduced to its
/// fractional part in [0, 1); the last finite component absorbs the
/// balancing integer so the recorded shift sums to zero. Infinite
/// components are fixed by Λ and pass through unchanged. Returns
/// (representative, shift) with `vec = rep + shift` componentwise.
pub fn lambda_canonicalize(vec: &[ExtendedSlope]) -> (Vec<ExtendedSlope>, Vec<BigInt>) {
    let last_finite = vec.iter().rposition(|y| !y.is_infinite());
    let mut shift = vec![BigInt::zero(); vec.len()];
    let mut balance = BigInt::zero();
    for (i, y) in vec.iter().enumerate() {
        if y.is_infinite() || Some(i) == last_finite {
            continue;
        }
        let f = y.floor().expect("finite");
        balance += &f;
        shift[i] = f;
    }
    if let Some(i) = last_finite {
        shift[i] = -balance;
    }
    let rep: Vec<ExtendedSlope> = vec
        .iter()
        .zip(&shift)
        .map(|(y, s)| y.add_integer(&(-s)))
        .collect();
    (rep, shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(ts: &[&str]) -> Vec<ExtendedSlope> {
        ts.iter().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn special_flags() {
        let f = classify_special_slope(&v(&["inf", "3/4"]));
        assert!(f.in_r && !f.in_z && f.in_r0);
        let f = classify_special_slope(&v(&["inf", "inf", "1"]));
        assert!(f.in_r && f.in_z && !f.in_r0);
        let f = classify_special_slope(&v(&["inf", "5/7", "0"]));
        assert!(f.in_r0);
        let f = classify_special_slope(&v(&["inf", "5/7", "1/3"]));
        assert!(f.in_r && !f.in_r0);
        let f = classify_special_slope(&v(&["inf"]));
        assert!(f.in_r && !f.in_r0);
        let f = classify_special_slope(&v(&["1/2", "1/3"]));
        assert!(!f.in_r && !f.in_z && !f.in_r0);
    }

    #[test]
    fn canonicalize_examples() {
        let (rep, shift) = lambda_canonicalize(&v(&["5/2", "-3/2"]));
        assert_eq!(rep, v(&["1/2", "1/2"]));
        assert_eq!(shift, vec![BigInt::from(2), BigInt::from(-2)]);

        let (rep, shift) = lambda_canonicalize(&v(&["1", "-1"]));
        assert_eq!(rep, v(&["0", "0"]));
        assert_eq!(shift, vec![BigInt::from(1), BigInt::from(-1)]);

        let (rep, shift) = lambda_canonicalize(&v(&["1/3", "2/3"]));
        assert_eq!(rep, v(&["1/3", "2/3"]));
        assert_eq!(shift, vec![BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn canonicalize_fixes_infinities_and_balances() {
        let (rep, shift) = lambda_canonicalize(&v(&["7/2", "inf", "-9/4"]));
        assert_eq!(rep, v(&["1/2", "inf", "3/4"]));
        assert_eq!(shift, vec![BigInt::from(3), BigInt::from(0), BigInt::from(-3)]);
        assert_eq!(shift.iter().sum::<BigInt>(), BigInt::zero());
    }
}
