//! Unimodular 2×2 integer matrices acting on slopes as linear fractional
//! transformations.

use num_bigint::BigInt;
use num_traits::One;

use crate::{ExtendedSlope, SlopeError};

/// A 2×2 integer matrix `[[a, b], [c, d]]` with determinant ±1. Acting on a
/// slope `p/q` it yields `(a·p + b·q) / (c·p + d·q)`; determinant +1 maps
/// preserve the circular orientation, determinant −1 maps reverse it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, SlopeError> {
        let m = Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det_big();
        if det.magnitude().is_one() {
            Ok(m)
        } else {
            Err(SlopeError::NotUnimodular(det.to_string()))
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1).expect("identity is unimodular")
    }

    fn det_big(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Determinant, always +1 or −1.
    pub fn det(&self) -> i8 {
        if self.det_big() == BigInt::one() {
            1
        } else {
            -1
        }
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    /// Exact inverse; again unimodular.
    pub fn inverse(&self) -> Self {
        // adj = [[d, -b], [-c, a]]; inverse = adj / det with det = ±1.
        if self.det() == 1 {
            Self {
                a: self.d.clone(),
                b: -self.b.clone(),
                c: -self.c.clone(),
                d: self.a.clone(),
            }
        } else {
            Self {
                a: -self.d.clone(),
                b: self.b.clone(),
                c: self.c.clone(),
                d: -self.a.clone(),
            }
        }
    }
}

/// Applies the linear fractional transformation `m` to a slope:
/// `p/q ↦ (a·p + b·q)/(c·p + d·q)`. Total on the projective circle: the
/// image pair cannot be 0/0 because `m` is invertible.
pub fn lft_apply(m: &IntMatrix2, s: &ExtendedSlope) -> ExtendedSlope {
    let num = &m.a * s.numer() + &m.b * s.denom();
    let den = &m.c * s.numer() + &m.d * s.denom();
    ExtendedSlope::new(num, den).expect("unimodular image of a valid slope")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> ExtendedSlope {
        t.parse().unwrap()
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(IntMatrix2::new(2, 0, 0, 2).is_err());
        assert!(IntMatrix2::new(3, -1, 2, -2).is_err()); // det −4
        assert!(IntMatrix2::new(2, -1, 3, -2).is_ok()); // det −1
    }

    #[test]
    fn splice_matrix_example() {
        // [[2,−1],[3,−2]]: ∞ ↦ 2/3 and 2/3 ↦ ∞ (an involution of order two here).
        let m = IntMatrix2::new(2, -1, 3, -2).unwrap();
        assert_eq!(lft_apply(&m, &s("inf")), s("2/3"));
        assert_eq!(lft_apply(&m, &s("2/3")), s("inf"));
        assert_eq!(lft_apply(&m, &s("0")), s("1/2"));
        assert_eq!(m.det(), -1);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let m = IntMatrix2::new(2, -1, 3, -2).unwrap();
        assert_eq!(m.mul(&m.inverse()), IntMatrix2::identity());
        let n = IntMatrix2::new(4, -1, -5, 1).unwrap();
        assert_eq!(n.inverse().mul(&n), IntMatrix2::identity());
        for t in ["0", "inf", "5/7", "-3"] {
            let x = s(t);
            assert_eq!(lft_apply(&n.inverse(), &lft_apply(&n, &x)), x);
        }
    }
}
