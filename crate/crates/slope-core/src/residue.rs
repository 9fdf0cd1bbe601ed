//! Integer/fractional decomposition and modular bracket helpers for the
//! region predicates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::ExtendedSlope;

/// `x = floor + frac` with `frac ∈ [0, 1)`; only defined for finite slopes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FracResidue {
    pub floor: BigInt,
    pub frac: ExtendedSlope,
}

/// Split a finite slope into its floor and fractional part.
pub fn split_floor(x: &ExtendedSlope) -> Option<FracResidue> {
    let floor = x.floor()?;
    let frac = x.frac()?;
    Some(FracResidue { floor, frac })
}

/// The representative of `x` modulo `|m|` in `{0, …, |m|−1}`:
/// `x − |m|·⌊x/|m|⌋`. Requires `m ≠ 0`.
pub fn bracket_mod(x: &BigInt, m: &BigInt) -> BigInt {
    assert!(!m.is_zero(), "bracket_mod requires a nonzero modulus");
    x.mod_floor(&m.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> ExtendedSlope {
        t.parse().unwrap()
    }

    #[test]
    fn split_floor_examples() {
        let r = split_floor(&s("-7/2")).unwrap();
        assert_eq!(r.floor, BigInt::from(-4));
        assert_eq!(r.frac, s("1/2"));
        let r = split_floor(&s("5")).unwrap();
        assert_eq!(r.floor, BigInt::from(5));
        assert_eq!(r.frac, s("0"));
        assert!(split_floor(&s("inf")).is_none());
    }

    #[test]
    fn bracket_mod_examples() {
        assert_eq!(
            bracket_mod(&BigInt::from(7), &BigInt::from(3)),
            BigInt::from(1)
        );
        assert_eq!(
            bracket_mod(&BigInt::from(-7), &BigInt::from(3)),
            BigInt::from(2)
        );
        assert_eq!(
            bracket_mod(&BigInt::from(-7), &BigInt::from(-3)),
            BigInt::from(2)
        );
        assert_eq!(
            bracket_mod(&BigInt::from(6), &BigInt::from(3)),
            BigInt::from(0)
        );
    }
}
