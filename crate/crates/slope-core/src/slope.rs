//! Extended rational slopes: elements of the projective circle Q ∪ {∞}.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::SlopeError;

/// A slope on the projective circle Q ∪ {∞}, stored as a reduced fraction
/// `num/den` with `den >= 0` and `gcd(num, den) = 1`. Infinity is `1/0`,
/// zero is `0/1`. There is a single point at infinity: `-1/0` normalizes
/// to `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedSlope {
    num: BigInt,
    den: BigInt,
}

impl ExtendedSlope {
    /// Builds a slope from a numerator/denominator pair, normalizing sign
    /// and common factors. Fails only on the indeterminate pair `0/0`.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, SlopeError> {
        if num.is_zero() && den.is_zero() {
            return Err(SlopeError::IndeterminateSlope);
        }
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if den.is_zero() {
            return Ok(Self {
                num: BigInt::one(),
                den,
            });
        }
        let g = num.gcd(&den);
        if g > BigInt::one() {
            num /= &g;
            den /= &g;
        }
        Ok(Self { num, den })
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    /// Builds `a/b` from machine integers; panics on `0/0`.
    pub fn from_fraction(a: i64, b: i64) -> Self {
        Self::new(BigInt::from(a), BigInt::from(b)).expect("0/0 is not a slope")
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// `1/y`; swaps 0 and ∞.
    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone()).expect("reciprocal of a valid slope")
    }

    /// `-y`; fixes 0 and ∞.
    pub fn neg(&self) -> Self {
        if self.den.is_zero() {
            // ∞ is its own negative; keep the canonical 1/0 form.
            return self.clone();
        }
        Self {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    /// Sum of two finite slopes. Returns `None` if either is ∞.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_infinite() || other.is_infinite() {
            return None;
        }
        Some(
            Self::new(
                &self.num * &other.den + &other.num * &self.den,
                &self.den * &other.den,
            )
            .expect("finite sum"),
        )
    }

    /// Difference of two finite slopes. Returns `None` if either is ∞.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.neg())
    }

    /// Product of two finite slopes. Returns `None` if either is ∞.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if self.is_infinite() || other.is_infinite() {
            return None;
        }
        Some(Self::new(&self.num * &other.num, &self.den * &other.den).expect("finite product"))
    }

    /// `y + n` for an integer `n`; ∞ is fixed.
    pub fn add_integer(&self, n: &BigInt) -> Self {
        Self {
            num: &self.num + n * &self.den,
            den: self.den.clone(),
        }
    }

    /// ⌊y⌋ for finite y.
    pub fn floor(&self) -> Option<BigInt> {
        if self.is_infinite() {
            return None;
        }
        Some(self.num.div_floor(&self.den))
    }

    /// ⌈y⌉ for finite y.
    pub fn ceil(&self) -> Option<BigInt> {
        if self.is_infinite() {
            return None;
        }
        Some(self.num.div_ceil(&self.den))
    }

    /// Fractional part y − ⌊y⌋ ∈ [0, 1) for finite y.
    pub fn frac(&self) -> Option<Self> {
        let f = self.floor()?;
        Some(Self {
            num: &self.num - f * &self.den,
            den: self.den.clone(),
        })
    }

    /// Total order on the circle with ∞ as the greatest element; finite
    /// slopes compare as rationals. This is the linear order underlying
    /// the circular (counterclockwise) order, which increases through
    /// finite values and wraps through ∞.
    pub fn cmp_linear(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            // den > 0 on both sides, so cross-multiplication preserves order.
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtendedSlope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_linear(other))
    }
}

impl Ord for ExtendedSlope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_linear(other)
    }
}

impl fmt::Display for ExtendedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExtendedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExtendedSlope {
    type Err = SlopeError;

    /// Parses `"a/b"`, `"a"`, or `"inf"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Self::infinity());
        }
        let parse_int = |t: &str| -> Result<BigInt, SlopeError> {
            t.parse::<BigInt>()
                .map_err(|_| SlopeError::ParseSlope(s.to_owned()))
        };
        match s.split_once('/') {
            Some((a, b)) => {
                let num = parse_int(a)?;
                let den = parse_int(b)?;
                if den.is_zero() {
                    // "a/0" only names ∞ when a != 0.
                    if num.is_zero() {
                        return Err(SlopeError::ParseSlope(s.to_owned()));
                    }
                    return Ok(Self::infinity());
                }
                Self::new(num, den)
            }
            None => Ok(Self::from_integer(parse_int(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> ExtendedSlope {
        t.parse().unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(s("2/4"), s("1/2"));
        assert_eq!(s("-2/-4"), s("1/2"));
        assert_eq!(s("3/-6"), s("-1/2"));
        assert_eq!(s("-5/0"), ExtendedSlope::infinity());
        assert_eq!(s("0/7"), ExtendedSlope::zero());
        assert!(ExtendedSlope::new(BigInt::zero(), BigInt::zero()).is_err());
    }

    #[test]
    fn parse_display_roundtrip() {
        for t in ["inf", "0", "-3", "7/2", "-12/5"] {
            assert_eq!(s(t).to_string(), t);
        }
        assert_eq!(s("INF"), ExtendedSlope::infinity());
        assert!("0/0".parse::<ExtendedSlope>().is_err());
        assert!("a/b".parse::<ExtendedSlope>().is_err());
    }

    #[test]
    fn linear_order_puts_infinity_on_top() {
        assert!(s("-1000000") < s("1/2"));
        assert!(s("1/2") < s("2/3"));
        assert!(s("2/3") < s("inf"));
        assert_eq!(s("inf").cmp_linear(&s("inf")), Ordering::Equal);
    }

    #[test]
    fn floor_ceil_frac() {
        assert_eq!(s("7/2").floor().unwrap(), BigInt::from(3));
        assert_eq!(s("7/2").ceil().unwrap(), BigInt::from(4));
        assert_eq!(s("-7/2").floor().unwrap(), BigInt::from(-4));
        assert_eq!(s("-7/2").ceil().unwrap(), BigInt::from(-3));
        assert_eq!(s("-7/2").frac().unwrap(), s("1/2"));
        assert_eq!(s("3").frac().unwrap(), s("0"));
        assert!(s("inf").floor().is_none());
    }

    #[test]
    fn reciprocal_swaps_zero_and_infinity() {
        assert_eq!(s("0").recip(), s("inf"));
        assert_eq!(s("inf").recip(), s("0"));
        assert_eq!(s("-2/3").recip(), s("-3/2"));
    }

    #[test]
    fn negation_keeps_infinity_canonical() {
        let minus_inf = s("inf").neg();
        assert_eq!(minus_inf, ExtendedSlope::infinity());
        assert_eq!(minus_inf.numer(), ExtendedSlope::infinity().numer());
        assert_eq!(s("0").neg(), s("0"));
        assert_eq!(s("-2/3").neg(), s("2/3"));
        assert_eq!(s("2/3").neg().neg(), s("2/3"));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(s("1/2").checked_add(&s("1/3")).unwrap(), s("5/6"));
        assert_eq!(s("1/2").checked_sub(&s("1/2")).unwrap(), s("0"));
        assert!(s("inf").checked_add(&s("1")).is_none());
        assert_eq!(s("-7/2").add_integer(&BigInt::from(4)), s("1/2"));
        assert_eq!(s("inf").add_integer(&BigInt::from(4)), s("inf"));
    }
}
