//! Seifert vertex data: a coprime weight pair (p, q) with boundary-component
//! count n, plus the derived complementary pair (p*, q*).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use slope_core::ExtendedSlope;

use crate::EngineError;

/// The unique pair with `p·p* − q·q* = 1` and `q* ∈ {0, …, p−1}`.
/// Requires `p > 0` and `gcd(p, q) = 1`; `q` may be negative.
pub fn pstar_qstar(p: &BigInt, q: &BigInt) -> Result<(BigInt, BigInt), EngineError> {
    if !p.is_positive() {
        return Err(EngineError::InvalidInput(format!(
            "weight p must be positive, got {p}"
        )));
    }
    if p.gcd(q) != BigInt::one() {
        return Err(EngineError::InvalidInput(format!(
            "weights must be coprime, got ({p}, {q})"
        )));
    }
    if p.is_one() {
        return Ok((BigInt::one(), BigInt::zero()));
    }
    // Extended Euclid: x·p + y·q = 1, then (p*, q*) = (x, −y) shifted by
    // multiples of (q, p) until q* lands in [0, p).
    let e = p.extended_gcd(q);
    debug_assert!(e.gcd.is_one());
    let p_star_raw = e.x;
    let q_star_raw = -e.y;
    let shift = q_star_raw.div_floor(p);
    let q_star = &q_star_raw - &shift * p;
    let p_star = &p_star_raw - &shift * q;
    debug_assert_eq!(&p_star * p - &q_star * q, BigInt::one());
    debug_assert!(!q_star.is_negative() && &q_star < p);
    Ok((p_star, q_star))
}

/// One Seifert fibered piece of a satellite tree: the exterior of the
/// n-component (np, nq) torus link in the solid torus, fibered over an
/// (n+1)-punctured disk with a single multiplicity-p exceptional fiber.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertVertex {
    pub p: BigInt,
    pub q: BigInt,
    pub n: usize,
    pub p_star: BigInt,
    pub q_star: BigInt,
}

impl SeifertVertex {
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        n: usize,
    ) -> Result<Self, EngineError> {
        let p = p.into();
        let q = q.into();
        if q.is_zero() {
            return Err(EngineError::InvalidInput(
                "weight q must be nonzero".into(),
            ));
        }
        if n == 0 {
            return Err(EngineError::InvalidInput(
                "component count n must be positive".into(),
            ));
        }
        let (p_star, q_star) = pstar_qstar(&p, &q)?;
        Ok(Self {
            p,
            q,
            n,
            p_star,
            q_star,
        })
    }

    /// Seifert data slope −q*/p of the multiplicity-p exceptional fiber.
    pub fn exceptional_data_slope(&self) -> ExtendedSlope {
        ExtendedSlope::new(-self.q_star.clone(), self.p.clone()).expect("p > 0")
    }
}

/// Floor-sum lower bound for the two-fiber torus data: for `p, q > 1`
/// coprime and `k > 0`,
/// `(1 + ⌊q*k/p⌋ + ⌊k/(p+q)⌋) / k ≥ p*/q`.
/// Used to certify endpoint attainment in the torus-link region formulas;
/// exposed so the sweep can run as a check suite. Returns whether the
/// inequality holds at the given (p, q, k).
pub fn torus_data_floor_bound_holds(p: i64, q: i64, k: i64) -> bool {
    assert!(p > 1 && q > 1 && k > 0);
    let (p_star, q_star) = pstar_qstar(&BigInt::from(p), &BigInt::from(q))
        .expect("coprime positive weights");
    let p = i128::from(p);
    let q = i128::from(q);
    let k = i128::from(k);
    let p_star = i128::try_from(p_star).expect("small");
    let q_star = i128::try_from(q_star).expect("small");
    let lhs_num = 1 + (q_star * k).div_euclid(p) + k.div_euclid(p + q);
    // lhs_num / k ≥ p*/q  ⟺  lhs_num · q ≥ p* · k  (k, q > 0).
    lhs_num * q >= p_star * k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pq(p: i64, q: i64) -> (BigInt, BigInt) {
        pstar_qstar(&BigInt::from(p), &BigInt::from(q)).unwrap()
    }

    #[test]
    fn pstar_qstar_examples() {
        assert_eq!(pq(2, 3), (BigInt::from(2), BigInt::from(1)));
        assert_eq!(pq(1, 7), (BigInt::from(1), BigInt::from(0)));
        assert_eq!(pq(1, -4), (BigInt::from(1), BigInt::from(0)));
        assert_eq!(pq(2, 23), (BigInt::from(12), BigInt::from(1)));
        assert_eq!(pq(3, 2), (BigInt::from(1), BigInt::from(1)));
        assert_eq!(pq(2, -3), (BigInt::from(-1), BigInt::from(1)));
        assert_eq!(pq(5, 7), (BigInt::from(3), BigInt::from(2)));
    }

    #[test]
    fn pstar_qstar_rejects_bad_input() {
        assert!(pstar_qstar(&BigInt::from(4), &BigInt::from(6)).is_err());
        assert!(pstar_qstar(&BigInt::from(-2), &BigInt::from(3)).is_err());
        assert!(pstar_qstar(&BigInt::from(0), &BigInt::from(1)).is_err());
    }

    #[test]
    fn vertex_construction() {
        let v = SeifertVertex::new(2, 23, 2).unwrap();
        assert_eq!(v.p_star, BigInt::from(12));
        assert_eq!(v.q_star, BigInt::from(1));
        assert_eq!(v.exceptional_data_slope(), "-1/2".parse().unwrap());
        assert!(SeifertVertex::new(2, 0, 1).is_err());
        assert!(SeifertVertex::new(2, 4, 1).is_err());
        assert!(SeifertVertex::new(2, 3, 0).is_err());
    }

    #[test]
    fn floor_bound_small_sweep() {
        for p in 2..=6i64 {
            for q in 2..=6i64 {
                if BigInt::from(p).gcd(&BigInt::from(q)) != BigInt::one() {
                    continue;
                }
                for k in 1..=60 {
                    assert!(torus_data_floor_bound_holds(p, q, k), "p={p} q={q} k={k}");
                }
            }
        }
    }
}
