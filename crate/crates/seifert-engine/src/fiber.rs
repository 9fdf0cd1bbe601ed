//! The fiber-exterior interval engine: exact extremization of the
//! floor/ceiling objectives
//!
//! ```text
//! y₋(k) = −(1/k)·(1 + Σᵢ ⌊yᵢ·k⌋ + Σⱼ (⌈yⱼ₊·k⌉ − 1))        k = 1, 2, …
//! y₊(k) = −(1/k)·(−1 + Σᵢ ⌈yᵢ·k⌉ + Σⱼ (⌊yⱼ₋·k⌋ + 1))
//! ```
//!
//! over positive integers k, where the yᵢ are filled slopes of a Seifert
//! piece and [yⱼ₋, yⱼ₊] are the L-space intervals of boundary-incompressible
//! summands glued along its other boundary components. The set of L-space
//! filling slopes on the remaining boundary is determined by
//! y₋ = sup y₋(k) and y₊ = inf y₊(k) together with whether the extrema are
//! attained at finite k.
//!
//! Writing y₋(k) = C₋ + g(k)/k with C₋ = −Σyᵢ − Σyⱼ₊, the correction g is
//! periodic in k with period P = lcm of all slope/endpoint denominators, so
//! along each residue class the values move monotonically from their k ≤ P
//! value toward the limit C₋. Scanning k ∈ [1, P] therefore decides the
//! extremum and its attainment exactly: the sup is attained iff the window
//! maximum is ≥ C₋ (equality counts: the limit value is then realized at a
//! finite k), and symmetrically for the inf.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use slope_core::{ExtendedSlope, SlopeInterval};

use crate::EngineError;

/// Filled-slope and glued-summand data for one Seifert piece, expressed in
/// the basis of the boundary component being classified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberExteriorInput {
    /// Seifert data of exceptional fibers plus filled boundary slopes.
    pub seifert_slopes: Vec<ExtendedSlope>,
    /// L-space intervals of boundary-incompressible summands glued along
    /// further boundary components; each must be an `Arc` or a
    /// `LongitudeComplement` (degenerate interval with equal endpoints).
    pub bi_intervals: Vec<SlopeInterval>,
}

impl FiberExteriorInput {
    pub fn new(seifert_slopes: Vec<ExtendedSlope>, bi_intervals: Vec<SlopeInterval>) -> Self {
        Self {
            seifert_slopes,
            bi_intervals,
        }
    }

    pub fn from_slopes(seifert_slopes: Vec<ExtendedSlope>) -> Self {
        Self::new(seifert_slopes, Vec::new())
    }
}

/// Classified L-space interval of a fiber exterior, with the extremum
/// values, their attainment, and boundary compressibility.
///
/// `is_bc` holds exactly when neither extremum is attained at finite k;
/// in that case `y_minus = y_plus` is the rational longitude and the piece
/// is boundary compressible. Attained equal extrema also occur (then the
/// interval is the longitude complement but `is_bc` is false).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberIntervalResult {
    pub interval: SlopeInterval,
    pub y_minus: ExtendedSlope,
    pub y_plus: ExtendedSlope,
    pub minus_attained: bool,
    pub plus_attained: bool,
    pub is_bc: bool,
}

/// The endpoint pair (y₋, y₊) contributed by one glued summand interval.
fn bi_endpoints(interval: &SlopeInterval) -> Result<(ExtendedSlope, ExtendedSlope), EngineError> {
    match interval {
        SlopeInterval::Arc { lo, hi, .. } => Ok((lo.clone(), hi.clone())),
        SlopeInterval::LongitudeComplement(l) => Ok((l.clone(), l.clone())),
        other => Err(EngineError::InvalidInput(format!(
            "glued summand interval must be an arc or longitude complement, got {other:?}"
        ))),
    }
}

/// −Σ yᵢ over the Seifert data; ∞ if any slope is infinite.
pub fn rational_longitude(seifert_slopes: &[ExtendedSlope]) -> ExtendedSlope {
    let mut sum = ExtendedSlope::zero();
    for y in seifert_slopes {
        match sum.checked_add(y) {
            Some(s) => sum = s,
            None => return ExtendedSlope::infinity(),
        }
    }
    sum.neg()
}

/// Exact value of the minus-side objective at one k (∞ if any summand is
/// infinite). Panics on k = 0 or a malformed summand interval.
pub fn y_minus_of_k(input: &FiberExteriorInput, k: u64) -> ExtendedSlope {
    objective_at_k(input, k, Side::Minus)
}

/// Exact value of the plus-side objective at one k (∞ if any summand is
/// infinite). Panics on k = 0 or a malformed summand interval.
pub fn y_plus_of_k(input: &FiberExteriorInput, k: u64) -> ExtendedSlope {
    objective_at_k(input, k, Side::Plus)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Minus,
    Plus,
}

fn objective_at_k(input: &FiberExteriorInput, k: u64, side: Side) -> ExtendedSlope {
    assert!(k > 0, "objective index k must be positive");
    let k = BigInt::from(k);
    let mut acc = match side {
        Side::Minus => BigInt::one(),
        Side::Plus => -BigInt::one(),
    };
    for y in &input.seifert_slopes {
        if y.is_infinite() {
            return ExtendedSlope::infinity();
        }
        let prod = y.numer() * &k;
        acc += match side {
            Side::Minus => prod.div_floor(y.denom()),
            Side::Plus => prod.div_ceil(y.denom()),
        };
    }
    for bi in &input.bi_intervals {
        let (lo, hi) = bi_endpoints(bi).expect("malformed summand interval");
        let e = match side {
            Side::Minus => hi,
            Side::Plus => lo,
        };
        if e.is_infinite() {
            return ExtendedSlope::infinity();
        }
        let prod = e.numer() * &k;
        acc += match side {
            Side::Minus => prod.div_ceil(e.denom()) - BigInt::one(),
            Side::Plus => prod.div_floor(e.denom()) + BigInt::one(),
        };
    }
    ExtendedSlope::new(-acc, k).expect("k > 0")
}

/// Best objective value over the scan window, kept as an exact pair
/// (numerator, k) meaning value = numerator / k.
struct WindowBest<T> {
    num: T,
    k: T,
}

/// Generic window scan over k ∈ [1, period]: returns the maximum of the
/// minus objective and the minimum of the plus objective. `T` is i128 on
/// the fast path and BigInt when magnitudes may overflow it.
fn scan_window<T>(
    slopes: &[(T, T)],
    bi_plus: &[(T, T)],
    bi_minus: &[(T, T)],
    period: u64,
) -> (WindowBest<T>, WindowBest<T>)
where
    T: Integer + Clone,
{
    let one = T::one;
    let mut best_minus: Option<WindowBest<T>> = None;
    let mut best_plus: Option<WindowBest<T>> = None;
    let mut k = T::one();
    for _ in 0..period {
        // minus side: −(1 + Σ⌊n·k/d⌋ + Σ(⌈n·k/d⌉ − 1))
        let mut acc_m = one();
        for (n, d) in slopes {
            acc_m = acc_m + (n.clone() * k.clone()).div_floor(d);
        }
        for (n, d) in bi_plus {
            acc_m = acc_m + (n.clone() * k.clone()).div_ceil(d) - one();
        }
        let num_m = T::zero() - acc_m;
        let better = match &best_minus {
            None => true,
            // num_m/k > best.num/best.k  ⟺  num_m·best.k > best.num·k
            Some(b) => num_m.clone() * b.k.clone() > b.num.clone() * k.clone(),
        };
        if better {
            best_minus = Some(WindowBest {
                num: num_m,
                k: k.clone(),
            });
        }
        // plus side: −(−1 + Σ⌈n·k/d⌉ + Σ(⌊n·k/d⌋ + 1))
        let mut acc_p = T::zero() - one();
        for (n, d) in slopes {
            acc_p = acc_p + (n.clone() * k.clone()).div_ceil(d);
        }
        for (n, d) in bi_minus {
            acc_p = acc_p + (n.clone() * k.clone()).div_floor(d) + one();
        }
        let num_p = T::zero() - acc_p;
        let better = match &best_plus {
            None => true,
            Some(b) => num_p.clone() * b.k.clone() < b.num.clone() * k.clone(),
        };
        if better {
            best_plus = Some(WindowBest {
                num: num_p,
                k: k.clone(),
            });
        }
        k = k + one();
    }
    (
        best_minus.expect("period ≥ 1"),
        best_plus.expect("period ≥ 1"),
    )
}

/// Sum of slopes known to be finite.
fn finite_sum(slopes: &[&ExtendedSlope]) -> ExtendedSlope {
    let mut sum = ExtendedSlope::zero();
    for y in slopes {
        sum = sum.checked_add(y).expect("finite sum");
    }
    sum
}

fn to_i64_pair(s: &ExtendedSlope) -> Option<(i128, i128)> {
    let n = i64::try_from(s.numer()).ok()?;
    let d = i64::try_from(s.denom()).ok()?;
    Some((i128::from(n), i128::from(d)))
}

/// Number of summand intervals that are genuine linear arcs
/// (finite endpoints with lo < hi in the linear order).
fn linear_bi_count(pairs: &[(ExtendedSlope, ExtendedSlope)]) -> usize {
    pairs
        .iter()
        .filter(|(lo, hi)| !lo.is_infinite() && !hi.is_infinite() && lo < hi)
        .count()
}

/// Classify the L-space filling slopes of a fiber exterior.
///
/// `period_cap` bounds the scan window; inputs whose denominator lcm
/// exceeds it yield a resource error rather than an inexact answer.
pub fn fiber_exterior_interval(
    input: &FiberExteriorInput,
    period_cap: u64,
) -> Result<FiberIntervalResult, EngineError> {
    let bi_pairs: Vec<(ExtendedSlope, ExtendedSlope)> = input
        .bi_intervals
        .iter()
        .map(bi_endpoints)
        .collect::<Result<_, _>>()?;
    let n_lt_bi = linear_bi_count(&bi_pairs);
    let n_inf = input
        .seifert_slopes
        .iter()
        .filter(|y| y.is_infinite())
        .count();
    let inf_in_plus = bi_pairs.iter().any(|(_, hi)| hi.is_infinite());
    let inf_in_minus = bi_pairs.iter().any(|(lo, _)| lo.is_infinite());

    let inf = ExtendedSlope::infinity;
    if n_inf > 0 {
        // Every objective value is ∞ on both sides; the interval is decided
        // by the count of infinite slopes alone.
        if inf_in_plus || inf_in_minus {
            return Err(EngineError::UnclassifiedStructure(
                "infinite Seifert slope combined with an infinite summand endpoint".into(),
            ));
        }
        let interval = if n_inf > 1 || n_lt_bi > 0 {
            SlopeInterval::Empty
        } else {
            SlopeInterval::LongitudeComplement(inf())
        };
        return Ok(FiberIntervalResult {
            interval,
            y_minus: inf(),
            y_plus: inf(),
            minus_attained: false,
            plus_attained: false,
            is_bc: true,
        });
    }
    if inf_in_plus && inf_in_minus {
        return Err(EngineError::UnclassifiedStructure(
            "summand endpoints reach ∞ on both sides".into(),
        ));
    }

    // Sides not pinned at ∞ are computed by the finite window scan.
    let slope_refs: Vec<&ExtendedSlope> = input.seifert_slopes.iter().collect();
    let plus_endpoint_refs: Vec<&ExtendedSlope> = bi_pairs.iter().map(|(_, hi)| hi).collect();
    let minus_endpoint_refs: Vec<&ExtendedSlope> = bi_pairs.iter().map(|(lo, _)| lo).collect();

    if inf_in_plus || inf_in_minus {
        // One objective is identically ∞ (attained by definition); the other
        // is finite and must be attained for the arc form to apply.
        let (best, limit) = scan_one_side(
            &slope_refs,
            &plus_endpoint_refs,
            &minus_endpoint_refs,
            period_cap,
            if inf_in_plus { Side::Plus } else { Side::Minus },
        )?;
        let attained = if inf_in_plus {
            best <= limit
        } else {
            best >= limit
        };
        if !attained {
            return Err(EngineError::UnclassifiedStructure(
                "finite-side extremum unattained alongside an ∞ summand endpoint".into(),
            ));
        }
        let (y_minus, y_plus) = if inf_in_plus {
            (inf(), best)
        } else {
            (best, inf())
        };
        let interval = SlopeInterval::arc(y_minus.clone(), y_plus.clone(), true, true)
            .map_err(|_| {
                EngineError::UnclassifiedStructure(
                    "degenerate arc with an ∞ endpoint pair".into(),
                )
            })?;
        return Ok(FiberIntervalResult {
            interval,
            y_minus,
            y_plus,
            minus_attained: true,
            plus_attained: true,
            is_bc: false,
        });
    }

    // Fully finite data: scan both sides over one period.
    let c_minus = finite_sum(&slope_refs)
        .checked_add(&finite_sum(&plus_endpoint_refs))
        .expect("finite")
        .neg();
    let c_plus = finite_sum(&slope_refs)
        .checked_add(&finite_sum(&minus_endpoint_refs))
        .expect("finite")
        .neg();
    let period = period_of(&slope_refs, &bi_pairs, period_cap)?;
    let (y_minus, y_plus) = scan_both(&slope_refs, &bi_pairs, period);
    let minus_attained = y_minus >= c_minus;
    let plus_attained = y_plus <= c_plus;
    let y_minus = if minus_attained { y_minus } else { c_minus };
    let y_plus = if plus_attained { y_plus } else { c_plus };

    let result = |interval, is_bc| FiberIntervalResult {
        interval,
        y_minus: y_minus.clone(),
        y_plus: y_plus.clone(),
        minus_attained,
        plus_attained,
        is_bc,
    };
    use std::cmp::Ordering::*;
    match (minus_attained, plus_attained) {
        (false, true) | (true, false) => Err(EngineError::UnclassifiedStructure(
            "one extremum attained without the other".into(),
        )),
        (false, false) => {
            if n_lt_bi > 0 || y_minus != y_plus {
                Err(EngineError::UnclassifiedStructure(
                    "unattained extrema with non-degenerate summand intervals".into(),
                ))
            } else {
                Ok(result(
                    SlopeInterval::LongitudeComplement(y_minus.clone()),
                    true,
                ))
            }
        }
        (true, true) => match n_lt_bi {
            0 => match y_minus.cmp(&y_plus) {
                Greater => Ok(result(
                    SlopeInterval::arc(y_minus.clone(), y_plus.clone(), true, true)
                        .expect("distinct endpoints"),
                    false,
                )),
                Equal => Ok(result(
                    SlopeInterval::LongitudeComplement(y_minus.clone()),
                    false,
                )),
                Less => Err(EngineError::UnclassifiedStructure(
                    "attained extrema in linear position without a linear summand".into(),
                )),
            },
            1 => match y_minus.cmp(&y_plus) {
                Less => Ok(result(
                    SlopeInterval::arc(y_minus.clone(), y_plus.clone(), true, true)
                        .expect("distinct endpoints"),
                    false,
                )),
                Equal => Ok(result(SlopeInterval::Point(y_minus.clone()), false)),
                Greater => Ok(result(SlopeInterval::Empty, false)),
            },
            _ => Ok(result(SlopeInterval::Empty, false)),
        },
    }
}

/// lcm of all denominators, guarded by the period cap.
fn period_of(
    slopes: &[&ExtendedSlope],
    bi_pairs: &[(ExtendedSlope, ExtendedSlope)],
    period_cap: u64,
) -> Result<u64, EngineError> {
    let mut p = BigInt::one();
    let mut fold = |d: &BigInt| {
        if !d.is_zero() {
            p = p.lcm(d);
        }
    };
    for y in slopes {
        fold(y.denom());
    }
    for (lo, hi) in bi_pairs {
        fold(lo.denom());
        fold(hi.denom());
    }
    u64::try_from(&p)
        .ok()
        .filter(|&v| v <= period_cap)
        .ok_or(EngineError::PeriodOverflow {
            period: p.to_string(),
            cap: period_cap,
        })
}

/// Scan both objectives over k ∈ [1, period], choosing i128 arithmetic when
/// every magnitude provably fits, and arbitrary precision otherwise.
fn scan_both(
    slopes: &[&ExtendedSlope],
    bi_pairs: &[(ExtendedSlope, ExtendedSlope)],
    period: u64,
) -> (ExtendedSlope, ExtendedSlope) {
    let small: Option<(Vec<_>, Vec<_>, Vec<_>)> = (|| {
        if period > 1 << 20 {
            return None;
        }
        let slopes = slopes
            .iter()
            .map(|y| to_i64_pair(y))
            .collect::<Option<Vec<_>>>()?;
        let plus = bi_pairs
            .iter()
            .map(|(_, hi)| to_i64_pair(hi))
            .collect::<Option<Vec<_>>>()?;
        let minus = bi_pairs
            .iter()
            .map(|(lo, _)| to_i64_pair(lo))
            .collect::<Option<Vec<_>>>()?;
        if slopes.len() + bi_pairs.len() > 1 << 10 {
            return None;
        }
        Some((slopes, plus, minus))
    })();
    if let Some((s, p, m)) = small {
        let (bm, bp) = scan_window::<i128>(&s, &p, &m, period);
        (
            ExtendedSlope::new(BigInt::from(bm.num), BigInt::from(bm.k)).expect("k > 0"),
            ExtendedSlope::new(BigInt::from(bp.num), BigInt::from(bp.k)).expect("k > 0"),
        )
    } else {
        let conv = |y: &ExtendedSlope| (y.numer().clone(), y.denom().clone());
        let s: Vec<_> = slopes.iter().map(|y| conv(y)).collect();
        let p: Vec<_> = bi_pairs.iter().map(|(_, hi)| conv(hi)).collect();
        let m: Vec<_> = bi_pairs.iter().map(|(lo, _)| conv(lo)).collect();
        let (bm, bp) = scan_window::<BigInt>(&s, &p, &m, period);
        (
            ExtendedSlope::new(bm.num, bm.k).expect("k > 0"),
            ExtendedSlope::new(bp.num, bp.k).expect("k > 0"),
        )
    }
}

/// Scan a single side, returning (window best, limit value C).
fn scan_one_side(
    slopes: &[&ExtendedSlope],
    plus_endpoints: &[&ExtendedSlope],
    minus_endpoints: &[&ExtendedSlope],
    period_cap: u64,
    side: Side,
) -> Result<(ExtendedSlope, ExtendedSlope), EngineError> {
    // Only the finite side's endpoints enter its formula and period.
    let relevant: Vec<(ExtendedSlope, ExtendedSlope)> = match side {
        // plus side uses minus endpoints
        Side::Plus => minus_endpoints
            .iter()
            .map(|e| ((*e).clone(), (*e).clone()))
            .collect(),
        Side::Minus => plus_endpoints
            .iter()
            .map(|e| ((*e).clone(), (*e).clone()))
            .collect(),
    };
    let period = period_of(slopes, &relevant, period_cap)?;
    let (y_minus, y_plus) = scan_both(slopes, &relevant, period);
    let relevant_refs: Vec<&ExtendedSlope> = relevant.iter().map(|(lo, _)| lo).collect();
    let limit = finite_sum(slopes)
        .checked_add(&finite_sum(&relevant_refs))
        .expect("finite")
        .neg();
    Ok(match side {
        Side::Minus => (y_minus, limit),
        Side::Plus => (y_plus, limit),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_PERIOD_CAP;

    fn s(t: &str) -> ExtendedSlope {
        t.parse().unwrap()
    }

    fn slopes(ts: &[&str]) -> FiberExteriorInput {
        FiberExteriorInput::from_slopes(ts.iter().map(|t| s(t)).collect())
    }

    fn run(input: &FiberExteriorInput) -> FiberIntervalResult {
        fiber_exterior_interval(input, DEFAULT_PERIOD_CAP).unwrap()
    }

    #[test]
    fn objective_values() {
        let input = slopes(&["-1/2", "2/3"]);
        assert_eq!(y_minus_of_k(&input, 1), s("0"));
        let zeros = slopes(&["0", "0", "0"]);
        assert_eq!(y_minus_of_k(&zeros, 4), s("-1/4"));
        assert_eq!(y_plus_of_k(&zeros, 4), s("1/4"));
        let with_inf = slopes(&["inf", "1/2"]);
        assert!(y_minus_of_k(&with_inf, 3).is_infinite());
    }

    #[test]
    fn trefoil_fiber_exterior() {
        let r = run(&slopes(&["-1/2", "2/3"]));
        assert_eq!(r.y_minus, s("0"));
        assert_eq!(r.y_plus, s("-1/5"));
        assert!(r.minus_attained && r.plus_attained && !r.is_bc);
        assert_eq!(
            r.interval,
            SlopeInterval::arc(s("0"), s("-1/5"), true, true).unwrap()
        );
        // The arc wraps through ∞.
        assert!(r.interval.contains(&s("inf")));
        assert!(r.interval.contains(&s("5")));
        assert!(!r.interval.contains(&s("-1/10")));
    }

    #[test]
    fn solid_torus_is_boundary_compressible() {
        let r = run(&slopes(&[]));
        assert!(r.is_bc);
        assert!(!r.minus_attained && !r.plus_attained);
        assert_eq!(r.y_minus, s("0"));
        assert_eq!(r.y_plus, s("0"));
        assert_eq!(r.interval, SlopeInterval::LongitudeComplement(s("0")));
    }

    #[test]
    fn integral_fillings_give_boundary_compressible() {
        let r = run(&slopes(&["-1/2", "0", "0"]));
        assert!(r.is_bc);
        assert_eq!(r.interval, SlopeInterval::LongitudeComplement(s("1/2")));
        assert_eq!(r.y_minus, s("1/2"));
    }

    #[test]
    fn attained_equal_extrema_are_not_compressible() {
        // Seifert data (1/2, −1/2): the extrema coincide at the longitude 0
        // but are attained at odd k, so the piece is incompressible and all
        // slopes except the longitude are L-space fillings.
        let r = run(&slopes(&["1/2", "-1/2"]));
        assert!(r.minus_attained && r.plus_attained);
        assert!(!r.is_bc);
        assert_eq!(r.interval, SlopeInterval::LongitudeComplement(s("0")));
    }

    #[test]
    fn two_infinite_slopes_kill_all_fillings() {
        let r = run(&slopes(&["inf", "inf", "1"]));
        assert_eq!(r.interval, SlopeInterval::Empty);
        assert!(r.is_bc);
        assert!(r.y_minus.is_infinite() && r.y_plus.is_infinite());
    }

    #[test]
    fn single_infinite_slope_fills_everything_else() {
        let r = run(&slopes(&["inf", "-7/3"]));
        assert_eq!(
            r.interval,
            SlopeInterval::LongitudeComplement(ExtendedSlope::infinity())
        );
        assert!(r.is_bc);
    }

    #[test]
    fn glued_summand_interval_constraints() {
        // Data (−1/2, 1/3) with a wrapped summand interval [3/5, 1/2]:
        // extrema 0 and −1, arc wrapping through ∞.
        let input = FiberExteriorInput::new(
            vec![s("-1/2"), s("1/3")],
            vec![SlopeInterval::arc(s("3/5"), s("1/2"), true, true).unwrap()],
        );
        let r = run(&input);
        assert_eq!(r.y_minus, s("0"));
        assert_eq!(r.y_plus, s("-1"));
        assert!(r.minus_attained && r.plus_attained && !r.is_bc);
        assert_eq!(
            r.interval,
            SlopeInterval::arc(s("0"), s("-1"), true, true).unwrap()
        );
        assert!(r.interval.contains(&s("inf")));
    }

    #[test]
    fn linear_summand_interval_cuts_to_linear_arc() {
        // A linear summand interval forces the result into linear position.
        let input = FiberExteriorInput::new(
            vec![s("-1/2")],
            vec![SlopeInterval::arc(s("-1/4"), s("1/4"), true, true).unwrap()],
        );
        let r = fiber_exterior_interval(&input, DEFAULT_PERIOD_CAP);
        match r {
            Ok(res) => match res.interval {
                SlopeInterval::Arc { lo, hi, .. } => assert!(lo < hi),
                SlopeInterval::Point(_) | SlopeInterval::Empty => {}
                other => panic!("unexpected kind {other:?}"),
            },
            Err(EngineError::UnclassifiedStructure(_)) => {}
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn period_cap_is_enforced() {
        let input = slopes(&["1/999983", "1/999979"]);
        match fiber_exterior_interval(&input, 1_000_000) {
            Err(EngineError::PeriodOverflow { .. }) => {}
            other => panic!("expected period overflow, got {other:?}"),
        }
    }

    #[test]
    fn longitude_examples() {
        assert_eq!(rational_longitude(&[s("-1/2"), s("2/3")]), s("-1/6"));
        assert_eq!(rational_longitude(&[s("1/3"), s("-1/3")]), s("0"));
        assert!(rational_longitude(&[s("inf"), s("1")]).is_infinite());
    }

    #[test]
    fn malformed_summand_interval_is_rejected() {
        let input = FiberExteriorInput::new(vec![], vec![SlopeInterval::Empty]);
        assert!(matches!(
            fiber_exterior_interval(&input, DEFAULT_PERIOD_CAP),
            Err(EngineError::InvalidInput(_))
        ));
    }
}
