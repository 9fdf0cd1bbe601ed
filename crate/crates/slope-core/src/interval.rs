//! Intervals on the projective circle of slopes.
//!
//! The circle is ordered counterclockwise: increasing through the finite
//! rationals and wrapping through ∞. An [`SlopeInterval::Arc`] from `lo` to
//! `hi` is the set of slopes swept counterclockwise from `lo` to `hi`; when
//! `lo > hi` in the linear order the arc wraps through ∞. Degenerate sets
//! get their own variants, so `Arc` always has distinct endpoints.

use num_bigint::BigInt;

use crate::{lft_apply, ExtendedSlope, IntMatrix2, SlopeError};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SlopeInterval {
    /// The empty set.
    Empty,
    /// A single slope.
    Point(ExtendedSlope),
    /// The circle minus a single slope.
    LongitudeComplement(ExtendedSlope),
    /// The counterclockwise arc from `lo` to `hi` (distinct endpoints),
    /// with each endpoint included iff the corresponding flag is set.
    Arc {
        lo: ExtendedSlope,
        hi: ExtendedSlope,
        lo_closed: bool,
        hi_closed: bool,
    },
    /// The whole circle.
    FullCircle,
}

/// True iff `x` lies strictly inside the counterclockwise arc from `a` to
/// `b` (requires `a != b`; returns false when `x` equals an endpoint).
pub fn ccw_strictly_between(a: &ExtendedSlope, x: &ExtendedSlope, b: &ExtendedSlope) -> bool {
    debug_assert!(a != b);
    if x == a || x == b {
        return false;
    }
    if a < b {
        a < x && x < b
    } else {
        // The arc wraps through ∞.
        x > a || x < b
    }
}

/// An exact rational strictly inside the counterclockwise arc from `u` to
/// `v` (requires `u != v`).
fn ccw_sample_between(u: &ExtendedSlope, v: &ExtendedSlope) -> ExtendedSlope {
    debug_assert!(u != v);
    if u.is_infinite() {
        return v.add_integer(&BigInt::from(-1));
    }
    if v.is_infinite() {
        return u.add_integer(&BigInt::from(1));
    }
    if u < v {
        // Exact midpoint (u+v)/2.
        let sum = u.checked_add(v).expect("finite sum");
        ExtendedSlope::new(sum.numer().clone(), sum.denom() * BigInt::from(2))
            .expect("finite midpoint")
    } else {
        ExtendedSlope::infinity()
    }
}

impl SlopeInterval {
    /// Arc constructor; rejects equal endpoints (use `Point`,
    /// `LongitudeComplement`, or `FullCircle` for the degenerate sets).
    pub fn arc(
        lo: ExtendedSlope,
        hi: ExtendedSlope,
        lo_closed: bool,
        hi_closed: bool,
    ) -> Result<Self, SlopeError> {
        if lo == hi {
            return Err(SlopeError::DegenerateArc(lo.to_string()));
        }
        Ok(Self::Arc {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn closed_arc(lo: ExtendedSlope, hi: ExtendedSlope) -> Result<Self, SlopeError> {
        Self::arc(lo, hi, true, true)
    }

    pub fn open_arc(lo: ExtendedSlope, hi: ExtendedSlope) -> Result<Self, SlopeError> {
        Self::arc(lo, hi, false, false)
    }

    pub fn is_empty_set(&self) -> bool {
        matches!(self, Self::Empty)
    }

    /// Membership test.
    pub fn contains(&self, s: &ExtendedSlope) -> bool {
        match self {
            Self::Empty => false,
            Self::Point(y) => s == y,
            Self::LongitudeComplement(l) => s != l,
            Self::Arc {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => {
                if s == lo {
                    *lo_closed
                } else if s == hi {
                    *hi_closed
                } else {
                    ccw_strictly_between(lo, s, hi)
                }
            }
            Self::FullCircle => true,
        }
    }

    /// Topological interior.
    pub fn interior(&self) -> Self {
        match self {
            Self::Empty | Self::Point(_) => Self::Empty,
            Self::LongitudeComplement(l) => Self::LongitudeComplement(l.clone()),
            Self::Arc { lo, hi, .. } => Self::Arc {
                lo: lo.clone(),
                hi: hi.clone(),
                lo_closed: false,
                hi_closed: false,
            },
            Self::FullCircle => Self::FullCircle,
        }
    }

    /// Topological closure.
    pub fn closure(&self) -> Self {
        match self {
            Self::Empty => Self::Empty,
            Self::Point(y) => Self::Point(y.clone()),
            Self::LongitudeComplement(_) => Self::FullCircle,
            Self::Arc { lo, hi, .. } => Self::Arc {
                lo: lo.clone(),
                hi: hi.clone(),
                lo_closed: true,
                hi_closed: true,
            },
            Self::FullCircle => Self::FullCircle,
        }
    }

    /// Set complement in the circle. An involution on all five kinds:
    /// `Arc{lo,hi,lc,hc} ↦ Arc{hi,lo,¬hc,¬lc}`, `Point ↔ LongitudeComplement`,
    /// `Empty ↔ FullCircle`.
    pub fn complement(&self) -> Self {
        match self {
            Self::Empty => Self::FullCircle,
            Self::Point(y) => Self::LongitudeComplement(y.clone()),
            Self::LongitudeComplement(l) => Self::Point(l.clone()),
            Self::Arc {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => Self::Arc {
                lo: hi.clone(),
                hi: lo.clone(),
                lo_closed: !hi_closed,
                hi_closed: !lo_closed,
            },
            Self::FullCircle => Self::Empty,
        }
    }

    /// Image under a unimodular linear fractional transformation.
    /// Determinant −1 maps reverse orientation, so an arc's endpoints swap
    /// roles (and carry their closure flags with them).
    pub fn map_lft(&self, m: &IntMatrix2) -> Self {
        match self {
            Self::Empty => Self::Empty,
            Self::FullCircle => Self::FullCircle,
            Self::Point(y) => Self::Point(lft_apply(m, y)),
            Self::LongitudeComplement(l) => Self::LongitudeComplement(lft_apply(m, l)),
            Self::Arc {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => {
                let flo = lft_apply(m, lo);
                let fhi = lft_apply(m, hi);
                if m.det() == 1 {
                    Self::Arc {
                        lo: flo,
                        hi: fhi,
                        lo_closed: *lo_closed,
                        hi_closed: *hi_closed,
                    }
                } else {
                    Self::Arc {
                        lo: fhi,
                        hi: flo,
                        lo_closed: *hi_closed,
                        hi_closed: *lo_closed,
                    }
                }
            }
        }
    }

    /// Endpoint values of this interval (boundary of the underlying set).
    fn endpoints(&self) -> Vec<ExtendedSlope> {
        match self {
            Self::Empty | Self::FullCircle => vec![],
            Self::Point(y) => vec![y.clone()],
            Self::LongitudeComplement(l) => vec![l.clone()],
            Self::Arc { lo, hi, .. } => vec![lo.clone(), hi.clone()],
        }
    }
}

/// Decision points for exact set predicates over the given intervals: every
/// endpoint value, plus one sample inside each open gap between cyclically
/// adjacent endpoints. Membership in each interval is constant on each gap
/// (the gaps avoid all endpoints), so these points decide any pointwise
/// predicate over the intervals exactly.
fn decision_points(intervals: &[&SlopeInterval]) -> Vec<ExtendedSlope> {
    let mut pts: Vec<ExtendedSlope> = intervals.iter().flat_map(|i| i.endpoints()).collect();
    pts.sort();
    pts.dedup();
    match pts.len() {
        0 => vec![ExtendedSlope::zero()],
        1 => {
            let x = pts[0].clone();
            let other = if x.is_infinite() {
                ExtendedSlope::zero()
            } else {
                x.add_integer(&BigInt::from(1))
            };
            vec![x, other]
        }
        n => {
            let mut samples = Vec::with_capacity(2 * n);
            for i in 0..n {
                let u = &pts[i];
                let v = &pts[(i + 1) % n];
                samples.push(ccw_sample_between(u, v));
            }
            pts.extend(samples);
            pts
        }
    }
}

/// True iff `i1 ∪ i2` is the whole circle.
pub fn covers_circle(i1: &SlopeInterval, i2: &SlopeInterval) -> bool {
    decision_points(&[i1, i2])
        .iter()
        .all(|s| i1.contains(s) || i2.contains(s))
}

/// True iff `i1 ∩ i2` is nonempty.
pub fn intersects(i1: &SlopeInterval, i2: &SlopeInterval) -> bool {
    decision_points(&[i1, i2])
        .iter()
        .any(|s| i1.contains(s) && i2.contains(s))
}

/// True iff `i1 ⊆ i2`.
pub fn is_subset(i1: &SlopeInterval, i2: &SlopeInterval) -> bool {
    decision_points(&[i1, i2])
        .iter()
        .all(|s| !i1.contains(s) || i2.contains(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> ExtendedSlope {
        t.parse().unwrap()
    }

    fn arc(lo: &str, hi: &str, lc: bool, hc: bool) -> SlopeInterval {
        SlopeInterval::arc(s(lo), s(hi), lc, hc).unwrap()
    }

    #[test]
    fn arc_rejects_equal_endpoints() {
        assert!(SlopeInterval::arc(s("1/2"), s("1/2"), true, true).is_err());
    }

    #[test]
    fn wrap_arc_membership() {
        // [[0, -1/5]] wraps through ∞: {y >= 0} ∪ {∞} ∪ {y <= -1/5}.
        let i = arc("0", "-1/5", true, true);
        for inside in ["0", "1", "1000", "inf", "-1/5", "-1", "-7/2"] {
            assert!(i.contains(&s(inside)), "{inside} should be inside");
        }
        for outside in ["-1/10", "-1/6", "-19/100"] {
            assert!(!i.contains(&s(outside)), "{outside} should be outside");
        }
    }

    #[test]
    fn linear_arc_membership() {
        let i = arc("41", "46", true, false);
        assert!(i.contains(&s("41")));
        assert!(i.contains(&s("45")));
        assert!(!i.contains(&s("46")));
        assert!(!i.contains(&s("inf")));
        assert!(!i.contains(&s("40")));
    }

    #[test]
    fn complement_matches_closure_flags() {
        let i = arc("41", "46", true, false);
        assert_eq!(i.complement(), arc("46", "41", true, false));
        assert_eq!(i.complement().complement(), i);
        assert_eq!(
            SlopeInterval::Point(s("3")).complement(),
            SlopeInterval::LongitudeComplement(s("3"))
        );
        assert_eq!(SlopeInterval::Empty.complement(), SlopeInterval::FullCircle);
    }

    #[test]
    fn interior_and_closure() {
        let i = arc("0", "-1/5", true, false);
        assert_eq!(i.interior(), arc("0", "-1/5", false, false));
        assert_eq!(i.closure(), arc("0", "-1/5", true, true));
        assert_eq!(
            SlopeInterval::Point(s("2")).interior(),
            SlopeInterval::Empty
        );
        assert_eq!(
            SlopeInterval::LongitudeComplement(s("2")).interior(),
            SlopeInterval::LongitudeComplement(s("2"))
        );
        assert_eq!(
            SlopeInterval::LongitudeComplement(s("2")).closure(),
            SlopeInterval::FullCircle
        );
    }

    #[test]
    fn orientation_reversing_map_swaps_arc_endpoints() {
        // [[0, -1/5]] under y ↦ 6 + 1/y (det −1) becomes [[1, ∞]] = [1, +∞].
        let psi = IntMatrix2::new(6, 1, 1, 0).unwrap();
        let i = arc("0", "-1/5", true, true);
        assert_eq!(i.map_lft(&psi), arc("1", "inf", true, true));
        // And the image contains exactly the expected integer slopes.
        let img = i.map_lft(&psi);
        assert!(img.contains(&s("1")));
        assert!(img.contains(&s("7")));
        assert!(img.contains(&s("inf")));
        assert!(!img.contains(&s("0")));
        assert!(!img.contains(&s("-5")));
    }

    #[test]
    fn covers_and_complement_are_dual() {
        let cases = [
            SlopeInterval::Empty,
            SlopeInterval::FullCircle,
            SlopeInterval::Point(s("1/2")),
            SlopeInterval::LongitudeComplement(s("-3")),
            arc("0", "-1/5", true, true),
            arc("3/5", "1/2", false, true),
            arc("-2", "7", false, false),
        ];
        for i in &cases {
            assert!(covers_circle(i, &i.complement()), "{i:?}");
            assert!(!intersects(i, &i.complement()), "{i:?}");
            assert!(is_subset(i, &i.closure()), "{i:?}");
            assert!(is_subset(&i.interior(), i), "{i:?}");
        }
    }

    #[test]
    fn covers_detects_gaps() {
        // Two closed arcs covering all but one open gap.
        let a = arc("0", "10", true, true);
        let b = arc("10", "-1", true, true); // wraps: [10, ∞] ∪ [−∞, −1]
        assert!(!covers_circle(&a, &b)); // gap (−1, 0)
        let c = arc("10", "0", true, true);
        assert!(covers_circle(&a, &c));
        // Open endpoints meeting at a point leave that point uncovered.
        let d = arc("0", "10", true, false);
        let e = arc("10", "0", false, true);
        assert!(!covers_circle(&d, &e));
    }

    #[test]
    fn subset_handles_wrap_escapes() {
        // Both endpoints of `a` lie inside `b`, but `a` runs the other way
        // around the circle.
        let a = arc("5", "1", true, true); // wraps through ∞
        let b = arc("0", "10", true, true);
        assert!(b.contains(&s("5")) && b.contains(&s("1")));
        assert!(!is_subset(&a, &b));
        assert!(is_subset(&arc("1", "5", true, true), &b));
    }
}
