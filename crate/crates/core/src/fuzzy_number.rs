//! Fuzzy numbers `u: ℝ → [0,1]` and their closed α-cuts
//! `[u]_α = {x : u(x) >= α}`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::{CanonicalInterval, OrderedInterval};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("alpha level must lie in (0,1], got {0}")]
    InvalidLevel(f64),
    #[error("membership value {0} is outside [0,1]")]
    InvalidMembership(f64),
    #[error("piecewise-linear breakpoints must be finite with strictly increasing abscissae")]
    InvalidBreakpoints,
    #[error("piecewise-linear membership must rise then fall so that every cut is an interval")]
    NotQuasiConcave,
    #[error("exact alpha-cuts are not available for custom membership functions")]
    UnsupportedCut,
}

/// Checks `0 < alpha <= 1`.
pub fn validate_level(alpha: f64) -> Result<f64, FuzzyError> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(alpha)
    } else {
        Err(FuzzyError::InvalidLevel(alpha))
    }
}

type MembershipFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A membership function. Only the first three families support exact
/// α-cut extraction.
#[derive(Clone)]
pub enum FuzzyNumber {
    /// `1` on the canonical form of the interval, `0` elsewhere.
    Indicator(OrderedInterval),
    /// Linear interpolation between breakpoints `(x, u(x))`, `0` outside them.
    PiecewiseLinear(Vec<(f64, f64)>),
    Constant(f64),
    /// Arbitrary callable; values are clamped into `[0,1]` on evaluation.
    Custom(MembershipFn),
}

impl fmt::Debug for FuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzyNumber::Indicator(i) => f.debug_tuple("Indicator").field(i).finish(),
            FuzzyNumber::PiecewiseLinear(p) => f.debug_tuple("PiecewiseLinear").field(p).finish(),
            FuzzyNumber::Constant(c) => f.debug_tuple("Constant").field(c).finish(),
            FuzzyNumber::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Serializable description of the first-class families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FuzzyNumberDescriptor {
    Indicator { interval: OrderedInterval },
    PiecewiseLinear { breakpoints: Vec<[f64; 2]> },
    Constant { value: f64 },
}

impl FuzzyNumber {
    pub fn indicator_on(interval: OrderedInterval) -> Self {
        FuzzyNumber::Indicator(interval)
    }

    pub fn constant(value: f64) -> Result<Self, FuzzyError> {
        if (0.0..=1.0).contains(&value) {
            Ok(FuzzyNumber::Constant(value))
        } else {
            Err(FuzzyError::InvalidMembership(value))
        }
    }

    /// Piecewise-linear membership through `breakpoints`. The membership
    /// values must be non-decreasing up to their peak and non-increasing
    /// after it.
    pub fn piecewise_linear(breakpoints: Vec<(f64, f64)>) -> Result<Self, FuzzyError> {
        if breakpoints.is_empty()
            || breakpoints.iter().any(|(x, _)| !x.is_finite())
            || breakpoints.windows(2).any(|w| w[0].0 >= w[1].0)
        {
            return Err(FuzzyError::InvalidBreakpoints);
        }
        if let Some(&(_, m)) = breakpoints.iter().find(|(_, m)| !(0.0..=1.0).contains(m)) {
            return Err(FuzzyError::InvalidMembership(m));
        }
        let mut falling = false;
        for w in breakpoints.windows(2) {
            if w[1].1 < w[0].1 {
                falling = true;
            } else if falling && w[1].1 > w[0].1 {
                return Err(FuzzyError::NotQuasiConcave);
            }
        }
        Ok(FuzzyNumber::PiecewiseLinear(breakpoints))
    }

    /// Triangle with support `[left, right]` and peak 1 at `peak`.
    pub fn triangular(left: f64, peak: f64, right: f64) -> Result<Self, FuzzyError> {
        Self::piecewise_linear(vec![(left, 0.0), (peak, 1.0), (right, 0.0)])
    }

    pub fn custom(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        FuzzyNumber::Custom(Arc::new(f))
    }

    pub fn from_descriptor(d: &FuzzyNumberDescriptor) -> Result<Self, FuzzyError> {
        match d {
            FuzzyNumberDescriptor::Indicator { interval } => Ok(Self::indicator_on(*interval)),
            FuzzyNumberDescriptor::PiecewiseLinear { breakpoints } => {
                Self::piecewise_linear(breakpoints.iter().map(|p| (p[0], p[1])).collect())
            }
            FuzzyNumberDescriptor::Constant { value } => Self::constant(*value),
        }
    }

    pub fn descriptor(&self) -> Option<FuzzyNumberDescriptor> {
        match self {
            FuzzyNumber::Indicator(interval) => Some(FuzzyNumberDescriptor::Indicator {
                interval: *interval,
            }),
            FuzzyNumber::PiecewiseLinear(p) => Some(FuzzyNumberDescriptor::PiecewiseLinear {
                breakpoints: p.iter().map(|&(x, m)| [x, m]).collect(),
            }),
            FuzzyNumber::Constant(value) => Some(FuzzyNumberDescriptor::Constant { value: *value }),
            FuzzyNumber::Custom(_) => None,
        }
    }

    pub fn membership(&self, x: f64) -> f64 {
        match self {
            FuzzyNumber::Indicator(interval) => {
                if interval.contains(x) {
                    1.0
                } else {
                    0.0
                }
            }
            FuzzyNumber::PiecewiseLinear(points) => interpolate(points, x),
            FuzzyNumber::Constant(c) => *c,
            FuzzyNumber::Custom(f) => {
                let v = f(x);
                if v.is_nan() {
                    0.0
                } else {
                    v.clamp(0.0, 1.0)
                }
            }
        }
    }

    pub fn alpha_cut(&self, alpha: f64) -> Result<AlphaCut, FuzzyError> {
        let level = validate_level(alpha)?;
        let cut = match self {
            FuzzyNumber::Indicator(interval) => Cut::Bounded(interval.canonical()),
            FuzzyNumber::Constant(c) => {
                if *c >= level {
                    Cut::Unbounded
                } else {
                    Cut::Empty
                }
            }
            FuzzyNumber::PiecewiseLinear(points) => piecewise_cut(points, level),
            FuzzyNumber::Custom(_) => return Err(FuzzyError::UnsupportedCut),
        };
        Ok(AlphaCut { level, cut })
    }
}

fn interpolate(points: &[(f64, f64)], x: f64) -> f64 {
    let (first, last) = (points[0], points[points.len() - 1]);
    if x < first.0 || x > last.0 {
        return 0.0;
    }
    if points.len() == 1 {
        return first.1;
    }
    for w in points.windows(2) {
        let ((x0, m0), (x1, m1)) = (w[0], w[1]);
        if x <= x1 {
            if x == x1 {
                return m1;
            }
            return m0 + (m1 - m0) * (x - x0) / (x1 - x0);
        }
    }
    last.1
}

fn piecewise_cut(points: &[(f64, f64)], level: f64) -> Cut {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &(x, m) in points {
        if m >= level {
            lo = lo.min(x);
            hi = hi.max(x);
        }
    }
    for w in points.windows(2) {
        let ((x0, m0), (x1, m1)) = (w[0], w[1]);
        // crossing strictly inside the segment
        if (m0 < level) != (m1 < level) {
            let s = x0 + (level - m0) * (x1 - x0) / (m1 - m0);
            lo = lo.min(s);
            hi = hi.max(s);
        }
    }
    if lo > hi {
        Cut::Empty
    } else {
        Cut::Bounded(CanonicalInterval::new(lo, hi).expect("finite sorted cut endpoints"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cut {
    Empty,
    Bounded(CanonicalInterval),
    /// The whole real line (a constant membership at or above the level).
    Unbounded,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaCut {
    pub level: f64,
    pub cut: Cut,
}

impl AlphaCut {
    pub fn contains(&self, x: f64) -> bool {
        match self.cut {
            Cut::Empty => false,
            Cut::Bounded(c) => c.contains(x),
            Cut::Unbounded => true,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cut == Cut::Empty
    }

    pub fn is_subset_of(&self, other: &AlphaCut) -> bool {
        match (self.cut, other.cut) {
            (Cut::Empty, _) => true,
            (_, Cut::Unbounded) => true,
            (Cut::Unbounded, _) => false,
            (Cut::Bounded(_), Cut::Empty) => false,
            (Cut::Bounded(a), Cut::Bounded(b)) => a.is_subset_of(&b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn oi(a: f64, b: f64) -> OrderedInterval {
        OrderedInterval::new(a, b).unwrap()
    }

    #[test]
    fn indicator_membership() {
        assert_eq!(FuzzyNumber::indicator_on(oi(2.0, 3.0)).membership(2.5), 1.0);
        assert_eq!(FuzzyNumber::indicator_on(oi(3.0, 2.0)).membership(2.5), 1.0);
        assert_eq!(FuzzyNumber::indicator_on(oi(2.0, 3.0)).membership(4.0), 0.0);
    }

    #[test]
    fn cut_examples() {
        let ind = FuzzyNumber::indicator_on(oi(2.0, 3.0)).alpha_cut(0.5).unwrap();
        assert_eq!(ind.cut, Cut::Bounded(CanonicalInterval::new(2.0, 3.0).unwrap()));

        let zero = FuzzyNumber::constant(0.0).unwrap().alpha_cut(0.5).unwrap();
        assert!(zero.is_empty());
        let one = FuzzyNumber::constant(1.0).unwrap().alpha_cut(0.5).unwrap();
        assert_eq!(one.cut, Cut::Unbounded);

        let tri = FuzzyNumber::triangular(0.0, 1.0, 2.0).unwrap();
        let c = tri.alpha_cut(0.5).unwrap();
        assert_eq!(c.cut, Cut::Bounded(CanonicalInterval::new(0.5, 1.5).unwrap()));
        let top = tri.alpha_cut(1.0).unwrap();
        assert_eq!(top.cut, Cut::Bounded(CanonicalInterval::new(1.0, 1.0).unwrap()));
    }

    #[test]
    fn cut_rejects_bad_levels() {
        let u = FuzzyNumber::constant(1.0).unwrap();
        assert_eq!(u.alpha_cut(0.0), Err(FuzzyError::InvalidLevel(0.0)));
        assert!(u.alpha_cut(1.5).is_err());
        assert!(u.alpha_cut(f64::NAN).is_err());
        assert_eq!(
            FuzzyNumber::custom(|_| 1.0).alpha_cut(0.5),
            Err(FuzzyError::UnsupportedCut)
        );
    }

    #[test]
    fn construction_validates() {
        assert!(FuzzyNumber::constant(1.5).is_err());
        assert!(FuzzyNumber::piecewise_linear(vec![]).is_err());
        assert!(FuzzyNumber::piecewise_linear(vec![(1.0, 0.0), (0.0, 1.0)]).is_err());
        assert_eq!(
            FuzzyNumber::piecewise_linear(vec![(0.0, 0.0), (1.0, 1.2)]).unwrap_err(),
            FuzzyError::InvalidMembership(1.2)
        );
        assert_eq!(
            FuzzyNumber::piecewise_linear(vec![(0.0, 1.0), (1.0, 0.0), (2.0, 1.0)]).unwrap_err(),
            FuzzyError::NotQuasiConcave
        );
    }

    #[test]
    fn trapezoid_and_plateau() {
        let trap =
            FuzzyNumber::piecewise_linear(vec![(0.0, 0.0), (1.0, 1.0), (3.0, 1.0), (4.0, 0.0)]).unwrap();
        assert_eq!(trap.membership(2.0), 1.0);
        assert_eq!(trap.membership(0.25), 0.25);
        assert_eq!(trap.membership(-1.0), 0.0);
        let c = trap.alpha_cut(0.25).unwrap();
        assert_eq!(c.cut, Cut::Bounded(CanonicalInterval::new(0.25, 3.75).unwrap()));
    }

    #[test]
    fn custom_membership_is_clamped() {
        let u = FuzzyNumber::custom(|x| x * 2.0);
        assert_eq!(u.membership(0.25), 0.5);
        assert_eq!(u.membership(3.0), 1.0);
        assert_eq!(u.membership(-3.0), 0.0);
        assert!(u.descriptor().is_none());
    }

    #[test]
    fn descriptor_round_trip() {
        let tri = FuzzyNumber::triangular(0.0, 1.0, 2.0).unwrap();
        let d = tri.descriptor().unwrap();
        let json = serde_json::to_string(&d).unwrap();
        let back: FuzzyNumberDescriptor = serde_json::from_str(&json).unwrap();
        let u = FuzzyNumber::from_descriptor(&back).unwrap();
        assert_eq!(u.membership(0.5), 0.5);
    }

    fn family() -> impl Strategy<Value = FuzzyNumber> {
        prop_oneof![
            (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(a, b)| FuzzyNumber::indicator_on(oi(a, b))),
            (0.0f64..=1.0).prop_map(|c| FuzzyNumber::constant(c).unwrap()),
            (-10.0f64..0.0, 0.01f64..5.0, 0.01f64..5.0)
                .prop_map(|(l, w1, w2)| FuzzyNumber::triangular(l, l + w1, l + w1 + w2).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn cuts_are_nested(u in family(), a in 0.001f64..=1.0, b in 0.001f64..=1.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let outer = u.alpha_cut(lo).unwrap();
            let inner = u.alpha_cut(hi).unwrap();
            prop_assert!(inner.is_subset_of(&outer));
        }

        #[test]
        fn indicator_threshold_matches_containment(
            a in -10.0f64..10.0, b in -10.0f64..10.0, x in -12.0f64..12.0, alpha in 0.001f64..=1.0
        ) {
            let i = oi(a, b);
            let u = FuzzyNumber::indicator_on(i);
            prop_assert_eq!(u.membership(x) >= alpha, i.contains(x));
            prop_assert_eq!(u.alpha_cut(alpha).unwrap().contains(x), i.contains(x));
        }

        #[test]
        fn triangle_cut_agrees_with_membership(
            l in -5.0f64..0.0, w1 in 0.1f64..3.0, w2 in 0.1f64..3.0, alpha in 0.01f64..=1.0, x in -6.0f64..7.0
        ) {
            let u = FuzzyNumber::triangular(l, l + w1, l + w1 + w2).unwrap();
            let cut = u.alpha_cut(alpha).unwrap();
            // away from the cut boundary the two views must agree
            let m = u.membership(x);
            if (m - alpha).abs() > 1e-9 {
                prop_assert_eq!(cut.contains(x), m >= alpha);
            }
        }
    }
}
