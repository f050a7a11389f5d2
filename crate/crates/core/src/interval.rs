//! Ordered intervals `[a,b]_o`.
//!
//! An ordered interval keeps its two endpoint labels exactly as given, with no
//! requirement that `a <= b`. As a set it is `[min{a,b}, max{a,b}]`, but every
//! arithmetic operation acts on the labels, so `(X ⊕ Y) ⊖ Y` gives back `X`
//! label for label.
//!
//! Two equality notions are used throughout the crate:
//!
//! * representational: `PartialEq` on [`OrderedInterval`] compares labels,
//!   so `[1,-6]_o != [-6,1]_o`;
//! * extensional: [`OrderedInterval::same_set`] compares canonical forms.
//!
//! The product `⊙` is label-wise (`[a,b]_o ⊙ [c,d]_o = [ac,bd]_o`). It is not
//! the set image of pointwise multiplication: `[-1,2]_o ⊙ [-1,2]_o` is
//! `[1,4]_o`, which does not contain `0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntervalError {
    #[error("interval endpoints must be finite, got [{0},{1}]")]
    NonFinite(f64, f64),
    #[error("scalar factor must be finite, got {0}")]
    NonFiniteScalar(f64),
    #[error("`{op}` overflowed to a non-finite endpoint")]
    Overflow { op: &'static str },
    #[error("canonical interval requires lo <= hi, got [{0},{1}]")]
    Unordered(f64, f64),
    #[error("cannot parse ordered interval from {0:?}")]
    Parse(String),
}

/// An interval with sorted endpoints, `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalInterval {
    lo: f64,
    hi: f64,
}

impl CanonicalInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, IntervalError> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(IntervalError::NonFinite(lo, hi));
        }
        if lo > hi {
            return Err(IntervalError::Unordered(lo, hi));
        }
        Ok(CanonicalInterval { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_subset_of(&self, other: &CanonicalInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

impl fmt::Display for CanonicalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl From<CanonicalInterval> for OrderedInterval {
    fn from(c: CanonicalInterval) -> Self {
        OrderedInterval {
            first: c.lo,
            second: c.hi,
        }
    }
}

/// An endpoint-labelled interval `[a,b]_o`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderedInterval {
    first: f64,
    second: f64,
}

impl OrderedInterval {
    pub const ZERO: OrderedInterval = OrderedInterval {
        first: 0.0,
        second: 0.0,
    };

    pub const ONE: OrderedInterval = OrderedInterval {
        first: 1.0,
        second: 1.0,
    };

    /// Builds `[a,b]_o`, keeping the labels in the given order.
    pub fn new(a: f64, b: f64) -> Result<Self, IntervalError> {
        if !a.is_finite() || !b.is_finite() {
            return Err(IntervalError::NonFinite(a, b));
        }
        Ok(OrderedInterval {
            first: a,
            second: b,
        })
    }

    /// The degenerate interval `ã_o = [a,a]_o`.
    pub fn degenerate(a: f64) -> Result<Self, IntervalError> {
        Self::new(a, a)
    }

    /// First endpoint label `a` of `[a,b]_o`.
    pub fn first(&self) -> f64 {
        self.first
    }

    /// Second endpoint label `b` of `[a,b]_o`.
    pub fn second(&self) -> f64 {
        self.second
    }

    pub fn labels(&self) -> (f64, f64) {
        (self.first, self.second)
    }

    pub fn is_degenerate(&self) -> bool {
        self.first == self.second
    }

    /// Whether the labels already satisfy `a <= b`.
    pub fn is_ordered(&self) -> bool {
        self.first <= self.second
    }

    pub fn min(&self) -> f64 {
        self.first.min(self.second)
    }

    pub fn max(&self) -> f64 {
        self.first.max(self.second)
    }

    pub fn canonical(&self) -> CanonicalInterval {
        CanonicalInterval {
            lo: self.min(),
            hi: self.max(),
        }
    }

    /// `[a,b]_o ⊕ [c,d]_o = [a+c, b+d]_o`
    pub fn checked_add(self, rhs: OrderedInterval) -> Result<Self, IntervalError> {
        Self::finite_result("add", self.first + rhs.first, self.second + rhs.second)
    }

    /// `[a,b]_o ⊖ [c,d]_o = [a-c, b-d]_o`
    pub fn checked_sub(self, rhs: OrderedInterval) -> Result<Self, IntervalError> {
        Self::finite_result("sub", self.first - rhs.first, self.second - rhs.second)
    }

    /// `[a,b]_o ⊙ [c,d]_o = [ac, bd]_o`, label-wise.
    pub fn checked_mul(self, rhs: OrderedInterval) -> Result<Self, IntervalError> {
        Self::finite_result("mul", self.first * rhs.first, self.second * rhs.second)
    }

    /// `k[a,b]_o = [ka, kb]_o`; label order is kept for negative `k`.
    pub fn checked_scale(self, k: f64) -> Result<Self, IntervalError> {
        if !k.is_finite() {
            return Err(IntervalError::NonFiniteScalar(k));
        }
        Self::finite_result("scale", k * self.first, k * self.second)
    }

    /// `|[a,b]_o| = [|a|, |b|]_o`, label-wise.
    pub fn abs(self) -> Self {
        OrderedInterval {
            first: self.first.abs(),
            second: self.second.abs(),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.min() <= x && x <= self.max()
    }

    /// `[a,b]_o ⊆ [c,d]_o` iff `min{c,d} <= min{a,b}` and `max{a,b} <= max{c,d}`.
    pub fn is_subset_of(&self, other: &OrderedInterval) -> bool {
        other.min() <= self.min() && self.max() <= other.max()
    }

    /// The partial order `[a,b]_o ⪰ [c,d]_o`: both the minimum and the maximum
    /// of `self` dominate those of `other`.
    pub fn geq(&self, other: &OrderedInterval) -> bool {
        self.min() >= other.min() && self.max() >= other.max()
    }

    /// Extensional equality: both intervals denote the same set.
    pub fn same_set(&self, other: &OrderedInterval) -> bool {
        self.canonical() == other.canonical()
    }

    fn finite_result(op: &'static str, a: f64, b: f64) -> Result<Self, IntervalError> {
        if a.is_finite() && b.is_finite() {
            Ok(OrderedInterval {
                first: a,
                second: b,
            })
        } else {
            Err(IntervalError::Overflow { op })
        }
    }
}

impl fmt::Display for OrderedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_o", self.first, self.second)
    }
}

/// Parses `[a,b]_o` or `[a,b]`, with optional whitespace.
impl FromStr for OrderedInterval {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || IntervalError::Parse(s.to_string());
        let body = s.trim();
        let body = body.strip_suffix("_o").unwrap_or(body).trim_end();
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(err)?;
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        let a: f64 = a.trim().parse().map_err(|_| err())?;
        let b: f64 = b.trim().parse().map_err(|_| err())?;
        OrderedInterval::new(a, b)
    }
}
