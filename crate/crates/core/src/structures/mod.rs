//! Fuzzy inner-product and fuzzy-norm triples.
//!
//! A fuzzy inner product is a map `(α, x, y) ↦ ℂ` tied to one or two classical
//! base inner products by a modulus condition: its magnitude must lie in the
//! ordered interval `[A_α|⟨x,y⟩'|, B_α|⟨x,y⟩''|]_o`. Nothing else about the
//! value is constrained, so the realizations built here are base inner
//! products rescaled into that band (selected by a [`MixingFunction`]) and
//! rotated by a free phase.
//!
//! The membership function of a triple is carried as a [`Membership`]
//! descriptor and evaluated per pair; [`FuzzyInnerProduct::defining_predicate`]
//! evaluates both sides of the defining biconditional.

mod example;
mod inner_product;
mod mixing;
mod norm;
mod profile;

pub use example::{
    example_band, example_magnitude_target, example_simplified_profile, paper_example_norm,
    ExampleVariant,
};
pub use inner_product::{FuzzyInnerProduct, Realization};
pub use mixing::{Mixing, MixingFunction, Phase};
pub use norm::{FuzzyNorm, NormSource};
pub use profile::{AlphaGrid, AlphaProfile, ProfileForm, ProfileShape};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classical::SpaceError;
use crate::fuzzy_number::{FuzzyError, FuzzyNumber, FuzzyNumberDescriptor};
use crate::interval::{IntervalError, OrderedInterval};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Level(#[from] FuzzyError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error("alpha grid must not be empty")]
    EmptyGrid,
    #[error("alpha grid level {0} is outside (0,1]")]
    GridOutOfRange(f64),
    #[error("alpha grid must be strictly increasing")]
    GridNotSorted,
    #[error("invalid profile at alpha = {alpha}: lower = {lower}, upper = {upper} ({reason})")]
    InvalidProfile {
        alpha: f64,
        lower: f64,
        upper: f64,
        reason: &'static str,
    },
    #[error("invalid profile table: {0}")]
    InvalidTable(&'static str),
    #[error("invalid mixing function: {0}")]
    InvalidMixing(String),
    #[error("operation requires the simplified form (one base, ordered profile)")]
    NotSimplified,
    #[error("base inner products act on different dimensions ({0} vs {1})")]
    BaseDimensionMismatch(usize, usize),
    #[error("the worked example is defined on real 2-vectors, got a {field:?} vector of dimension {dim}")]
    ExampleDomain { dim: usize, field: crate::classical::Field },
    #[error("out-of-band factor must be finite and positive, got {0}")]
    InvalidFactor(f64),
}

/// How a triple's membership function is realized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Membership {
    /// Per-pair indicator on the triple's defining ordered interval.
    BandIndicator,
    /// One fuzzy number shared by every pair.
    Fixed { number: FuzzyNumberDescriptor },
}

impl Membership {
    /// The membership a triple asserts at every level.
    pub fn full() -> Self {
        Membership::Fixed {
            number: FuzzyNumberDescriptor::Constant { value: 1.0 },
        }
    }

    pub(crate) fn realize(&self, band: OrderedInterval) -> Result<FuzzyNumber, FuzzyError> {
        match self {
            Membership::BandIndicator => Ok(FuzzyNumber::indicator_on(band)),
            Membership::Fixed { number } => FuzzyNumber::from_descriptor(number),
        }
    }
}

/// Both sides of the defining biconditional
/// `K(|v|) >= α  ⇔  |v| ∈ band` for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredicateOutcome {
    pub magnitude: f64,
    pub band: OrderedInterval,
    pub grade: f64,
    pub in_band: bool,
    pub holds: bool,
}

impl PredicateOutcome {
    pub(crate) fn evaluate(
        alpha: f64,
        magnitude: f64,
        band: OrderedInterval,
        membership: &Membership,
    ) -> Result<Self, StructureError> {
        let grade = membership.realize(band)?.membership(magnitude);
        let in_band = band.contains(magnitude);
        Ok(PredicateOutcome {
            magnitude,
            band,
            grade,
            in_band,
            holds: (grade >= alpha) == in_band,
        })
    }
}
