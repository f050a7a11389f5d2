use num_complex::Complex64;
use serde::Serialize;

use super::example::{paper_example_norm, ExampleVariant};
use super::{AlphaProfile, FuzzyInnerProduct, Membership, PredicateOutcome, StructureError};
use crate::classical::{ClassicalNorm, Vector};
use crate::fuzzy_number::validate_level;
use crate::interval::OrderedInterval;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormSource {
    /// `‖x‖_α = √⟨x,x⟩_α` (principal branch).
    Derived(Box<FuzzyInnerProduct>),
    /// The closed-form norm on ℝ² with magnitude `3α²‖x‖₂ + 2(1-α²)‖x‖₃`.
    Example { variant: ExampleVariant },
}

/// A fuzzy-norm triple `(‖·‖_α, ‖·‖', ‖·‖'')` with constants `(C_α, D_α)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzyNorm {
    source: NormSource,
    base1: ClassicalNorm,
    base2: ClassicalNorm,
    profile: AlphaProfile,
    membership: Membership,
}

impl FuzzyNorm {
    pub(crate) fn from_parts(
        source: NormSource,
        base1: ClassicalNorm,
        base2: ClassicalNorm,
        profile: AlphaProfile,
        membership: Membership,
    ) -> Self {
        FuzzyNorm {
            source,
            base1,
            base2,
            profile,
            membership,
        }
    }

    pub fn source(&self) -> &NormSource {
        &self.source
    }

    pub fn base1(&self) -> &ClassicalNorm {
        &self.base1
    }

    pub fn base2(&self) -> &ClassicalNorm {
        &self.base2
    }

    pub fn profile(&self) -> &AlphaProfile {
        &self.profile
    }

    pub fn membership(&self) -> &Membership {
        &self.membership
    }

    pub fn is_simplified(&self) -> bool {
        self.base1 == self.base2 && self.profile.is_ordered()
    }

    pub fn value(&self, alpha: f64, x: &Vector) -> Result<Complex64, StructureError> {
        validate_level(alpha)?;
        match &self.source {
            NormSource::Derived(fip) => fip.norm_value(alpha, x),
            NormSource::Example { variant } => paper_example_norm(alpha, x, *variant),
        }
    }

    /// `[C_α‖x‖', D_α‖x‖'']_o`
    pub fn band(&self, alpha: f64, x: &Vector) -> Result<OrderedInterval, StructureError> {
        validate_level(alpha)?;
        let (c, d) = self.profile.bounds(alpha);
        Ok(OrderedInterval::new(c * self.base1.eval(x)?, d * self.base2.eval(x)?)?)
    }

    pub fn defining_predicate(&self, alpha: f64, x: &Vector) -> Result<PredicateOutcome, StructureError> {
        let magnitude = self.value(alpha, x)?.norm();
        let band = self.band(alpha, x)?;
        PredicateOutcome::evaluate(alpha, magnitude, band, &self.membership)
    }
}
