use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classical::Vector;
use crate::structures::MixingFunction;

/// Identifier of one checked statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// `min(labels) <= |⟨x,y⟩_α| <= max(labels)` of the defining interval.
    BandContainment,
    DefiningPredicate,
    Orthogonality,
    NormBounds,
    CauchySchwarz,
    Parallelogram,
    Polarization,
    /// The classical `‖x+y‖² <= 4|⟨x,y⟩| + ‖x-y‖²` on the base.
    PolarizationStep,
    Bessel,
    /// Zero-product and quasi-linearity items `1..=12`.
    Quasi(u8),
    /// Items `3..=12` with the uniform constant `M`.
    GlobalQuasi(u8),
    NormDefiniteness,
    NormTriangle,
    NormHomogeneity,
    GlobalNormTriangle,
    GlobalNormHomogeneity,
    CrossAlpha,
    CrossAlphaPair,
    CrossAlphaNorm,
    CrossAlphaNormPair,
    ExampleContainment,
    ExampleNormDefiniteness,
    ExampleNormTriangle,
    ExampleNormHomogeneity,
    ExampleGlobalNormTriangle,
    ExampleGlobalNormHomogeneity,
    ExampleCrossAlpha,
}

const SIMPLE: &[(CheckId, &str)] = &[
    (CheckId::BandContainment, "band_containment"),
    (CheckId::DefiningPredicate, "defining_predicate"),
    (CheckId::Orthogonality, "orthogonality"),
    (CheckId::NormBounds, "norm_bounds"),
    (CheckId::CauchySchwarz, "cauchy_schwarz"),
    (CheckId::Parallelogram, "parallelogram"),
    (CheckId::Polarization, "polarization"),
    (CheckId::PolarizationStep, "polarization_step"),
    (CheckId::Bessel, "bessel"),
    (CheckId::NormDefiniteness, "norm_definiteness"),
    (CheckId::NormTriangle, "norm_triangle"),
    (CheckId::NormHomogeneity, "norm_homogeneity"),
    (CheckId::GlobalNormTriangle, "global_norm_triangle"),
    (CheckId::GlobalNormHomogeneity, "global_norm_homogeneity"),
    (CheckId::CrossAlpha, "cross_alpha"),
    (CheckId::CrossAlphaPair, "cross_alpha_pair"),
    (CheckId::CrossAlphaNorm, "cross_alpha_norm"),
    (CheckId::CrossAlphaNormPair, "cross_alpha_norm_pair"),
    (CheckId::ExampleContainment, "example_containment"),
    (CheckId::ExampleNormDefiniteness, "example_norm_definiteness"),
    (CheckId::ExampleNormTriangle, "example_norm_triangle"),
    (CheckId::ExampleNormHomogeneity, "example_norm_homogeneity"),
    (CheckId::ExampleGlobalNormTriangle, "example_global_norm_triangle"),
    (CheckId::ExampleGlobalNormHomogeneity, "example_global_norm_homogeneity"),
    (CheckId::ExampleCrossAlpha, "example_cross_alpha"),
];

impl CheckId {
    /// Every check, in report order.
    pub fn all() -> Vec<CheckId> {
        let mut ids: Vec<CheckId> = SIMPLE.iter().map(|(id, _)| *id).collect();
        ids.extend((1..=12).map(CheckId::Quasi));
        ids.extend((3..=12).map(CheckId::GlobalQuasi));
        ids.sort();
        ids
    }

    /// Checks that only apply to real trials.
    pub fn real_only(self) -> bool {
        matches!(self, CheckId::Polarization) || self.is_example()
    }

    /// Checks on the closed-form ℝ² norm; only real 2-dimensional trials.
    pub fn is_example(self) -> bool {
        matches!(
            self,
            CheckId::ExampleContainment
                | CheckId::ExampleNormDefiniteness
                | CheckId::ExampleNormTriangle
                | CheckId::ExampleNormHomogeneity
                | CheckId::ExampleGlobalNormTriangle
                | CheckId::ExampleGlobalNormHomogeneity
                | CheckId::ExampleCrossAlpha
        )
    }

    pub fn name(self) -> String {
        match self {
            CheckId::Quasi(i) => format!("quasi_{i}"),
            CheckId::GlobalQuasi(i) => format!("global_quasi_{i}"),
            other => SIMPLE
                .iter()
                .find(|(id, _)| *id == other)
                .map(|(_, n)| (*n).to_string())
                .unwrap_or_default(),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown check id `{}`", self.0)
    }
}

impl std::error::Error for UnknownCheck {}

impl FromStr for CheckId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((_, id)) = SIMPLE.iter().map(|(id, n)| (*n, *id)).find(|(n, _)| *n == s) {
            return Ok(id);
        }
        let item = |prefix: &str, range: std::ops::RangeInclusive<u8>| {
            s.strip_prefix(prefix)
                .and_then(|d| d.parse::<u8>().ok())
                .filter(|i| range.contains(i) && s == format!("{prefix}{i}"))
        };
        if let Some(i) = item("global_quasi_", 3..=12) {
            return Ok(CheckId::GlobalQuasi(i));
        }
        if let Some(i) = item("quasi_", 1..=12) {
            return Ok(CheckId::Quasi(i));
        }
        Err(UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The instance a record was evaluated on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckInputs {
    pub alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha2: Option<f64>,
    pub x: Vector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Vector>,
    /// `[re, im]`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// `[lower, upper]` constants of the profile at `alpha`.
    pub constants: [f64; 2],
    /// Constants at `alpha2`, of the same profile or of the companion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constants2: Option<[f64; 2]>,
    /// The uniform constant `M` or `L`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mixing: Option<MixingFunction>,
}

impl CheckInputs {
    pub fn new(alpha: f64, x: &Vector, constants: (f64, f64)) -> Self {
        CheckInputs {
            alpha,
            alpha2: None,
            x: x.clone(),
            y: None,
            z: None,
            k: None,
            n: None,
            constants: [constants.0, constants.1],
            constants2: None,
            bound: None,
            mixing: None,
        }
    }

    pub fn y(mut self, y: &Vector) -> Self {
        self.y = Some(y.clone());
        self
    }

    pub fn z(mut self, z: &Vector) -> Self {
        self.z = Some(z.clone());
        self
    }

    pub fn k(mut self, k: Complex64) -> Self {
        self.k = Some([k.re, k.im]);
        self
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn alpha2(mut self, alpha2: f64, constants2: (f64, f64)) -> Self {
        self.alpha2 = Some(alpha2);
        self.constants2 = Some([constants2.0, constants2.1]);
        self
    }

    pub fn bound(mut self, bound: f64) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn mixing(mut self, mixing: &MixingFunction) -> Self {
        self.mixing = Some(*mixing);
        self
    }
}

/// The outcome of evaluating one statement on one instance.
///
/// One-sided records assert `lhs <= rhs`. Two-sided records assert
/// `lower <= lhs <= rhs` and carry the smaller of the two slacks. Boolean
/// records use `lhs = 1` for a violation, `lhs = 0` otherwise, and `rhs = 0`.
/// In every case `pass ⇔ slack >= -tolerance·scale()`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: CheckId,
    pub inputs: CheckInputs,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub pass: bool,
    pub tolerance: f64,
    /// Alternative right-hand side reported alongside, not used for `pass`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant_rhs: Option<f64>,
}

fn scale_of(lower: Option<f64>, lhs: f64, rhs: f64) -> f64 {
    1.0 + lhs.abs().max(rhs.abs()).max(lower.map_or(0.0, f64::abs))
}

impl CheckRecord {
    pub fn one_sided(check_id: CheckId, inputs: CheckInputs, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::finish(check_id, inputs, None, lhs, rhs, rhs - lhs, tolerance)
    }

    pub fn two_sided(
        check_id: CheckId,
        inputs: CheckInputs,
        lower: f64,
        middle: f64,
        upper: f64,
        tolerance: f64,
    ) -> Self {
        let slack = (middle - lower).min(upper - middle);
        Self::finish(check_id, inputs, Some(lower), middle, upper, slack, tolerance)
    }

    pub fn boolean(check_id: CheckId, inputs: CheckInputs, holds: bool, tolerance: f64) -> Self {
        let (lhs, slack) = if holds { (0.0, 0.0) } else { (1.0, -1.0) };
        Self::finish(check_id, inputs, None, lhs, 0.0, slack, tolerance)
    }

    fn finish(
        check_id: CheckId,
        inputs: CheckInputs,
        lower: Option<f64>,
        lhs: f64,
        rhs: f64,
        slack: f64,
        tolerance: f64,
    ) -> Self {
        // NaN slack fails.
        let pass = slack >= -tolerance * scale_of(lower, lhs, rhs);
        CheckRecord {
            check_id,
            inputs,
            lower,
            lhs,
            rhs,
            slack,
            pass,
            tolerance,
            variant_rhs: None,
        }
    }

    pub fn with_variant_rhs(mut self, v: f64) -> Self {
        self.variant_rhs = Some(v);
        self
    }

    pub fn relabel(mut self, check_id: CheckId) -> Self {
        self.check_id = check_id;
        self
    }

    /// `1 + max(|lower|, |lhs|, |rhs|)`
    pub fn scale(&self) -> f64 {
        scale_of(self.lower, self.lhs, self.rhs)
    }

    pub fn relative_slack(&self) -> f64 {
        self.slack / self.scale()
    }
}
