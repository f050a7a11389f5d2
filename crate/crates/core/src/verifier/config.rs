use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::checks::{DEFAULT_TOLERANCE, MAX_TOLERANCE};
use super::record::CheckId;
use crate::classical::InnerProduct;
use crate::structures::{
    AlphaGrid, AlphaProfile, FuzzyInnerProduct, Mixing, MixingFunction, Phase, ProfileShape,
};

/// Environment variable consulted when neither the config nor the command
/// line supplies a seed.
pub const SEED_ENV: &str = "OFIP_SEED";

/// Largest vector dimension a campaign may draw.
pub const MAX_DIM: usize = 64;

pub const DEFAULT_SHRINK_BUDGET: u32 = 500;

/// A config problem, attributed to the key that caused it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: impl Into<String>, message: impl fmt::Display) -> Self {
        ConfigError {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config key `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldChoice {
    Real,
    Complex,
    /// Each trial picks one of the two with equal probability.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealizationChoice {
    #[default]
    Scaled,
    /// Magnitude `factor·B_α|⟨x,y⟩'|` with full asserted membership.
    OutOfBand { factor: f64 },
}

/// The second triple used by the paired cross-level checks. It always uses
/// the main triple's base.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompanionConfig {
    pub profile: ProfileShape,
    pub mixing: Mixing,
    #[serde(default)]
    pub phase: Phase,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub enum CheckSelection {
    #[default]
    All,
    List(Vec<CheckId>),
}

impl CheckSelection {
    /// Selected ids in report order, without duplicates.
    pub fn resolve(&self) -> Vec<CheckId> {
        match self {
            CheckSelection::All => CheckId::all(),
            CheckSelection::List(ids) => {
                let mut ids = ids.clone();
                ids.sort();
                ids.dedup();
                ids
            }
        }
    }
}

impl Serialize for CheckSelection {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CheckSelection::All => s.serialize_str("all"),
            CheckSelection::List(ids) => ids.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for CheckSelection {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Word(String),
            List(Vec<String>),
        }
        match Raw::deserialize(d)? {
            Raw::Word(w) if w == "all" => Ok(CheckSelection::All),
            Raw::Word(w) => Err(serde::de::Error::custom(format!(
                "expected \"all\" or a list of check ids, got \"{w}\""
            ))),
            Raw::List(names) => names
                .iter()
                .map(|n| n.parse::<CheckId>())
                .collect::<Result<Vec<_>, _>>()
                .map(CheckSelection::List)
                .map_err(serde::de::Error::custom),
        }
    }
}

fn default_base() -> InnerProduct {
    InnerProduct::Standard
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

fn default_shrink_budget() -> u32 {
    DEFAULT_SHRINK_BUDGET
}

/// A randomized verification campaign, as read from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub trials: u64,
    pub dims: Vec<usize>,
    pub field: FieldChoice,
    pub alpha_grid: Vec<f64>,
    pub profile: ProfileShape,
    pub mixing: Mixing,
    #[serde(default)]
    pub phase: Phase,
    /// Weighted bases have their weights repeated cyclically to each trial's
    /// dimension.
    #[serde(default = "default_base")]
    pub base: InnerProduct,
    #[serde(default)]
    pub realization: RealizationChoice,
    /// Defaults to the main profile with a hashed mixing derived from the seed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub companion: Option<CompanionConfig>,
    #[serde(default)]
    pub checks: CheckSelection,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report_path: Option<PathBuf>,
    /// Off by default so that reports are reproducible byte for byte.
    #[serde(default)]
    pub record_timestamps: bool,
    #[serde(default = "default_shrink_budget")]
    pub shrink_budget: u32,
}

/// The backtick-quoted name in a serde message such as
/// ``missing field `trials` ``.
fn quoted_name(message: &str) -> Option<&str> {
    let start = message.find('`')? + 1;
    let len = message[start..].find('`')?;
    Some(&message[start..start + len])
}

impl CampaignConfig {
    /// Parses and validates a JSON config.
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let mut de = serde_json::Deserializer::from_str(text);
        let config: CampaignConfig = serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            let message = inner.to_string();
            let field = if inner.is_syntax() || inner.is_eof() {
                "<document>".to_string()
            } else if path.is_empty() || path == "." {
                quoted_name(&message).unwrap_or("<document>").to_string()
            } else {
                path
            };
            ConfigError { field, message }
        })?;
        de.end().map_err(|e| ConfigError::new("<document>", e))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Fills a missing seed from `OFIP_SEED`.
    pub fn with_env_seed(mut self) -> Result<Self, ConfigError> {
        if self.seed.is_none() {
            if let Ok(raw) = std::env::var(SEED_ENV) {
                let seed = raw
                    .trim()
                    .parse::<u64>()
                    .map_err(|e| ConfigError::new("seed", format!("{SEED_ENV}={raw:?}: {e}")))?;
                self.seed = Some(seed);
            }
        }
        Ok(self)
    }

    pub fn seed(&self) -> Result<u64, ConfigError> {
        self.seed
            .ok_or_else(|| ConfigError::new("seed", format!("no seed in the config, on the command line, or in {SEED_ENV}")))
    }

    pub fn grid(&self) -> Result<AlphaGrid, ConfigError> {
        AlphaGrid::new(self.alpha_grid.clone()).map_err(|e| ConfigError::new("alpha_grid", e))
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.dims.is_empty() {
            return Err(ConfigError::new("dims", "must list at least one dimension"));
        }
        if let Some(d) = self.dims.iter().find(|d| !(1..=MAX_DIM).contains(*d)) {
            return Err(ConfigError::new("dims", format!("dimension {d} is outside 1..={MAX_DIM}")));
        }
        let grid = self.grid()?;
        let profile = AlphaProfile::simplified(self.profile.clone(), grid.clone())
            .map_err(|e| ConfigError::new("profile", e))?;
        MixingFunction::new(self.mixing, self.phase).map_err(|e| ConfigError::new("mixing", e))?;
        if let InnerProduct::Weighted { weights } = &self.base {
            InnerProduct::weighted(weights.clone()).map_err(|e| ConfigError::new("base", e))?;
        }
        if let RealizationChoice::OutOfBand { factor } = self.realization {
            FuzzyInnerProduct::out_of_band(InnerProduct::Standard, profile, MixingFunction::constant(0.0).unwrap(), factor)
                .map_err(|e| ConfigError::new("realization", e))?;
        }
        if let Some(c) = &self.companion {
            AlphaProfile::simplified(c.profile.clone(), grid)
                .map_err(|e| ConfigError::new("companion.profile", e))?;
            MixingFunction::new(c.mixing, c.phase).map_err(|e| ConfigError::new("companion.mixing", e))?;
        }
        if !(0.0..=MAX_TOLERANCE).contains(&self.tolerance) {
            return Err(ConfigError::new(
                "tolerance",
                format!("{} is outside [0, {MAX_TOLERANCE}]", self.tolerance),
            ));
        }
        if let CheckSelection::List(ids) = &self.checks {
            if ids.is_empty() {
                return Err(ConfigError::new("checks", "list must not be empty"));
            }
        }
        Ok(())
    }

    /// The base for `dim`-dimensional trials.
    pub fn base_for(&self, dim: usize) -> InnerProduct {
        match &self.base {
            InnerProduct::Standard => InnerProduct::Standard,
            InnerProduct::Weighted { weights } => InnerProduct::Weighted {
                weights: weights.iter().copied().cycle().take(dim).collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMOKE: &str = r#"{
        "seed": 7, "trials": 10, "dims": [2, 3], "field": "both",
        "alpha_grid": [0.5, 1.0],
        "profile": {"kind": "constant", "lower": 1.0, "upper": 1.0},
        "mixing": {"kind": "constant", "t": 0.5}
    }"#;

    fn with(key: &str, value: &str) -> String {
        let mut v: serde_json::Value = serde_json::from_str(SMOKE).unwrap();
        v[key] = serde_json::from_str(value).unwrap();
        v.to_string()
    }

    #[test]
    fn parses_with_defaults() {
        let c = CampaignConfig::from_json(SMOKE).unwrap();
        assert_eq!(c.tolerance, 1e-9);
        assert_eq!(c.checks, CheckSelection::All);
        assert_eq!(c.base, InnerProduct::Standard);
        assert!(!c.record_timestamps);
        let echo = c.to_json_pretty();
        assert_eq!(CampaignConfig::from_json(&echo).unwrap(), c);
    }

    #[test]
    fn errors_name_the_key() {
        let cases = [
            (with("alpha_grid", "[0.0, 0.5]"), "alpha_grid"),
            (with("alpha_grid", "[]"), "alpha_grid"),
            (with("dims", "[]"), "dims"),
            (with("dims", "[0]"), "dims"),
            (with("tolerance", "0.5"), "tolerance"),
            (with("profile", r#"{"kind":"constant","lower":2.0,"upper":1.0}"#), "profile"),
            (with("profile", r#"{"kind":"constant","lower":"a","upper":1.0}"#), "profile"),
            (with("phase", r#"{"kind":"constant","radians":"a"}"#), "phase"),
            (with("companion", r#"{"profile":{"kind":"constant","lower":1.0,"upper":2.0},"mixing":{"kind":"constant","t":0.5},"x":1}"#), "companion.x"),
            (with("mixing", r#"{"kind":"constant","t":2.0}"#), "mixing"),
            (with("checks", r#"["norm_bounds","bogus"]"#), "checks"),
            (with("checks", r#""some""#), "checks"),
            (with("trials", "-1"), "trials"),
            (with("bogus_key", "1"), "bogus_key"),
            (with("realization", r#"{"kind":"out_of_band","factor":-1.0}"#), "realization"),
            (r#"{"seed": 1}"#.to_string(), "trials"),
            ("{".to_string(), "<document>"),
        ];
        for (text, field) in cases {
            let err = CampaignConfig::from_json(&text).unwrap_err();
            assert_eq!(err.field, field, "{err}");
        }
    }

    #[test]
    fn check_lists_and_weights() {
        let c = CampaignConfig::from_json(&with("checks", r#"["quasi_3","norm_bounds","quasi_3"]"#)).unwrap();
        assert_eq!(c.checks.resolve(), vec![CheckId::NormBounds, CheckId::Quasi(3)]);
        let c = CampaignConfig::from_json(&with("base", r#"{"kind":"weighted","weights":[1.0,2.0]}"#)).unwrap();
        assert_eq!(
            c.base_for(5),
            InnerProduct::Weighted {
                weights: vec![1.0, 2.0, 1.0, 2.0, 1.0]
            }
        );
    }
}
