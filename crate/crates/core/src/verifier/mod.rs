//! Checking the inequalities of fuzzy inner-product spaces on concrete
//! instances, singly ([`Checker`]) or as seeded randomized campaigns
//! ([`run_campaign`]).

mod campaign;
mod checks;
mod config;
mod record;
mod shrink;

pub use campaign::{
    run_campaign, CampaignError, CampaignReport, CheckSummary, Counterexample, Execution, RANGE,
};
pub use checks::{Checker, DEFAULT_TOLERANCE, MAX_TOLERANCE};
pub use config::{
    CampaignConfig, CheckSelection, CompanionConfig, ConfigError, FieldChoice, RealizationChoice,
    DEFAULT_SHRINK_BUDGET, MAX_DIM, SEED_ENV,
};
pub use record::{CheckId, CheckInputs, CheckRecord, UnknownCheck};

use thiserror::Error;

use crate::classical::SpaceError;
use crate::structures::StructureError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("check requires the simplified form (one base, ordered profile)")]
    NotSimplified,
    #[error("check is stated for real vectors only")]
    ComplexField,
    #[error("unknown item {0}")]
    UnknownItem(u8),
    #[error("check needs input `{0}`")]
    MissingInput(&'static str),
    #[error("the two triples have different base inner products")]
    MismatchedBases,
    #[error("orthonormal system is not orthonormal under the triple's base")]
    SystemBaseMismatch,
    #[error("tolerance {0} is outside [0, {MAX_TOLERANCE}]")]
    InvalidTolerance(f64),
}
