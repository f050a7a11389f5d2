use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::Checker;
use super::config::{CampaignConfig, ConfigError, FieldChoice, RealizationChoice};
use super::record::{CheckId, CheckInputs, CheckRecord};
use super::shrink::shrink;
use super::VerifyError;
use crate::classical::{gram_schmidt, Field, OrthonormalSystem, Vector};
use crate::structures::{
    AlphaGrid, AlphaProfile, ExampleVariant, FuzzyInnerProduct, FuzzyNorm, MixingFunction,
};

/// Entries of drawn vectors and non-corner scalars are uniform on `[-RANGE, RANGE]`.
pub const RANGE: f64 = 10.0;

/// Powers of two so that scaling by a corner scalar is exact.
const CORNER_K: [f64; 7] = [0.0, 1.0, -1.0, 1.0 / 1048576.0, -1.0 / 1048576.0, 1048576.0, -1048576.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    /// On the global rayon pool, or a dedicated pool of `threads` workers.
    #[default]
    Parallel,
    Threads(usize),
}

#[derive(Debug, thiserror::Error)]
pub enum CampaignError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("trial {trial}: {source}")]
    Trial { trial: u64, source: VerifyError },
    #[error("thread pool: {0}")]
    Pool(String),
}

/// One drawn instance. Everything a check reads comes from here or from the
/// campaign's fixed triples.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Trial {
    pub index: u64,
    pub dim: usize,
    pub alpha: f64,
    pub alpha2: f64,
    pub x: Vector,
    pub y: Vector,
    pub z: Vector,
    pub k: Complex64,
    pub n: usize,
    pub system: OrthonormalSystem,
    /// Replaces the campaign mixing; set only while shrinking.
    pub mixing: Option<MixingFunction>,
}

struct DimContext {
    fip: FuzzyInnerProduct,
    companion: FuzzyInnerProduct,
    norm: FuzzyNorm,
    companion_norm: FuzzyNorm,
}

/// The fixed part of a campaign.
pub(crate) struct Context {
    pub checker: Checker,
    pub grid: AlphaGrid,
    pub checks: Vec<CheckId>,
    seed: u64,
    field: FieldChoice,
    dims: Vec<usize>,
    per_dim: BTreeMap<usize, DimContext>,
    m: f64,
    l: f64,
    example: FuzzyNorm,
    example_general: FuzzyNorm,
    example_l: f64,
}

fn draw_vector(rng: &mut ChaCha8Rng, dim: usize, field: Field) -> Vector {
    let entries = (0..dim)
        .map(|_| {
            let re = rng.random_range(-RANGE..=RANGE);
            let im = match field {
                Field::Real => 0.0,
                Field::Complex => rng.random_range(-RANGE..=RANGE),
            };
            Complex64::new(re, im)
        })
        .collect();
    Vector::new(entries).expect("finite draws")
}

fn is_real(v: &[&Vector]) -> bool {
    v.iter().all(|v| v.is_real())
}

impl Context {
    pub fn new(config: &CampaignConfig) -> Result<Self, ConfigError> {
        config.validate()?;
        let seed = config.seed()?;
        let grid = config.grid()?;
        let checker = Checker::new(config.tolerance).map_err(|e| ConfigError::new("tolerance", e))?;
        let profile = AlphaProfile::simplified(config.profile.clone(), grid.clone())
            .map_err(|e| ConfigError::new("profile", e))?;
        let mixing = MixingFunction::new(config.mixing, config.phase).map_err(|e| ConfigError::new("mixing", e))?;
        let (companion_profile, companion_mixing) = match &config.companion {
            Some(c) => (
                AlphaProfile::simplified(c.profile.clone(), grid.clone())
                    .map_err(|e| ConfigError::new("companion.profile", e))?,
                MixingFunction::new(c.mixing, c.phase).map_err(|e| ConfigError::new("companion.mixing", e))?,
            ),
            None => (profile.clone(), MixingFunction::hashed(seed ^ 0xc0_4a11_1011)),
        };

        let mut per_dim = BTreeMap::new();
        for &dim in &config.dims {
            let base = config.base_for(dim);
            let fip = match config.realization {
                RealizationChoice::Scaled => FuzzyInnerProduct::scaled(base.clone(), profile.clone(), mixing),
                RealizationChoice::OutOfBand { factor } => {
                    FuzzyInnerProduct::out_of_band(base.clone(), profile.clone(), mixing, factor)
                }
            }
            .map_err(|e| ConfigError::new("realization", e))?;
            let companion = FuzzyInnerProduct::scaled(base, companion_profile.clone(), companion_mixing)
                .map_err(|e| ConfigError::new("companion", e))?;
            per_dim.insert(
                dim,
                DimContext {
                    norm: fip.derive_norm(),
                    companion_norm: companion.derive_norm(),
                    fip,
                    companion,
                },
            );
        }

        let example = FuzzyNorm::worked_example_simplified(grid.clone()).map_err(|e| ConfigError::new("alpha_grid", e))?;
        let example_general = FuzzyNorm::worked_example(grid.clone(), ExampleVariant::Corrected)
            .map_err(|e| ConfigError::new("alpha_grid", e))?;
        Ok(Context {
            checker,
            checks: config.checks.resolve(),
            seed,
            field: config.field,
            dims: config.dims.clone(),
            m: profile.global_bound(),
            l: profile.sqrt().global_bound(),
            example_l: example.profile().global_bound(),
            example,
            example_general,
            per_dim,
            grid,
        })
    }

    /// The trial with the given index; a pure function of `(seed, index)`.
    pub fn draw(&self, index: u64) -> Trial {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        let field = match self.field {
            FieldChoice::Real => Field::Real,
            FieldChoice::Complex => Field::Complex,
            FieldChoice::Both if rng.random::<bool>() => Field::Complex,
            FieldChoice::Both => Field::Real,
        };
        let dim = self.dims[rng.random_range(0..self.dims.len())];
        let points = self.grid.points();
        let alpha = points[rng.random_range(0..points.len())];
        let alpha2 = points[rng.random_range(0..points.len())];

        let k = if rng.random_bool(0.3) {
            let mut corners: Vec<Complex64> = CORNER_K.iter().map(|&k| Complex64::new(k, 0.0)).collect();
            if field == Field::Complex {
                corners.extend([Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)]);
            }
            corners[rng.random_range(0..corners.len())]
        } else {
            let re = rng.random_range(-RANGE..=RANGE);
            let im = match field {
                Field::Real => 0.0,
                Field::Complex => rng.random_range(-RANGE..=RANGE),
            };
            Complex64::new(re, im)
        };

        let mut x = draw_vector(&mut rng, dim, field);
        let mut y = draw_vector(&mut rng, dim, field);
        let mut z = draw_vector(&mut rng, dim, field);
        let zero = Vector::zeros(dim).expect("dim >= 1");
        match rng.random_range(0..16u32) {
            0 => x = zero,
            1 => y = zero,
            2 => {
                x = Vector::basis(dim, rng.random_range(0..dim)).expect("index < dim");
                y = Vector::basis(dim, rng.random_range(0..dim)).expect("index < dim");
            }
            3 => y = x.clone(),
            4 => y = x.scaled_real(-1.0),
            // k·x + z = 0
            5 => z = x.scaled(-k),
            _ => {}
        }

        let base = self.per_dim[&dim].fip.base1();
        let raw: Vec<Vector> = (0..dim).map(|_| draw_vector(&mut rng, dim, field)).collect();
        let system = gram_schmidt(&raw, base).unwrap_or_else(|_| {
            let canonical: Vec<Vector> = (0..dim).map(|i| Vector::basis(dim, i).expect("index < dim")).collect();
            gram_schmidt(&canonical, base).expect("canonical basis is independent")
        });
        let n = rng.random_range(1..=dim);

        Trial {
            index,
            dim,
            alpha,
            alpha2,
            x,
            y,
            z,
            k,
            n,
            system,
            mixing: None,
        }
    }

    /// Records for every id in `ids` that applies to `trial`, in `ids` order.
    pub fn evaluate(&self, trial: &Trial, ids: &[CheckId]) -> Result<Vec<CheckRecord>, VerifyError> {
        let dc = &self.per_dim[&trial.dim];
        let overridden;
        let (fip, norm) = match trial.mixing {
            Some(m) => {
                let fip = dc.fip.with_mixing(m);
                overridden = (fip.derive_norm(), fip);
                (&overridden.1, &overridden.0)
            }
            None => (&dc.fip, &dc.norm),
        };
        let ch = &self.checker;
        let Trial {
            alpha,
            alpha2,
            x,
            y,
            z,
            k,
            n,
            ..
        } = trial;
        let (alpha, alpha2, k) = (*alpha, *alpha2, *k);
        let wants = |pred: &dyn Fn(CheckId) -> bool| ids.iter().any(|id| pred(*id));

        let mut out: BTreeMap<CheckId, CheckRecord> = BTreeMap::new();
        let mut put = |r: CheckRecord| {
            out.insert(r.check_id, r);
        };

        let real_xy = is_real(&[x, y]);
        let example_domain = real_xy && trial.dim == 2 && k.im == 0.0;
        for &id in ids {
            match id {
                CheckId::BandContainment => put(ch.check_band_containment(fip, alpha, x, y)?),
                CheckId::DefiningPredicate => put(ch.check_defining_predicate(fip, alpha, x, y)?),
                CheckId::Orthogonality => put(self.orthogonality(fip, alpha, x, y)?),
                CheckId::NormBounds => put(ch.check_norm_bounds(fip, alpha, x)?),
                CheckId::CauchySchwarz => put(ch.check_fuzzy_cauchy_schwarz(fip, alpha, x, y)?),
                CheckId::Parallelogram => put(ch.check_fuzzy_parallelogram(fip, alpha, x, y)?),
                CheckId::Polarization if real_xy => put(ch.check_fuzzy_polarization(fip, alpha, x, y)?),
                CheckId::Polarization => {}
                CheckId::PolarizationStep => put(ch.check_polarization_step(fip, alpha, x, y)?),
                CheckId::Bessel => put(ch.check_fuzzy_bessel(fip, &trial.system, x, alpha, *n)?),
                CheckId::Quasi(item) => put(ch.check_quasi_linearity(fip, item, alpha, k, x, y, Some(z))?),
                CheckId::GlobalQuasi(item) => {
                    put(ch.check_global_bound_corollary(fip, self.m, item, alpha, k, x, y, Some(z))?)
                }
                CheckId::CrossAlpha => put(ch.check_cross_alpha(fip, alpha, alpha2, x, y)?),
                CheckId::CrossAlphaPair => put(ch.check_cross_alpha_pair(fip, &dc.companion, alpha, alpha2, x, y)?),
                CheckId::CrossAlphaNorm => put(ch.check_cross_alpha_norm(norm, alpha, alpha2, x)?),
                CheckId::CrossAlphaNormPair => {
                    put(ch.check_cross_alpha_norm_pair(norm, &dc.companion_norm, alpha, alpha2, x)?)
                }
                CheckId::ExampleContainment if example_domain => {
                    put(ch.check_example_containment(&self.example_general, alpha, x)?)
                }
                CheckId::ExampleCrossAlpha if example_domain => put(
                    ch.check_cross_alpha_norm(&self.example, alpha, alpha2, x)?
                        .relabel(CheckId::ExampleCrossAlpha),
                ),
                // Families evaluated together below.
                _ => {}
            }
        }

        let norm_family = [CheckId::NormDefiniteness, CheckId::NormTriangle, CheckId::NormHomogeneity];
        if wants(&|id| norm_family.contains(&id)) {
            for r in ch.check_fuzzy_norm_properties(norm, alpha, k, x, y)? {
                put(r);
            }
        }
        if wants(&|id| matches!(id, CheckId::GlobalNormTriangle | CheckId::GlobalNormHomogeneity)) {
            for r in ch.check_global_norm_corollaries(norm, self.l, alpha, k, x, y)? {
                put(r);
            }
        }
        if example_domain {
            let ex = [
                CheckId::ExampleNormDefiniteness,
                CheckId::ExampleNormTriangle,
                CheckId::ExampleNormHomogeneity,
            ];
            if wants(&|id| ex.contains(&id)) {
                let recs = ch.check_fuzzy_norm_properties(&self.example, alpha, k, x, y)?;
                for (r, id) in recs.into_iter().zip(ex) {
                    put(r.relabel(id));
                }
            }
            let ex_global = [CheckId::ExampleGlobalNormTriangle, CheckId::ExampleGlobalNormHomogeneity];
            if wants(&|id| ex_global.contains(&id)) {
                let recs = ch.check_global_norm_corollaries(&self.example, self.example_l, alpha, k, x, y)?;
                for (r, id) in recs.into_iter().zip(ex_global) {
                    put(r.relabel(id));
                }
            }
        }

        Ok(ids.iter().filter_map(|id| out.remove(id)).collect())
    }

    /// Checks the drawn pair and, for `dim >= 2`, the exactly orthogonal pair
    /// obtained by splitting the support of `x` and `y`. Reports the first
    /// failure, else the split pair.
    fn orthogonality(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        let drawn = self.checker.check_orthogonality(fip, alpha, x, y)?;
        let dim = x.dim();
        if dim < 2 || !drawn.pass {
            return Ok(drawn);
        }
        let half = dim / 2;
        let zero = Complex64::new(0.0, 0.0);
        let lo = Vector::new(x.entries().iter().enumerate().map(|(i, &e)| if i < half { e } else { zero }).collect())?;
        let hi = Vector::new(y.entries().iter().enumerate().map(|(i, &e)| if i >= half { e } else { zero }).collect())?;
        self.checker.check_orthogonality(fip, alpha, &lo, &hi)
    }

    pub fn mixing(&self) -> MixingFunction {
        *self.per_dim.values().next().expect("at least one dim").fip.mixing()
    }
}

/// A failing instance, as first drawn and after shrinking.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial_index: u64,
    pub original: CheckRecord,
    pub shrunk: CheckRecord,
    pub shrink_steps: u32,
    pub shrink_evaluations: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check_id: CheckId,
    /// Trials to which the check applied.
    pub trials: u64,
    pub passes: u64,
    /// Raw slack of the record with the smallest relative slack.
    pub worst_slack: Option<f64>,
    pub worst_relative_slack: Option<f64>,
    pub worst_trial_index: Option<u64>,
    pub worst_inputs: Option<CheckInputs>,
    pub counterexample: Option<Counterexample>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.passes == self.trials
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    /// The effective config, seed included.
    pub config_echo: CampaignConfig,
    pub seed: u64,
    pub trials: u64,
    pub started: Option<String>,
    pub finished: Option<String>,
    pub all_passed: bool,
    pub checks: Vec<CheckSummary>,
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// `check_id,trials,passes,worst_slack,worst_trial_index`
    pub fn to_csv(&self) -> String {
        let mut s = String::from("check_id,trials,passes,worst_slack,worst_trial_index\n");
        for c in &self.checks {
            let slack = c.worst_slack.map(|v| v.to_string()).unwrap_or_default();
            let idx = c.worst_trial_index.map(|v| v.to_string()).unwrap_or_default();
            s.push_str(&format!("{},{},{},{},{}\n", c.check_id, c.trials, c.passes, slack, idx));
        }
        s
    }

    pub fn summary(&self, id: CheckId) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckSummary> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

#[derive(Debug, Clone, Default)]
struct Agg {
    trials: u64,
    passes: u64,
    /// `(relative slack, trial index, record)` minimizing the first two.
    worst: Option<(f64, u64, CheckRecord)>,
    first_failure: Option<u64>,
}

fn worst_key(r: &CheckRecord) -> f64 {
    let rel = r.relative_slack();
    if rel.is_nan() {
        f64::NEG_INFINITY
    } else {
        rel
    }
}

impl Agg {
    fn add(&mut self, index: u64, record: CheckRecord) {
        self.trials += 1;
        if record.pass {
            self.passes += 1;
        } else {
            self.first_failure = Some(self.first_failure.map_or(index, |f| f.min(index)));
        }
        let key = worst_key(&record);
        self.offer(key, index, record);
    }

    fn offer(&mut self, key: f64, index: u64, record: CheckRecord) {
        let better = match &self.worst {
            None => true,
            Some((k, i, _)) => key.total_cmp(k).then(index.cmp(i)).is_lt(),
        };
        if better {
            self.worst = Some((key, index, record));
        }
    }

    fn merge(mut self, other: Agg) -> Agg {
        self.trials += other.trials;
        self.passes += other.passes;
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if let Some((k, i, r)) = other.worst {
            self.offer(k, i, r);
        }
        self
    }
}

type Partial = Result<BTreeMap<CheckId, Agg>, (u64, VerifyError)>;

fn merge_partial(a: Partial, b: Partial) -> Partial {
    match (a, b) {
        (Ok(mut a), Ok(b)) => {
            for (id, agg) in b {
                let merged = a.remove(&id).unwrap_or_default().merge(agg);
                a.insert(id, merged);
            }
            Ok(a)
        }
        (Err(a), Err(b)) => Err(if a.0 <= b.0 { a } else { b }),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn fold_trial(ctx: &Context, acc: Partial, index: u64) -> Partial {
    let trial = ctx.draw(index);
    let records = ctx.evaluate(&trial, &ctx.checks);
    match (acc, records) {
        (Ok(mut map), Ok(records)) => {
            for r in records {
                map.entry(r.check_id).or_default().add(index, r);
            }
            Ok(map)
        }
        (Err(e), _) => Err(e),
        (Ok(_), Err(e)) => Err((index, e)),
    }
}

fn timestamp(enabled: bool) -> Option<String> {
    enabled.then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true))
}

/// Runs every selected check on `config.trials` drawn instances, shrinks the
/// first failure of each failing check, and summarizes. The report depends
/// only on the config (seed included), not on `execution`.
pub fn run_campaign(config: &CampaignConfig, execution: Execution) -> Result<CampaignReport, CampaignError> {
    let ctx = Context::new(config)?;
    let started = timestamp(config.record_timestamps);

    let run = || -> Partial {
        match execution {
            Execution::Serial => (0..config.trials).try_fold(BTreeMap::new(), |acc, i| fold_trial(&ctx, Ok(acc), i)),
            Execution::Parallel | Execution::Threads(_) => (0..config.trials)
                .into_par_iter()
                .fold(|| Ok(BTreeMap::new()), |acc, i| fold_trial(&ctx, acc, i))
                .reduce(|| Ok(BTreeMap::new()), merge_partial),
        }
    };
    let aggregated = match execution {
        Execution::Threads(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CampaignError::Pool(e.to_string()))?
            .install(run),
        _ => run(),
    }
    .map_err(|(trial, source)| CampaignError::Trial { trial, source })?;

    let mut checks = Vec::with_capacity(ctx.checks.len());
    if config.trials > 0 {
        for &id in &ctx.checks {
            let agg = aggregated.get(&id).cloned().unwrap_or_default();
            let counterexample = match agg.first_failure {
                Some(index) => {
                    let trial = ctx.draw(index);
                    let outcome = shrink(&ctx, trial, id, config.shrink_budget)
                        .map_err(|source| CampaignError::Trial { trial: index, source })?;
                    outcome.map(|o| Counterexample {
                        trial_index: index,
                        original: o.original,
                        shrunk: o.shrunk,
                        shrink_steps: o.steps,
                        shrink_evaluations: o.evaluations,
                    })
                }
                None => None,
            };
            let worst = agg.worst.as_ref();
            checks.push(CheckSummary {
                check_id: id,
                trials: agg.trials,
                passes: agg.passes,
                worst_slack: worst.map(|w| w.2.slack),
                worst_relative_slack: worst.map(|w| w.2.relative_slack()),
                worst_trial_index: worst.map(|w| w.1),
                worst_inputs: worst.map(|w| w.2.inputs.clone()),
                counterexample,
            });
        }
    }

    let mut echo = config.clone();
    echo.seed = Some(ctx.seed);
    Ok(CampaignReport {
        all_passed: checks.iter().all(CheckSummary::passed),
        config_echo: echo,
        seed: ctx.seed,
        trials: config.trials,
        started,
        finished: timestamp(config.record_timestamps),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(profile: &str, realization: &str, trials: u64) -> CampaignConfig {
        CampaignConfig::from_json(&format!(
            r#"{{
                "seed": 42, "trials": {trials}, "dims": [1, 2, 3], "field": "both",
                "alpha_grid": [0.25, 0.5, 0.75, 1.0],
                "profile": {profile},
                "mixing": {{"kind": "hashed", "seed": 5}},
                "phase": {{"kind": "hashed", "seed": 6}},
                "realization": {realization}
            }}"#
        ))
        .unwrap()
    }

    const AFFINE: &str = r#"{"kind":"affine","lower":[0.5,0.5],"upper":[1.0,1.0]}"#;
    const SCALED: &str = r#"{"kind":"scaled"}"#;

    #[test]
    fn draws_are_reproducible() {
        let ctx = Context::new(&config(AFFINE, SCALED, 10)).unwrap();
        for i in 0..50 {
            assert_eq!(ctx.draw(i), ctx.draw(i));
        }
        assert_ne!(ctx.draw(0).x, ctx.draw(1).x);
    }

    #[test]
    fn zero_trials_is_empty_and_passes() {
        let r = run_campaign(&config(AFFINE, SCALED, 0), Execution::Serial).unwrap();
        assert!(r.checks.is_empty() && r.all_passed && r.trials == 0);
    }

    #[test]
    fn honest_campaign_passes_and_is_execution_independent() {
        let c = config(AFFINE, SCALED, 300);
        let serial = run_campaign(&c, Execution::Serial).unwrap();
        let failed: Vec<_> = serial.failed_checks().map(|c| c.check_id.name()).collect();
        assert!(serial.all_passed, "{failed:?}");
        assert_eq!(serial.checks.len(), CheckId::all().len());
        let parallel = run_campaign(&c, Execution::Threads(3)).unwrap();
        assert_eq!(serial.to_json(), parallel.to_json());
        let reparsed = CampaignReport::from_json(&serial.to_json()).unwrap();
        assert_eq!(reparsed.to_json(), serial.to_json());
    }

    #[test]
    fn adversarial_campaign_reports_counterexamples() {
        let r = run_campaign(
            &config(r#"{"kind":"constant","lower":1.0,"upper":2.0}"#, r#"{"kind":"out_of_band","factor":2.0}"#, 100),
            Execution::Parallel,
        )
        .unwrap();
        assert!(!r.all_passed);
        let pred = r.summary(CheckId::DefiningPredicate).unwrap();
        assert!(pred.passes < pred.trials);
        let bounds = r.summary(CheckId::NormBounds).unwrap();
        let cx = bounds.counterexample.as_ref().unwrap();
        assert!(!cx.shrunk.pass);
        let unit = |v: &Vector| v.entries().iter().all(|e| [0.0, 1.0, -1.0].contains(&e.re) && e.im == 0.0);
        assert!(unit(&cx.shrunk.inputs.x), "{:?}", cx.shrunk.inputs);
        assert!(r.to_csv().lines().count() == r.checks.len() + 1);
    }
}
