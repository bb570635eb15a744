//! Campaign files.
//!
//! A campaign is a JSON document:
//!
//! ```json
//! {
//!   "algorithms": [
//!     {"name": "goa"},
//!     {"name": "msigoa"},
//!     {"name": "late-restart", "ibuf": true, "dprm": true, "params": {"nd_multiplier": 10}}
//!   ],
//!   "problems": [{"name": "sphere", "dim": 10}, {"name": "spring"}],
//!   "population": 30,
//!   "iterations": 500,
//!   "runs": 51,
//!   "seed": 0,
//!   "baseline": "goa"
//! }
//! ```
//!
//! An algorithm named after a variant (`goa`, `goa-1`, ..., `msigoa`) starts
//! from that variant's switches; any other name starts from plain GOA. The
//! `ibuf`/`apts`/`dprm` flags and `params` then override individual settings.

use std::collections::HashSet;
use std::path::Path;

use gazelle::{
    problems, BrownianExponent, CfVariant, DprmScope, GoaParams, LevyParams, RunConfig,
    StrategyConfig, Variant,
};
use serde::Deserialize;

use crate::error::BenchError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignFile {
    pub algorithms: Vec<AlgorithmEntry>,
    pub problems: Vec<ProblemEntry>,
    pub population: Option<usize>,
    pub iterations: Option<usize>,
    pub runs: Option<usize>,
    pub seed: Option<u64>,
    pub baseline: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmEntry {
    pub name: String,
    pub ibuf: Option<bool>,
    pub apts: Option<bool>,
    pub dprm: Option<bool>,
    #[serde(default)]
    pub params: ParamsEntry,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsEntry {
    pub s: Option<f64>,
    pub psr: Option<f64>,
    pub exploit_probability: Option<f64>,
    pub cf_variant: Option<CfVariant>,
    pub levy_alpha: Option<f64>,
    pub levy_scale: Option<f64>,
    pub nd_multiplier: Option<usize>,
    pub apts_brownian_exponent: Option<BrownianExponent>,
    pub dprm_scope: Option<DprmScope>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemEntry {
    pub name: String,
    pub dim: Option<usize>,
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub iterations: Option<usize>,
    pub population: Option<usize>,
    pub runs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Algorithm {
    pub name: String,
    pub goa: GoaParams,
    pub strategy: StrategyConfig,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub name: String,
    pub dim: usize,
}

impl ProblemSpec {
    /// Label used in file names: the bare name for fixed-dimension problems,
    /// `<name>-d<dim>` for scalable ones.
    pub fn label(&self) -> String {
        if problems::fixed_dimension(&self.name).is_some() {
            self.name.clone()
        } else {
            format!("{}-d{}", self.name, self.dim)
        }
    }

    pub fn build(&self) -> gazelle::Result<gazelle::Problem> {
        problems::by_name(&self.name, Some(self.dim))
    }
}

/// A validated campaign. `run_config` carries the population size, iteration
/// budget, run count and base seed; each algorithm brings its own parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct Campaign {
    pub algorithms: Vec<Algorithm>,
    pub problems: Vec<ProblemSpec>,
    pub run_config: RunConfig,
    pub baseline: String,
}

impl Campaign {
    /// Run configuration of `algorithm` with the campaign's budget and the
    /// given seed.
    pub fn config_for(&self, algorithm: &Algorithm, seed: u64) -> RunConfig {
        RunConfig {
            goa: algorithm.goa,
            strategy: algorithm.strategy,
            seed,
            ..self.run_config.clone()
        }
    }
}

fn config_error(key: impl Into<String>, message: impl Into<String>) -> BenchError {
    BenchError::Config {
        key: key.into(),
        message: message.into(),
    }
}

pub fn parse_config(path: &Path, overrides: &Overrides) -> Result<Campaign, BenchError> {
    let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config_str(&text, overrides)
}

pub fn parse_config_str(text: &str, overrides: &Overrides) -> Result<Campaign, BenchError> {
    let file: CampaignFile =
        serde_json::from_str(text).map_err(|e| config_error("<document>", e.to_string()))?;
    build_campaign(file, overrides)
}

fn positive(
    key: &str,
    value: Option<usize>,
    min: usize,
    default: usize,
) -> Result<usize, BenchError> {
    let v = value.unwrap_or(default);
    if v < min {
        return Err(config_error(key, format!("must be >= {min}, got {v}")));
    }
    Ok(v)
}

pub fn build_campaign(file: CampaignFile, overrides: &Overrides) -> Result<Campaign, BenchError> {
    let defaults = RunConfig::default();
    let run_config = RunConfig {
        population_size: positive(
            "population",
            overrides.population.or(file.population),
            2,
            defaults.population_size,
        )?,
        max_iterations: positive(
            "iterations",
            overrides.iterations.or(file.iterations),
            1,
            defaults.max_iterations,
        )?,
        runs: positive("runs", overrides.runs.or(file.runs), 1, defaults.runs)?,
        seed: overrides.seed.or(file.seed).unwrap_or(defaults.seed),
        ..defaults
    };

    if file.algorithms.is_empty() {
        return Err(config_error(
            "algorithms",
            "at least one algorithm is required",
        ));
    }
    if file.problems.is_empty() {
        return Err(config_error("problems", "at least one problem is required"));
    }

    let mut seen = HashSet::new();
    let algorithms = file
        .algorithms
        .iter()
        .enumerate()
        .map(|(i, entry)| {
            if !seen.insert(entry.name.as_str()) {
                return Err(config_error(
                    format!("algorithms[{i}].name"),
                    format!("duplicate algorithm `{}`", entry.name),
                ));
            }
            resolve_algorithm(i, entry)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut seen = HashSet::new();
    let problems = file
        .problems
        .iter()
        .enumerate()
        .map(|(i, entry)| {
            let dim = entry.dim.or_else(|| problems::fixed_dimension(&entry.name));
            let spec = ProblemSpec {
                name: entry.name.clone(),
                dim: dim.unwrap_or(0),
            };
            problems::by_name(&entry.name, dim)
                .map_err(|e| config_error(format!("problems[{i}]"), e.to_string()))?;
            if !seen.insert(spec.label()) {
                return Err(config_error(
                    format!("problems[{i}]"),
                    format!("duplicate problem `{}`", spec.label()),
                ));
            }
            Ok(spec)
        })
        .collect::<Result<Vec<_>, BenchError>>()?;

    let baseline = match file.baseline {
        Some(b) => {
            if !algorithms.iter().any(|a| a.name == b) {
                let names: Vec<&str> = algorithms.iter().map(|a| a.name.as_str()).collect();
                return Err(config_error(
                    "baseline",
                    format!(
                        "`{b}` is not one of the campaign algorithms: {}",
                        names.join(", ")
                    ),
                ));
            }
            b
        }
        None => algorithms
            .iter()
            .find(|a| a.name == Variant::Goa.name())
            .unwrap_or(&algorithms[0])
            .name
            .clone(),
    };

    Ok(Campaign {
        algorithms,
        problems,
        run_config,
        baseline,
    })
}

fn resolve_algorithm(i: usize, entry: &AlgorithmEntry) -> Result<Algorithm, BenchError> {
    let named = entry.name.parse::<Variant>().ok();
    let has_flags = entry.ibuf.is_some() || entry.apts.is_some() || entry.dprm.is_some();
    if named.is_none() && !has_flags {
        let names: Vec<&str> = Variant::ALL.iter().map(|v| v.name()).collect();
        return Err(config_error(
            format!("algorithms[{i}].name"),
            format!(
                "unknown algorithm `{}`; valid names: {} (or give ibuf/apts/dprm flags)",
                entry.name,
                names.join(", ")
            ),
        ));
    }
    let mut strategy = named.unwrap_or(Variant::Goa).strategy();
    strategy.use_ibuf = entry.ibuf.unwrap_or(strategy.use_ibuf);
    strategy.use_apts = entry.apts.unwrap_or(strategy.use_apts);
    strategy.use_dprm = entry.dprm.unwrap_or(strategy.use_dprm);

    let p = &entry.params;
    let key = |k: &str| format!("algorithms[{i}].params.{k}");
    let mut goa = GoaParams::default();
    goa.s = p.s.unwrap_or(goa.s);
    goa.psr = p.psr.unwrap_or(goa.psr);
    goa.exploit_probability = p.exploit_probability.unwrap_or(goa.exploit_probability);
    goa.cf_variant = p.cf_variant.unwrap_or(goa.cf_variant);
    if p.levy_alpha.is_some() || p.levy_scale.is_some() {
        let alpha = p.levy_alpha.unwrap_or(goa.levy.alpha());
        let scale = p.levy_scale.unwrap_or(goa.levy.scale());
        if !(scale.is_finite() && scale > 0.0) {
            return Err(config_error(
                key("levy_scale"),
                format!("must be positive, got {scale}"),
            ));
        }
        goa.levy = LevyParams::new(alpha, scale)
            .map_err(|e| config_error(key("levy_alpha"), e.to_string()))?;
    }
    strategy.nd_multiplier = p.nd_multiplier.unwrap_or(strategy.nd_multiplier);
    strategy.apts_brownian_exponent = p
        .apts_brownian_exponent
        .unwrap_or(strategy.apts_brownian_exponent);
    strategy.dprm_scope = p.dprm_scope.unwrap_or(strategy.dprm_scope);

    goa.validate()
        .map_err(|e| config_error(format!("algorithms[{i}].params"), e.to_string()))?;
    strategy
        .validate()
        .map_err(|e| config_error(key("nd_multiplier"), e.to_string()))?;

    Ok(Algorithm {
        name: entry.name.clone(),
        goa,
        strategy,
    })
}
