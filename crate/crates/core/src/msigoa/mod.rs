//! Multi-strategy improved gazelle optimizer and its ablation variants.
//!
//! Three strategies can be switched on independently:
//!
//! - **IBUF**, an iteration-based schedule that replaces the per-iteration
//!   coin flip of the baseline with fixed early/middle/late phases;
//! - **APTS**, adaptive scaling of the Brownian and Lévy motion vectors;
//! - **DPRM**, a restart toward a weighted center of a FIFO archive of
//!   dominant agents with covariance-shaped Gaussian noise.
//!
//! The eight on/off combinations are the [`Variant`]s. With all three off,
//! [`run_variant`] consumes the random stream exactly like
//! [`run_goa`](crate::goa::run_goa) and returns bit-identical results.
//!
//! Iteration order: update sweep, predator escape, then (DPRM only) archive
//! update and restart.

mod archive;
mod dprm;
mod ibuf;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use archive::DominantArchive;
pub use dprm::{dprm_center_and_sample, dprm_restart, dprm_weights, restart_move, DprmSampler};
pub use ibuf::{ibuf_candidates, ibuf_phase, ibuf_update, levy_refine_step, Phase};

use crate::error::{invalid_argument, Error, Result};
use crate::goa::{
    escape_step, exploitation_candidates, exploration_candidates, initialize, StepContext,
};
use crate::problem::Problem;
use crate::rng::RngStream;
use crate::run::{ConvergenceTrace, RunConfig, RunRecord};
use crate::stochastics::BrownianExponent;

/// Which agents the restart is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DprmScope {
    #[default]
    All,
    /// Only agents that did not improve during this iteration's sweep and escape.
    NonImproved,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyConfig {
    pub use_ibuf: bool,
    pub use_apts: bool,
    pub use_dprm: bool,
    /// Archive capacity is `nd_multiplier * D`.
    pub nd_multiplier: usize,
    pub apts_brownian_exponent: BrownianExponent,
    pub dprm_scope: DprmScope,
}

impl Default for StrategyConfig {
    fn default() -> Self {
        Variant::Msigoa.strategy()
    }
}

impl StrategyConfig {
    pub fn baseline() -> Self {
        Variant::Goa.strategy()
    }

    pub fn validate(&self) -> Result<()> {
        if self.use_dprm && self.nd_multiplier == 0 {
            return Err(invalid_argument(
                "nd_multiplier must be >= 1 when the restart is enabled",
            ));
        }
        Ok(())
    }

    pub fn archive_capacity(&self, dimension: usize) -> usize {
        self.nd_multiplier * dimension
    }

    /// The named variant these switches correspond to.
    pub fn variant(&self) -> Variant {
        Variant::from_flags(self.use_ibuf, self.use_apts, self.use_dprm)
    }
}

/// The ablation matrix: baseline, single strategies, pairs, and all three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Goa,
    Goa1,
    Goa2,
    Goa3,
    Goa12,
    Goa13,
    Goa23,
    Msigoa,
}

impl Variant {
    pub const ALL: [Variant; 8] = [
        Variant::Goa,
        Variant::Goa1,
        Variant::Goa2,
        Variant::Goa3,
        Variant::Goa12,
        Variant::Goa13,
        Variant::Goa23,
        Variant::Msigoa,
    ];

    /// `(ibuf, apts, dprm)`
    pub fn flags(self) -> (bool, bool, bool) {
        match self {
            Variant::Goa => (false, false, false),
            Variant::Goa1 => (true, false, false),
            Variant::Goa2 => (false, true, false),
            Variant::Goa3 => (false, false, true),
            Variant::Goa12 => (true, true, false),
            Variant::Goa13 => (true, false, true),
            Variant::Goa23 => (false, true, true),
            Variant::Msigoa => (true, true, true),
        }
    }

    pub fn from_flags(ibuf: bool, apts: bool, dprm: bool) -> Self {
        *Self::ALL
            .iter()
            .find(|v| v.flags() == (ibuf, apts, dprm))
            .expect("all eight combinations are listed")
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Goa => "goa",
            Variant::Goa1 => "goa-1",
            Variant::Goa2 => "goa-2",
            Variant::Goa3 => "goa-3",
            Variant::Goa12 => "goa-12",
            Variant::Goa13 => "goa-13",
            Variant::Goa23 => "goa-23",
            Variant::Msigoa => "msigoa",
        }
    }

    pub fn strategy(self) -> StrategyConfig {
        let (use_ibuf, use_apts, use_dprm) = self.flags();
        StrategyConfig {
            use_ibuf,
            use_apts,
            use_dprm,
            nd_multiplier: 25,
            apts_brownian_exponent: BrownianExponent::TOverT,
            dprm_scope: DprmScope::All,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .iter()
            .copied()
            .find(|v| v.name() == lower)
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|v| v.name()).collect();
                invalid_argument(format!(
                    "unknown variant `{s}`; valid names: {}",
                    names.join(", ")
                ))
            })
    }
}

/// One run of the variant selected by `config.strategy`.
pub fn run_variant(problem: &Problem, config: &RunConfig) -> Result<(RunRecord, ConvergenceTrace)> {
    config.validate()?;
    let strategy = &config.strategy;
    let n = config.population_size;
    let max_iter = config.max_iterations;
    let mut rng = RngStream::new(config.seed);
    let mut pop = initialize(&mut rng, problem, n)?;
    let initial_best = pop.elite.fitness;
    let mut evaluations = n;
    let mut trace = ConvergenceTrace::with_capacity(max_iter);
    let mut archive = DominantArchive::new(strategy.archive_capacity(problem.dimension()));

    for t in 1..=max_iter {
        let mut ctx = StepContext::new(&config.goa, t, max_iter)?;
        if strategy.use_apts {
            ctx = ctx.with_apts(strategy.apts_brownian_exponent)?;
        }

        let candidates = if strategy.use_ibuf {
            ibuf_candidates(&pop, &mut rng, &ctx, ibuf_phase(t, max_iter))
        } else if rng.uniform() < config.goa.exploit_probability {
            exploitation_candidates(&pop, &mut rng, &ctx)
        } else {
            exploration_candidates(&pop, &mut rng, &ctx)
        };
        let swept = pop.accept_greedy(problem, candidates)?;
        pop.refresh_elite();
        let escaped = escape_step(&mut pop, problem, &mut rng, &ctx)?;
        evaluations += 2 * n;

        if strategy.use_dprm {
            archive.update(&pop);
            let sampler = DprmSampler::new(&archive)?;
            let selected: Option<Vec<bool>> = match strategy.dprm_scope {
                DprmScope::All => None,
                DprmScope::NonImproved => {
                    Some(swept.iter().zip(&escaped).map(|(a, b)| !(a | b)).collect())
                }
            };
            evaluations +=
                dprm_restart(&mut pop, &sampler, problem, &mut rng, selected.as_deref())?;
        }

        trace.push(pop.elite.fitness);
    }

    Ok((
        RunRecord {
            seed: config.seed,
            best_fitness: pop.elite.fitness,
            best_position: pop.elite.position,
            initial_best,
            evaluations,
        },
        trace,
    ))
}
