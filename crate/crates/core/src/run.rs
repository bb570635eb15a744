use serde::{Deserialize, Serialize};

use crate::error::{invalid_argument, Result};
use crate::goa::GoaParams;
use crate::msigoa::StrategyConfig;

/// Settings for one optimizer run (and for multi-run campaigns).
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub population_size: usize,
    pub max_iterations: usize,
    pub runs: usize,
    pub seed: u64,
    pub goa: GoaParams,
    pub strategy: StrategyConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            population_size: 30,
            max_iterations: 500,
            runs: 51,
            seed: 0,
            goa: GoaParams::default(),
            strategy: StrategyConfig::default(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(invalid_argument(format!(
                "population_size must be >= 2, got {}",
                self.population_size
            )));
        }
        if self.max_iterations < 1 {
            return Err(invalid_argument("max_iterations must be >= 1"));
        }
        if self.runs < 1 {
            return Err(invalid_argument("runs must be >= 1"));
        }
        self.goa.validate()?;
        self.strategy.validate()
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Best-so-far penalized fitness after each iteration `t = 1..=T`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ConvergenceTrace(Vec<f64>);

impl ConvergenceTrace {
    pub fn with_capacity(n: usize) -> Self {
        Self(Vec::with_capacity(n))
    }

    pub(crate) fn push(&mut self, value: f64) {
        self.0.push(value);
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<f64> {
        self.0.last().copied()
    }

    pub fn is_monotone(&self) -> bool {
        self.0.windows(2).all(|w| w[1] <= w[0])
    }
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    pub best_fitness: f64,
    pub best_position: Vec<f64>,
    /// Elite fitness right after initialization.
    pub initial_best: f64,
    pub evaluations: usize,
}
