//! Seeded experiment harness for the gazelle optimizers.
//!
//! A [`Campaign`] lists algorithms (named strategy configurations), problems
//! and a run budget. [`run_campaign`] executes every `(algorithm, problem,
//! run)` triple, in parallel if asked, and writes plot-ready CSV files whose
//! numeric content does not depend on the worker count.

pub mod campaign;
pub mod config;
pub mod error;
pub mod output;

pub use campaign::{derive_seed, execute, run_campaign, RunOptions, RunResult};
pub use config::{parse_config, parse_config_str, Algorithm, Campaign, Overrides, ProblemSpec};
pub use error::BenchError;

// The guide's campaign chapter runs as doc-tests here.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/statistics.md")]
mod statistics {}
