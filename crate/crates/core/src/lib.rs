//! Gazelle optimization algorithm (GOA) and its multi-strategy improved
//! variant (MSIGOA).
//!
//! The crate provides:
//!
//! - [`goa`]: the baseline optimizer, its update rules and its run loop;
//! - [`msigoa`]: the three improvement strategies, the eight-variant
//!   ablation matrix and the assembled run loop;
//! - [`stochastics`]: Brownian and Lévy motion generators plus the schedule
//!   factors;
//! - [`problems`]: a classic benchmark suite and three constrained
//!   engineering design problems;
//! - [`stats`]: summaries, Wilcoxon rank-sum and Friedman tests.
//!
//! Every run is a pure function of its [`RunConfig`], including the seed.
//!
//! ```
//! use gazelle::{problems, run_variant, RunConfig, Variant};
//!
//! let problem = problems::by_name("sphere", Some(5)).unwrap();
//! let config = RunConfig {
//!     max_iterations: 100,
//!     seed: 7,
//!     strategy: Variant::Msigoa.strategy(),
//!     ..RunConfig::default()
//! };
//! let (record, trace) = run_variant(&problem, &config).unwrap();
//! assert_eq!(trace.len(), 100);
//! assert!(record.best_fitness < 1e-3);
//! ```

pub mod error;
pub mod goa;
pub mod msigoa;
pub mod population;
pub mod problem;
pub mod problems;
pub mod rng;
pub mod run;
pub mod special;
pub mod stats;
pub mod stochastics;

pub use error::{Error, Result};
pub use goa::{run_goa, GoaParams};
pub use msigoa::{run_variant, DprmScope, StrategyConfig, Variant};
pub use population::{Agent, Population};
pub use problem::{clamp, Bounds, Constraint, KnownOptimum, Problem};
pub use rng::RngStream;
pub use run::{ConvergenceTrace, RunConfig, RunRecord};
pub use stochastics::{BrownianExponent, CfVariant, LevyParams};

// The guide's code listings run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/quickstart.md")]
    mod quickstart {}
    #[doc = include_str!("../../../book/src/motion.md")]
    mod motion {}
    #[doc = include_str!("../../../book/src/baseline.md")]
    mod baseline {}
    #[doc = include_str!("../../../book/src/strategies.md")]
    mod strategies {}
    #[doc = include_str!("../../../book/src/problems.md")]
    mod problems {}
}
