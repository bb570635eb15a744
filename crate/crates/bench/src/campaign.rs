//! Campaign execution.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use gazelle::{run_variant, ConvergenceTrace, RunRecord};
use rayon::prelude::*;

use crate::config::Campaign;
use crate::error::BenchError;
use crate::output;

/// FNV-1a over the bytes of `s`, continuing from `hash`.
fn fnv1a(mut hash: u64, bytes: &[u8]) -> u64 {
    for b in bytes {
        hash ^= u64::from(*b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of run `run` of `algorithm` on `problem` (a problem label). Depends
/// only on these values, never on the campaign's list order.
pub fn derive_seed(base_seed: u64, algorithm: &str, problem: &str, run: usize) -> u64 {
    let mut h = fnv1a(0xcbf2_9ce4_8422_2325, algorithm.as_bytes());
    h = fnv1a(h, &[0xff]);
    h = fnv1a(h, problem.as_bytes());
    let mut z = mix64(base_seed ^ mix64(h));
    z = mix64(z.wrapping_add((run as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)));
    z
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Worker threads; `None` uses one per core.
    pub workers: Option<usize>,
    /// Record wall-clock time per run in `results.csv`.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            workers: None,
            timing: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub algorithm: usize,
    pub problem: usize,
    pub run: usize,
    pub seed: u64,
    pub record: RunRecord,
    pub trace: ConvergenceTrace,
    pub wall_ms: f64,
}

/// Runs every `(algorithm, problem, run)` triple and returns the results
/// sorted by algorithm, problem and run index (campaign order).
pub fn execute(campaign: &Campaign, workers: Option<usize>) -> Result<Vec<RunResult>, BenchError> {
    let built = campaign
        .problems
        .iter()
        .map(|p| p.build())
        .collect::<gazelle::Result<Vec<_>>>()?;
    let runs = campaign.run_config.runs;
    let jobs: Vec<(usize, usize, usize)> = (0..campaign.algorithms.len())
        .flat_map(|a| (0..built.len()).flat_map(move |p| (0..runs).map(move |r| (a, p, r))))
        .collect();

    let run_one = |&(a, p, r): &(usize, usize, usize)| -> Result<RunResult, BenchError> {
        let algorithm = &campaign.algorithms[a];
        let seed = derive_seed(
            campaign.run_config.seed,
            &algorithm.name,
            &campaign.problems[p].label(),
            r,
        );
        let config = campaign.config_for(algorithm, seed);
        let start = Instant::now();
        let (record, trace) = run_variant(&built[p], &config)?;
        Ok(RunResult {
            algorithm: a,
            problem: p,
            run: r,
            seed,
            record,
            trace,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        })
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| BenchError::Config {
            key: "workers".into(),
            message: e.to_string(),
        })?;
    let mut results =
        pool.install(|| jobs.par_iter().map(run_one).collect::<Result<Vec<_>, _>>())?;
    results.sort_by_key(|r| (r.algorithm, r.problem, r.run));
    Ok(results)
}

/// Executes the campaign and writes `results.csv`, `summary.csv`,
/// `stats.csv` and `traces/` under `out`. The output directory is created
/// and probed before any run starts.
pub fn run_campaign(
    campaign: &Campaign,
    out: &Path,
    options: &RunOptions,
) -> Result<Vec<RunResult>, BenchError> {
    let traces = out.join("traces");
    let io = |path: PathBuf| move |source| BenchError::Io { path, source };
    fs::create_dir_all(&traces).map_err(io(traces.clone()))?;
    for name in [output::RESULTS, output::SUMMARY, output::STATS] {
        let path = out.join(name);
        fs::File::create(&path).map_err(io(path.clone()))?;
    }

    let results = execute(campaign, options.workers)?;
    output::write_all(campaign, &results, out, options.timing)?;
    Ok(results)
}
