//! CSV writers. Reals use the shortest representation that parses back to
//! the same `f64`; lines end in `\n`.

use std::fs::File;
use std::path::Path;

use csv::{Terminator, Writer, WriterBuilder};
use gazelle::stats::{self, Verdict};

use crate::campaign::RunResult;
use crate::config::Campaign;
use crate::error::BenchError;

pub const RESULTS: &str = "results.csv";
pub const SUMMARY: &str = "summary.csv";
pub const STATS: &str = "stats.csv";
pub const TRACES: &str = "traces";

/// Round-trip formatting: plain decimal for moderate magnitudes, scientific
/// otherwise.
pub fn fmt_f64(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn writer(path: &Path) -> Result<Writer<File>, BenchError> {
    let file = File::create(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(WriterBuilder::new()
        .terminator(Terminator::Any(b'\n'))
        .from_writer(file))
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Win => "win",
        Verdict::Tie => "tie",
        Verdict::Loss => "loss",
    }
}

/// Final best values grouped as `[algorithm][problem] -> runs`.
fn finals(campaign: &Campaign, results: &[RunResult]) -> Vec<Vec<Vec<f64>>> {
    let mut grid = vec![vec![Vec::new(); campaign.problems.len()]; campaign.algorithms.len()];
    for r in results {
        grid[r.algorithm][r.problem].push(r.record.best_fitness);
    }
    grid
}

pub fn write_all(
    campaign: &Campaign,
    results: &[RunResult],
    out: &Path,
    timing: bool,
) -> Result<(), BenchError> {
    write_results(campaign, results, &out.join(RESULTS), timing)?;
    let grid = finals(campaign, results);
    write_summary(campaign, &grid, &out.join(SUMMARY))?;
    write_stats(campaign, &grid, &out.join(STATS))?;
    for r in results {
        let name = format!(
            "{}_{}_{}.csv",
            campaign.algorithms[r.algorithm].name,
            campaign.problems[r.problem].label(),
            r.run
        );
        write_trace(r, &out.join(TRACES).join(name))?;
    }
    Ok(())
}

fn write_results(
    campaign: &Campaign,
    results: &[RunResult],
    path: &Path,
    timing: bool,
) -> Result<(), BenchError> {
    let mut w = writer(path)?;
    let mut header = vec![
        "algorithm",
        "problem",
        "dim",
        "run_index",
        "seed",
        "best_fitness",
        "best_position",
    ];
    if timing {
        header.push("wall_ms");
    }
    w.write_record(&header)?;
    for r in results {
        let problem = &campaign.problems[r.problem];
        let position: Vec<String> = r.record.best_position.iter().map(|v| fmt_f64(*v)).collect();
        let mut row = vec![
            campaign.algorithms[r.algorithm].name.clone(),
            problem.name.clone(),
            problem.dim.to_string(),
            r.run.to_string(),
            r.seed.to_string(),
            fmt_f64(r.record.best_fitness),
            position.join(";"),
        ];
        if timing {
            row.push(fmt_f64(r.wall_ms));
        }
        w.write_record(&row)?;
    }
    w.flush().map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_summary(
    campaign: &Campaign,
    grid: &[Vec<Vec<f64>>],
    path: &Path,
) -> Result<(), BenchError> {
    let mut w = writer(path)?;
    w.write_record([
        "algorithm",
        "problem",
        "dim",
        "runs",
        "mean",
        "std",
        "best",
        "median",
    ])?;
    for (a, algorithm) in campaign.algorithms.iter().enumerate() {
        for (p, problem) in campaign.problems.iter().enumerate() {
            let values = &grid[a][p];
            let s = stats::summarize(values)?;
            w.write_record([
                algorithm.name.clone(),
                problem.name.clone(),
                problem.dim.to_string(),
                values.len().to_string(),
                fmt_f64(s.mean),
                fmt_f64(s.std),
                fmt_f64(s.best),
                fmt_f64(stats::median(values)?),
            ])?;
        }
    }
    w.flush().map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Rows of three kinds, told apart by the `test` column:
///
/// - `wilcoxon`: one per problem and non-baseline algorithm; the verdict is
///   the algorithm's result against the baseline;
/// - `win_tie_loss`: per non-baseline algorithm, counts over all problems
///   written as `w/t/l` in the verdict column;
/// - `friedman`: per algorithm, average rank over problems (ranking the
///   mean final values); the statistic and p-value repeat on each row.
///   Omitted when the campaign has fewer than two problems or algorithms.
fn write_stats(campaign: &Campaign, grid: &[Vec<Vec<f64>>], path: &Path) -> Result<(), BenchError> {
    let mut w = writer(path)?;
    w.write_record([
        "test",
        "problem",
        "algorithm",
        "baseline",
        "statistic",
        "p_value",
        "verdict",
        "avg_rank",
    ])?;
    let base = campaign
        .algorithms
        .iter()
        .position(|a| a.name == campaign.baseline)
        .expect("baseline validated at parse time");
    let baseline = campaign.baseline.as_str();

    for (a, algorithm) in campaign.algorithms.iter().enumerate() {
        if a == base {
            continue;
        }
        let mut tests = Vec::new();
        for (p, problem) in campaign.problems.iter().enumerate() {
            let t = stats::wilcoxon_rank_sum(&grid[a][p], &grid[base][p])?;
            w.write_record([
                "wilcoxon",
                &problem.label(),
                &algorithm.name,
                baseline,
                &fmt_f64(t.statistic),
                &fmt_f64(t.p_value),
                verdict_name(t.verdict),
                "",
            ])?;
            tests.push(t);
        }
        let (wins, ties, losses) = stats::win_tie_loss(&tests);
        w.write_record([
            "win_tie_loss",
            "",
            &algorithm.name,
            baseline,
            "",
            "",
            &format!("{wins}/{ties}/{losses}"),
            "",
        ])?;
    }

    if campaign.problems.len() >= 2 && campaign.algorithms.len() >= 2 {
        let table: Vec<Vec<f64>> = (0..campaign.problems.len())
            .map(|p| {
                grid.iter()
                    .map(|per_algo| stats::summarize(&per_algo[p]).map(|s| s.mean))
                    .collect::<gazelle::Result<Vec<f64>>>()
            })
            .collect::<gazelle::Result<_>>()?;
        let f = stats::friedman(&table)?;
        for (algorithm, rank) in campaign.algorithms.iter().zip(&f.avg_ranks) {
            w.write_record([
                "friedman",
                "",
                &algorithm.name,
                "",
                &fmt_f64(f.statistic),
                &fmt_f64(f.p_value),
                "",
                &fmt_f64(*rank),
            ])?;
        }
    }
    w.flush().map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_trace(result: &RunResult, path: &Path) -> Result<(), BenchError> {
    let mut w = writer(path)?;
    w.write_record(["iteration", "best_so_far"])?;
    for (i, v) in result.trace.values().iter().enumerate() {
        w.write_record([(i + 1).to_string(), fmt_f64(*v)])?;
    }
    w.flush().map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}
