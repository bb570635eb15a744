use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use gazelle::{problems, run_variant, RunConfig, Variant};
use gazelle_bench::{parse_config, run_campaign, Overrides, RunOptions};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "bench",
    version,
    about = "Seeded benchmark campaigns for GOA and MSIGOA"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a campaign described by a JSON file.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        iters: Option<usize>,
        #[arg(long)]
        pop: Option<usize>,
        #[arg(long)]
        runs: Option<usize>,
        /// Worker threads (default: one per core).
        #[arg(long)]
        workers: Option<usize>,
        /// Leave the wall-clock column out of results.csv.
        #[arg(long)]
        no_timing: bool,
    },
    /// List the problem catalog and the algorithm variants.
    List,
    /// Run one algorithm once and print the result as JSON.
    Solve {
        #[arg(long)]
        algo: String,
        #[arg(long)]
        problem: String,
        /// Dimension of scalable problems.
        #[arg(long, default_value_t = 10)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        iters: usize,
        #[arg(long, default_value_t = 30)]
        pop: usize,
    },
}

#[derive(Serialize)]
struct Solution<'a> {
    algorithm: &'a str,
    problem: &'a str,
    dim: usize,
    seed: u64,
    best_fitness: f64,
    objective: f64,
    feasible: bool,
    best_position: &'a [f64],
    evaluations: usize,
}

fn list() {
    println!("problems:");
    for name in problems::names() {
        match problems::fixed_dimension(name) {
            Some(d) => println!("  {name} (dim {d})"),
            None => println!("  {name} (any dim >= 2)"),
        }
    }
    println!("algorithms:");
    for v in Variant::ALL {
        let (ibuf, apts, dprm) = v.flags();
        println!("  {v} (ibuf={ibuf}, apts={apts}, dprm={dprm})");
    }
}

fn solve(algo: &str, name: &str, dim: usize, seed: u64, iters: usize, pop: usize) -> Result<()> {
    let variant: Variant = algo.parse()?;
    let dim = problems::fixed_dimension(name).unwrap_or(dim);
    let problem = problems::by_name(name, Some(dim))?;
    let config = RunConfig {
        population_size: pop,
        max_iterations: iters,
        runs: 1,
        seed,
        strategy: variant.strategy(),
        ..RunConfig::default()
    };
    let (record, _) = run_variant(&problem, &config)?;
    let solution = Solution {
        algorithm: variant.name(),
        problem: problem.name(),
        dim,
        seed,
        best_fitness: record.best_fitness,
        objective: problem.objective(&record.best_position),
        feasible: problem.is_feasible(&record.best_position),
        best_position: &record.best_position,
        evaluations: record.evaluations,
    };
    println!("{}", serde_json::to_string_pretty(&solution)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => {
            list();
            Ok(())
        }
        Command::Solve {
            algo,
            problem,
            dim,
            seed,
            iters,
            pop,
        } => solve(&algo, &problem, dim, seed, iters, pop),
        Command::Run {
            config,
            out,
            seed,
            iters,
            pop,
            runs,
            workers,
            no_timing,
        } => {
            let overrides = Overrides {
                seed,
                iterations: iters,
                population: pop,
                runs,
            };
            parse_config(&config, &overrides)
                .and_then(|campaign| {
                    let options = RunOptions {
                        workers,
                        timing: !no_timing,
                    };
                    run_campaign(&campaign, &out, &options).map(|r| (campaign, r))
                })
                .map(|(campaign, results)| {
                    eprintln!(
                        "{} runs ({} algorithms x {} problems) written to {}",
                        results.len(),
                        campaign.algorithms.len(),
                        campaign.problems.len(),
                        out.display()
                    );
                })
                .with_context(|| format!("campaign {}", config.display()))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
