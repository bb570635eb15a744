//! Baseline gazelle optimizer.
//!
//! Each iteration flips a fair coin: heads moves every agent with the
//! Brownian grazing rule, tails moves the first half of the herd with the
//! Lévy escape rule and the second half with the Brownian pursuit rule.
//! Candidates are clamped to the box and accepted greedily, then the
//! predator-escape rule runs over the whole herd.
//!
//! # Random draw order
//!
//! Per iteration: one uniform for the coin, then the sweep draws agent by
//! agent, then the escape draws agent by agent.
//!
//! | rule | draws per agent |
//! |------|-----------------|
//! | grazing | `R_b` (D normals), then `rand` (D uniforms) |
//! | Lévy escape | `R_L` (D Lévy components), then `rand` (D uniforms) |
//! | Brownian pursuit | `R_b` (D normals), then `R_L` (D Lévy components) |
//! | predator escape | `r2`; then `U` (D uniforms) and `rand` (D uniforms) when `r2 <= PSR`, otherwise `r1` and two distinct indices |
//!
//! A Lévy component draws `z` then `y`, redrawing `y` while it is zero.

use crate::error::{invalid_argument, Error, Result};
use crate::population::{Agent, Population};
use crate::problem::Problem;
use crate::rng::RngStream;
use crate::run::{ConvergenceTrace, RunConfig, RunRecord};
use crate::stochastics::{
    apts_brownian_factor, apts_levy_factor, cf_factor, levy_component, BrownianExponent, CfVariant,
    LevyParams,
};

/// Threshold of the escape mask: `U_j = 0` when its uniform falls below it.
pub const ESCAPE_MASK_THRESHOLD: f64 = 0.34;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoaParams {
    /// Grazing speed `s`.
    pub s: f64,
    /// Predator success rate.
    pub psr: f64,
    pub cf_variant: CfVariant,
    /// Probability that an iteration uses the grazing sweep.
    pub exploit_probability: f64,
    pub levy: LevyParams,
}

impl Default for GoaParams {
    fn default() -> Self {
        Self {
            s: 0.88,
            psr: 0.34,
            cf_variant: CfVariant::Rising,
            exploit_probability: 0.5,
            levy: LevyParams::default(),
        }
    }
}

impl GoaParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.s.is_finite() && self.s > 0.0) {
            return Err(invalid_argument(format!(
                "s must be positive, got {}",
                self.s
            )));
        }
        if !(0.0..=1.0).contains(&self.psr) {
            return Err(invalid_argument(format!(
                "psr must lie in [0, 1], got {}",
                self.psr
            )));
        }
        if !(0.0..=1.0).contains(&self.exploit_probability) {
            return Err(invalid_argument(format!(
                "exploit_probability must lie in [0, 1], got {}",
                self.exploit_probability
            )));
        }
        Ok(())
    }
}

/// Per-iteration constants shared by all update rules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepContext {
    pub t: usize,
    pub max_iter: usize,
    pub s: f64,
    pub psr: f64,
    /// +1 on odd iterations, -1 on even ones.
    pub mu: f64,
    pub cf: f64,
    pub levy: LevyParams,
    /// Multipliers applied to freshly drawn `R_b` / `R_L` (adaptive tuning).
    pub brownian_scale: Option<f64>,
    pub levy_scale: Option<f64>,
}

impl StepContext {
    pub fn new(params: &GoaParams, t: usize, max_iter: usize) -> Result<Self> {
        Ok(Self {
            t,
            max_iter,
            s: params.s,
            psr: params.psr,
            mu: if t % 2 == 1 { 1.0 } else { -1.0 },
            cf: cf_factor(t, max_iter, params.cf_variant)?,
            levy: params.levy,
            brownian_scale: None,
            levy_scale: None,
        })
    }

    /// Enables the adaptive scaling of the motion vectors.
    pub fn with_apts(mut self, exponent: BrownianExponent) -> Result<Self> {
        self.brownian_scale = Some(apts_brownian_factor(self.t, self.max_iter, exponent)?);
        self.levy_scale = Some(apts_levy_factor(self.t, self.max_iter)?);
        Ok(self)
    }

    /// Draws `R_b` (after optional scaling).
    pub fn brownian(&self, rng: &mut RngStream, d: usize) -> Vec<f64> {
        let mut v = rng.normal_vec(d);
        if let Some(f) = self.brownian_scale {
            v.iter_mut().for_each(|x| *x *= f);
        }
        v
    }

    /// Draws `R_L` (after optional scaling).
    pub fn levy(&self, rng: &mut RngStream, d: usize) -> Vec<f64> {
        let mut v: Vec<f64> = (0..d).map(|_| levy_component(rng, &self.levy)).collect();
        if let Some(f) = self.levy_scale {
            v.iter_mut().for_each(|x| *x *= f);
        }
        v
    }
}

/// Uniform initialization inside the box, evaluated, elite set.
pub fn initialize(rng: &mut RngStream, problem: &Problem, n: usize) -> Result<Population> {
    if n < 2 {
        return Err(invalid_argument(format!(
            "population size must be >= 2, got {n}"
        )));
    }
    let b = problem.bounds();
    let agents = (0..n)
        .map(|_| {
            let x: Vec<f64> = b
                .lower()
                .iter()
                .zip(b.upper())
                .map(|(lo, hi)| lo + rng.uniform() * (hi - lo))
                .collect();
            Agent::evaluated(problem, x)
        })
        .collect::<Result<Vec<_>>>()?;
    Population::from_agents(agents)
}

/// Grazing move with explicit draws: `X + s * rand ⊙ R_b ⊙ (Elite - R_b ⊙ X)`.
pub fn grazing_move(x: &[f64], elite: &[f64], rb: &[f64], rand: &[f64], s: f64) -> Vec<f64> {
    (0..x.len())
        .map(|j| x[j] + s * rand[j] * rb[j] * (elite[j] - rb[j] * x[j]))
        .collect()
}

/// Lévy escape move with explicit draws:
/// `X + s * mu * rand ⊙ R_L ⊙ (Elite - R_L ⊙ X)`.
pub fn levy_move(x: &[f64], elite: &[f64], rl: &[f64], rand: &[f64], s: f64, mu: f64) -> Vec<f64> {
    (0..x.len())
        .map(|j| x[j] + s * mu * rand[j] * rl[j] * (elite[j] - rl[j] * x[j]))
        .collect()
}

/// Pursuit move with explicit draws:
/// `Elite + s * mu * CF * R ⊙ (R_L ⊙ Elite - X)`, where `R` is `R_b` for the
/// Brownian pursuit and `R_L` itself for the late-phase refinement.
pub fn pursuit_move(
    x: &[f64],
    elite: &[f64],
    r: &[f64],
    rl: &[f64],
    s: f64,
    mu: f64,
    cf: f64,
) -> Vec<f64> {
    (0..x.len())
        .map(|j| elite[j] + s * mu * cf * r[j] * (rl[j] * elite[j] - x[j]))
        .collect()
}

/// Grazing step: draws `R_b` then `rand` and applies [`grazing_move`].
pub fn exploit_step(x: &[f64], elite: &[f64], rng: &mut RngStream, ctx: &StepContext) -> Vec<f64> {
    let rb = ctx.brownian(rng, x.len());
    let u = rng.uniform_vec(x.len());
    grazing_move(x, elite, &rb, &u, ctx.s)
}

/// Lévy escape step: draws `R_L` then `rand` and applies [`levy_move`].
pub fn explore_levy_step(
    x: &[f64],
    elite: &[f64],
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Vec<f64> {
    let rl = ctx.levy(rng, x.len());
    let u = rng.uniform_vec(x.len());
    levy_move(x, elite, &rl, &u, ctx.s, ctx.mu)
}

/// Brownian pursuit step: draws `R_b` then `R_L` and applies [`pursuit_move`].
pub fn explore_brownian_step(
    x: &[f64],
    elite: &[f64],
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Vec<f64> {
    let rb = ctx.brownian(rng, x.len());
    let rl = ctx.levy(rng, x.len());
    pursuit_move(x, elite, &rb, &rl, ctx.s, ctx.mu, ctx.cf)
}

/// Candidates of the grazing sweep (every agent).
pub fn exploitation_candidates(
    pop: &Population,
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Vec<Vec<f64>> {
    let elite = &pop.elite.position;
    pop.agents
        .iter()
        .map(|a| exploit_step(&a.position, elite, rng, ctx))
        .collect()
}

/// Candidates of the exploration sweep: agents `0..N/2` take the Lévy rule,
/// the rest the Brownian pursuit rule.
pub fn exploration_candidates(
    pop: &Population,
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Vec<Vec<f64>> {
    let half = pop.len() / 2;
    let elite = &pop.elite.position;
    pop.agents
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if i < half {
                explore_levy_step(&a.position, elite, rng, ctx)
            } else {
                explore_brownian_step(&a.position, elite, rng, ctx)
            }
        })
        .collect()
}

/// Escape jump with explicit draws: `X + CF * U ⊙ (Lb + rand ⊙ (Ub - Lb))`.
pub fn escape_jump(
    x: &[f64],
    mask: &[f64],
    rand: &[f64],
    cf: f64,
    lb: &[f64],
    ub: &[f64],
) -> Vec<f64> {
    (0..x.len())
        .map(|j| x[j] + cf * mask[j] * (lb[j] + rand[j] * (ub[j] - lb[j])))
        .collect()
}

/// Escape drift with explicit draws: `X + (PSR (1 - r1) + r1) (X_A - X_B)`.
pub fn escape_drift(x: &[f64], xa: &[f64], xb: &[f64], r1: f64, psr: f64) -> Vec<f64> {
    let step = psr * (1.0 - r1) + r1;
    (0..x.len())
        .map(|j| x[j] + step * (xa[j] - xb[j]))
        .collect()
}

/// Raw (unclamped) predator-escape candidates.
///
/// With probability PSR an agent jumps by `CF * U ⊙ (Lb + rand ⊙ (Ub - Lb))`;
/// otherwise it moves by `(PSR (1 - r1) + r1) (X_A - X_B)` for two distinct
/// agents drawn from the herd as it stood before the sweep.
pub fn escape_candidates(
    pop: &Population,
    problem: &Problem,
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Result<Vec<Vec<f64>>> {
    let n = pop.len();
    if n < 2 {
        return Err(Error::InvalidState(
            "escape needs at least two agents to pick a distinct pair".into(),
        ));
    }
    let d = pop.dimension();
    let lb = problem.bounds().lower();
    let ub = problem.bounds().upper();
    let mut out = Vec::with_capacity(n);
    for agent in &pop.agents {
        let x = &agent.position;
        let r2 = rng.uniform();
        let cand: Vec<f64> = if r2 <= ctx.psr {
            let mask: Vec<f64> = (0..d)
                .map(|_| {
                    if rng.uniform() < ESCAPE_MASK_THRESHOLD {
                        0.0
                    } else {
                        1.0
                    }
                })
                .collect();
            let u = rng.uniform_vec(d);
            escape_jump(x, &mask, &u, ctx.cf, lb, ub)
        } else {
            let r1 = rng.uniform();
            let (a, b) = rng.distinct_pair(n);
            escape_drift(
                x,
                &pop.agents[a].position,
                &pop.agents[b].position,
                r1,
                ctx.psr,
            )
        };
        out.push(cand);
    }
    Ok(out)
}

/// Predator escape over the herd: candidates are clamped, evaluated and
/// accepted when they improve the agent; the elite is then refreshed.
pub fn escape_step(
    pop: &mut Population,
    problem: &Problem,
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Result<Vec<bool>> {
    let candidates = escape_candidates(pop, problem, rng, ctx)?;
    let moved = pop.accept_greedy(problem, candidates)?;
    pop.refresh_elite();
    Ok(moved)
}

/// One full baseline run.
pub fn run_goa(problem: &Problem, config: &RunConfig) -> Result<(RunRecord, ConvergenceTrace)> {
    config.validate()?;
    let n = config.population_size;
    let max_iter = config.max_iterations;
    let mut rng = RngStream::new(config.seed);
    let mut pop = initialize(&mut rng, problem, n)?;
    let initial_best = pop.elite.fitness;
    let mut evaluations = n;
    let mut trace = ConvergenceTrace::with_capacity(max_iter);

    for t in 1..=max_iter {
        let ctx = StepContext::new(&config.goa, t, max_iter)?;
        let candidates = if rng.uniform() < config.goa.exploit_probability {
            exploitation_candidates(&pop, &mut rng, &ctx)
        } else {
            exploration_candidates(&pop, &mut rng, &ctx)
        };
        pop.accept_greedy(problem, candidates)?;
        pop.refresh_elite();
        escape_step(&mut pop, problem, &mut rng, &ctx)?;
        evaluations += 2 * n;
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
