//! Iteration-based schedule of the update rules.
//!
//! The run is split into thirds. The early third grazes (every agent takes
//! the Brownian grazing rule), the middle third mixes Lévy escape (first half
//! of the herd) with Brownian pursuit (second half), and the late third
//! replaces the pursuit by a Lévy refinement around the elite. Boundary
//! iterations `t = T/3` and `t = 2T/3` belong to the later phase.

use crate::error::Result;
use crate::goa::{
    exploit_step, explore_brownian_step, explore_levy_step, pursuit_move, StepContext,
};
use crate::population::Population;
use crate::problem::Problem;
use crate::rng::RngStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Early,
    Middle,
    Late,
}

/// Phase of iteration `t` in `1..=T`: early iff `t < T/3`, middle iff
/// `T/3 <= t < 2T/3`, late otherwise.
pub fn ibuf_phase(t: usize, max_iter: usize) -> Phase {
    if 3 * t < max_iter {
        Phase::Early
    } else if 3 * t < 2 * max_iter {
        Phase::Middle
    } else {
        Phase::Late
    }
}

/// Late-phase refinement: `Elite + s * mu * CF * R_L ⊙ (R_L ⊙ Elite - X)`.
/// Draws one `R_L` vector, used in both places.
pub fn levy_refine_step(
    x: &[f64],
    elite: &[f64],
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Vec<f64> {
    let rl = ctx.levy(rng, x.len());
    pursuit_move(x, elite, &rl, &rl, ctx.s, ctx.mu, ctx.cf)
}

pub fn ibuf_candidates(
    pop: &Population,
    rng: &mut RngStream,
    ctx: &StepContext,
    phase: Phase,
) -> Vec<Vec<f64>> {
    let half = pop.len() / 2;
    let elite = &pop.elite.position;
    pop.agents
        .iter()
        .enumerate()
        .map(|(i, a)| match (phase, i < half) {
            (Phase::Early, _) => exploit_step(&a.position, elite, rng, ctx),
            (_, true) => explore_levy_step(&a.position, elite, rng, ctx),
            (Phase::Middle, false) => explore_brownian_step(&a.position, elite, rng, ctx),
            (Phase::Late, false) => levy_refine_step(&a.position, elite, rng, ctx),
        })
        .collect()
}

/// Scheduled sweep: candidates for the phase of `ctx.t`, clamped, accepted
/// greedily, elite refreshed. Returns which agents moved.
pub fn ibuf_update(
    pop: &mut Population,
    problem: &Problem,
    rng: &mut RngStream,
    ctx: &StepContext,
) -> Result<Vec<bool>> {
    let phase = ibuf_phase(ctx.t, ctx.max_iter);
    let candidates = ibuf_candidates(pop, rng, ctx, phase);
    let moved = pop.accept_greedy(problem, candidates)?;
    pop.refresh_elite();
    Ok(moved)
}
