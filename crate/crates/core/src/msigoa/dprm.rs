//! Dominant-population restart.
//!
//! Every agent is pulled toward the mean of three reference points (itself,
//! the weighted center of the dominant archive, the elite) and perturbed by
//! Gaussian noise whose covariance is the archive's spread about its center:
//!
//! ```text
//! candidate = (X_i + x_d + Elite) / 3 + g,    g ~ N(0, C)
//! x_d       = sum_i w_i X_i                   (members ranked best first)
//! w_i       = (ln(n + 0.5) - ln i) / sum_k (ln(n + 0.5) - ln k)
//! C         = (1/n) sum_k (X_k - x_d)(X_k - x_d)^T
//! ```
//!
//! The noise is drawn as `g = sum_k eta_k (X_k - x_d) / sqrt(n)` with
//! independent standard normal `eta_k`, which has covariance exactly `C`
//! without forming or factoring it. The `eta_k` are drawn in ranked order.

use crate::error::{invalid_argument, Error, Result};
use crate::population::{Agent, Population};
use crate::problem::Problem;
use crate::rng::RngStream;

use super::archive::DominantArchive;

/// Log-decreasing recombination weights for ranks `1..=n`.
pub fn dprm_weights(n: usize) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(invalid_argument("restart weights need n >= 1"));
    }
    let top = (n as f64 + 0.5).ln();
    let raw: Vec<f64> = (1..=n).map(|i| top - (i as f64).ln()).collect();
    let total: f64 = raw.iter().sum();
    Ok(raw.into_iter().map(|w| w / total).collect())
}

/// Center and noise generator built from one archive snapshot.
#[derive(Debug, Clone)]
pub struct DprmSampler {
    center: Vec<f64>,
    /// `(X_k - x_d) / sqrt(n)` in ranked order.
    scaled_deviations: Vec<Vec<f64>>,
}

impl DprmSampler {
    pub fn new(archive: &DominantArchive) -> Result<Self> {
        if archive.is_empty() {
            return Err(Error::InvalidState("dominant archive is empty".into()));
        }
        let mut ranked: Vec<&Agent> = archive.members().collect();
        ranked.sort_by(|a, b| a.fitness.total_cmp(&b.fitness));
        let n = ranked.len();
        let d = ranked[0].position.len();
        let weights = dprm_weights(n)?;

        let mut center = vec![0.0; d];
        for (w, m) in weights.iter().zip(&ranked) {
            for (c, x) in center.iter_mut().zip(&m.position) {
                *c += w * x;
            }
        }
        let inv_sqrt_n = 1.0 / (n as f64).sqrt();
        let scaled_deviations = ranked
            .iter()
            .map(|m| {
                m.position
                    .iter()
                    .zip(&center)
                    .map(|(x, c)| (x - c) * inv_sqrt_n)
                    .collect()
            })
            .collect();
        Ok(Self {
            center,
            scaled_deviations,
        })
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn archive_size(&self) -> usize {
        self.scaled_deviations.len()
    }

    /// One noise vector; consumes one normal per archive member.
    pub fn sample(&self, rng: &mut RngStream) -> Vec<f64> {
        let mut g = vec![0.0; self.center.len()];
        for dev in &self.scaled_deviations {
            let eta = rng.normal();
            for (gj, dj) in g.iter_mut().zip(dev) {
                *gj += eta * dj;
            }
        }
        g
    }
}

/// Weighted center of the archive plus one noise draw.
pub fn dprm_center_and_sample(
    archive: &DominantArchive,
    rng: &mut RngStream,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let sampler = DprmSampler::new(archive)?;
    let g = sampler.sample(rng);
    Ok((sampler.center, g))
}

/// Restart candidate with explicit noise: `(X + x_d + Elite) / 3 + g`.
pub fn restart_move(x: &[f64], center: &[f64], elite: &[f64], g: &[f64]) -> Vec<f64> {
    (0..x.len())
        .map(|j| (x[j] + center[j] + elite[j]) / 3.0 + g[j])
        .collect()
}

/// Restarts the selected agents (all when `selected` is `None`) with a fresh
/// noise draw each, keeping a candidate only if it improves the agent.
/// Returns the number of evaluations spent.
pub fn dprm_restart(
    pop: &mut Population,
    sampler: &DprmSampler,
    problem: &Problem,
    rng: &mut RngStream,
    selected: Option<&[bool]>,
) -> Result<usize> {
    let elite = pop.elite.position.clone();
    let mut evaluations = 0;
    for (i, agent) in pop.agents.iter_mut().enumerate() {
        if selected.is_some_and(|s| !s[i]) {
            continue;
        }
        let g = sampler.sample(rng);
        let cand = crate::problem::clamp(
            &restart_move(&agent.position, sampler.center(), &elite, &g),
            problem.bounds(),
        );
        let fitness = problem.evaluate(&cand)?;
        evaluations += 1;
        if fitness < agent.fitness {
            agent.position = cand;
            agent.fitness = fitness;
        }
    }
    pop.refresh_elite();
    Ok(evaluations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Bounds;

    fn agent(x: Vec<f64>, f: f64) -> Agent {
        Agent {
            position: x,
            fitness: f,
        }
    }

    #[test]
    fn weights_for_small_n() {
        assert_eq!(dprm_weights(1).unwrap(), vec![1.0]);
        assert!(dprm_weights(0).is_err());
        // 40-digit reference: (0.63704257124121675, 0.28457025743803289, 0.07838717132075036)
        let w = dprm_weights(3).unwrap();
        let expect = [
            0.637_042_571_241_216_8,
            0.284_570_257_438_032_9,
            0.078_387_171_320_750_36,
        ];
        for (a, b) in w.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn identical_members_give_zero_noise() {
        let mut archive = DominantArchive::new(5);
        for f in [1.0, 2.0, 3.0] {
            archive.push(agent(vec![0.5, -1.5], f));
        }
        let (c, g) = dprm_center_and_sample(&archive, &mut RngStream::new(1)).unwrap();
        for (a, b) in c.iter().zip([0.5, -1.5]) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(g.iter().all(|v| v.abs() < 1e-15));
    }

    #[test]
    fn spread_on_one_axis_stays_on_that_axis() {
        let mut archive = DominantArchive::new(5);
        archive.push(agent(vec![0.0, 0.0], 1.0));
        archive.push(agent(vec![2.0, 0.0], 2.0));
        let w = dprm_weights(2).unwrap();
        let mut rng = RngStream::new(8);
        let sampler = DprmSampler::new(&archive).unwrap();
        assert!((sampler.center()[0] - 2.0 * w[1]).abs() < 1e-15);
        for _ in 0..100 {
            assert_eq!(sampler.sample(&mut rng)[1], 0.0);
        }
    }

    #[test]
    fn empty_archive_is_invalid_state() {
        let archive = DominantArchive::new(3);
        assert!(matches!(
            dprm_center_and_sample(&archive, &mut RngStream::new(0)),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn fixed_point_and_greedy_rule() {
        let p = Problem::new("sphere", Bounds::uniform(2, -5.0, 5.0).unwrap(), |x| {
            x.iter().map(|v| v * v).sum()
        });
        let mut archive = DominantArchive::new(4);
        archive.push(agent(vec![1.0, 1.0], 2.0));
        archive.push(agent(vec![1.0, 1.0], 2.0));
        let sampler = DprmSampler::new(&archive).unwrap();
        // Every agent sits on the center and the elite: candidate == X.
        let mut pop =
            Population::from_agents(vec![agent(vec![1.0, 1.0], 2.0), agent(vec![1.0, 1.0], 2.0)])
                .unwrap();
        let before = pop.clone();
        dprm_restart(&mut pop, &sampler, &p, &mut RngStream::new(2), None).unwrap();
        assert_eq!(pop, before);

        // A worse agent is pulled in; the elite itself cannot get worse.
        let mut pop = Population::from_agents(vec![
            agent(vec![1.0, 1.0], 2.0),
            agent(vec![4.0, 4.0], 32.0),
        ])
        .unwrap();
        dprm_restart(&mut pop, &sampler, &p, &mut RngStream::new(2), None).unwrap();
        assert_eq!(pop.agents[0], agent(vec![1.0, 1.0], 2.0));
        assert_eq!(pop.agents[1].position, vec![2.0, 2.0]);
    }

    #[test]
    fn unselected_agents_are_skipped() {
        let p = Problem::new("sphere", Bounds::uniform(1, -5.0, 5.0).unwrap(), |x| {
            x[0] * x[0]
        });
        let mut archive = DominantArchive::new(4);
        archive.push(agent(vec![0.0], 0.0));
        let sampler = DprmSampler::new(&archive).unwrap();
        let mut pop =
            Population::from_agents(vec![agent(vec![3.0], 9.0), agent(vec![3.0], 9.0)]).unwrap();
        let evals = dprm_restart(
            &mut pop,
            &sampler,
            &p,
            &mut RngStream::new(0),
            Some(&[false, true]),
        )
        .unwrap();
        assert_eq!(evals, 1);
        assert_eq!(pop.agents[0].position, vec![3.0]);
        assert_eq!(pop.agents[1].position, vec![2.0]);
    }
}
