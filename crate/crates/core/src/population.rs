use crate::error::{invalid_argument, Result};
use crate::problem::{clamp_in_place, Problem};

/// A candidate position with its cached (penalized) fitness.
#[derive(Debug, Clone, PartialEq)]
pub struct Agent {
    pub position: Vec<f64>,
    pub fitness: f64,
}

impl Agent {
    pub fn evaluated(problem: &Problem, position: Vec<f64>) -> Result<Self> {
        let fitness = problem.evaluate(&position)?;
        Ok(Self { position, fitness })
    }
}

/// The agents of one run plus the best-so-far copy.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub agents: Vec<Agent>,
    pub elite: Agent,
}

impl Population {
    /// Builds a population from evaluated agents; the elite is the first
    /// agent with the lowest fitness.
    pub fn from_agents(agents: Vec<Agent>) -> Result<Self> {
        if agents.len() < 2 {
            return Err(invalid_argument("a population needs at least two agents"));
        }
        let elite = agents
            .iter()
            .fold(
                &agents[0],
                |best, a| if a.fitness < best.fitness { a } else { best },
            )
            .clone();
        Ok(Self { agents, elite })
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.elite.position.len()
    }

    /// Replaces the elite with the best agent when that agent is strictly
    /// better. Returns whether the elite changed.
    pub fn refresh_elite(&mut self) -> bool {
        let mut changed = false;
        for a in &self.agents {
            if a.fitness < self.elite.fitness {
                self.elite = a.clone();
                changed = true;
            }
        }
        changed
    }

    /// Clamps, evaluates and greedily accepts one candidate per agent.
    /// Agent `i` is replaced only when its candidate is strictly better.
    /// Returns a flag per agent telling whether it moved.
    pub(crate) fn accept_greedy(
        &mut self,
        problem: &Problem,
        candidates: Vec<Vec<f64>>,
    ) -> Result<Vec<bool>> {
        debug_assert_eq!(candidates.len(), self.agents.len());
        let mut moved = Vec::with_capacity(candidates.len());
        for (agent, mut cand) in self.agents.iter_mut().zip(candidates) {
            clamp_in_place(&mut cand, problem.bounds());
            let fitness = problem.evaluate(&cand)?;
            if fitness < agent.fitness {
                agent.position = cand;
                agent.fitness = fitness;
                moved.push(true);
            } else {
                moved.push(false);
            }
        }
        Ok(moved)
    }

    /// Indices of agents ordered by fitness ascending (stable on ties).
    pub fn ranked_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.agents.len()).collect();
        idx.sort_by(|&a, &b| self.agents[a].fitness.total_cmp(&self.agents[b].fitness));
        idx
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Bounds;

    fn agent(x: f64, f: f64) -> Agent {
        Agent {
            position: vec![x],
            fitness: f,
        }
    }

    #[test]
    fn elite_is_best_agent() {
        let p = Population::from_agents(vec![agent(0.0, 3.0), agent(1.0, 1.0), agent(2.0, 1.0)])
            .unwrap();
        assert_eq!(p.elite.position, vec![1.0]);
        assert_eq!(p.ranked_indices(), vec![1, 2, 0]);
    }

    #[test]
    fn single_agent_rejected() {
        assert!(Population::from_agents(vec![agent(0.0, 0.0)]).is_err());
    }

    #[test]
    fn greedy_acceptance_keeps_the_better() {
        let problem = Problem::new("abs", Bounds::uniform(1, -5.0, 5.0).unwrap(), |x| {
            x[0].abs()
        });
        let mut p = Population::from_agents(vec![agent(2.0, 2.0), agent(-1.0, 1.0)]).unwrap();
        let moved = p
            .accept_greedy(&problem, vec![vec![1.0], vec![-9.0]])
            .unwrap();
        assert_eq!(moved, vec![true, false]);
        assert_eq!(p.agents[0], agent(1.0, 1.0));
        assert_eq!(p.agents[1], agent(-1.0, 1.0));
    }
}
