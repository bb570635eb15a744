use std::collections::VecDeque;

use crate::population::{Agent, Population};

/// FIFO store of dominant agents from recent iterations.
///
/// Members are snapshots: later moves of the live agents do not touch them.
#[derive(Debug, Clone, PartialEq)]
pub struct DominantArchive {
    members: VecDeque<Agent>,
    capacity: usize,
}

impl DominantArchive {
    pub fn new(capacity: usize) -> Self {
        Self {
            members: VecDeque::with_capacity(capacity),
            capacity,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members oldest first.
    pub fn members(&self) -> impl ExactSizeIterator<Item = &Agent> {
        self.members.iter()
    }

    /// Appends one snapshot, evicting the oldest entries beyond capacity.
    pub fn push(&mut self, agent: Agent) {
        self.members.push_back(agent);
        while self.members.len() > self.capacity {
            self.members.pop_front();
        }
    }

    /// Appends the best `ceil(N/2)` agents of the population, best first.
    pub fn update(&mut self, pop: &Population) {
        let take = pop.len().div_ceil(2);
        for i in pop.ranked_indices().into_iter().take(take) {
            self.push(pop.agents[i].clone());
        }
    }
}
