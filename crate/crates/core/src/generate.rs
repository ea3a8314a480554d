//! Seeded random games.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CrgError, Result};
use crate::game::{numbered_ids, Game, GameParts, GoalSet};
use crate::quantity::Quantity;

/// Shape of a random game.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomParams {
    pub num_agents: usize,
    pub num_goals: usize,
    pub num_resources: usize,
    /// Endowments and requirements are drawn uniformly from `0..=max_value`.
    pub max_value: u64,
    /// Probability that a given goal is in a given agent's goal set.
    pub goal_density: f64,
}

impl RandomParams {
    pub fn validate(&self) -> Result<()> {
        if self.num_agents == 0 || self.num_goals == 0 || self.num_resources == 0 {
            return Err(CrgError::input("agent, goal and resource counts must be at least 1"));
        }
        if !(self.goal_density > 0.0 && self.goal_density <= 1.0) {
            return Err(CrgError::input(format!(
                "goal density must lie in (0, 1], got {}",
                self.goal_density
            )));
        }
        Ok(())
    }
}

/// Draws a game from `rng`. Every goal set is non-empty: an agent that
/// drew no goals gets one uniformly chosen goal.
pub fn random_game_with<R: Rng>(params: &RandomParams, rng: &mut R) -> Result<Game> {
    params.validate()?;
    let RandomParams { num_agents, num_goals, num_resources, max_value, goal_density } = *params;
    let agent_goals = (0..num_agents)
        .map(|_| {
            let mut goals: Vec<usize> = (0..num_goals).filter(|_| rng.gen_bool(goal_density)).collect();
            if goals.is_empty() {
                goals.push(rng.gen_range(0..num_goals));
            }
            GoalSet::new(goals)
        })
        .collect();
    let endowment = (0..num_agents)
        .map(|_| (0..num_resources).map(|_| rng.gen_range(0..=max_value)).collect())
        .collect();
    let requirement = (0..num_goals)
        .map(|_| {
            (0..num_resources)
                .map(|_| Quantity::Finite(rng.gen_range(0..=max_value)))
                .collect()
        })
        .collect();
    Game::new(GameParts {
        agents: numbered_ids("a", num_agents),
        goals: numbered_ids("g", num_goals),
        resources: numbered_ids("r", num_resources),
        agent_goals,
        endowment,
        requirement,
    })
}

/// A random game determined entirely by `seed`.
pub fn gen_random(
    num_agents: usize,
    num_goals: usize,
    num_resources: usize,
    max_value: u64,
    goal_density: f64,
    seed: u64,
) -> Result<Game> {
    let params = RandomParams { num_agents, num_goals, num_resources, max_value, goal_density };
    random_game_with(&params, &mut ChaCha8Rng::seed_from_u64(seed))
}
