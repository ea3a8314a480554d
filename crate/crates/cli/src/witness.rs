//! JSON rendering of witnesses by identifier.

use crg_core::{Game, Witness};
use serde_json::{json, Value};

fn ids(names: &[String], indices: impl Iterator<Item = usize>) -> Value {
    indices.map(|i| names[i].clone()).collect()
}

pub fn to_json(game: &Game, witness: &Witness) -> Value {
    let goals = |gs: &crg_core::GoalSet| ids(game.goals(), gs.iter());
    match witness {
        Witness::Goals(gs) => json!({ "goals": goals(gs) }),
        Witness::CoalitionGoals { coalition, goals: gs } => json!({
            "coalition": ids(game.agents(), coalition.iter()),
            "goals": goals(gs),
        }),
        Witness::GoalPair { first, second } => json!({ "first": goals(first), "second": goals(second) }),
    }
}
