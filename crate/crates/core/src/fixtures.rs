//! Small hand-built games used throughout the tests, docs and benches.

use crate::game::{Game, GameBuilder};

/// One agent, one goal, one resource; `en = req = 1`. Its only coalition is successful.
pub fn game_a() -> Game {
    GameBuilder::numbered(1, 1, 1)
        .goals_of(0, [0])
        .endow(0, 0, 1)
        .require(0, 0, 1)
        .build()
        .expect("fixture is valid")
}

/// Like [`game_a`] but the goal needs 2 units, so nothing is feasible.
pub fn game_b() -> Game {
    GameBuilder::numbered(1, 1, 1)
        .goals_of(0, [0])
        .endow(0, 0, 1)
        .require(0, 0, 2)
        .build()
        .expect("fixture is valid")
}

/// [`game_a`] plus a resource `r2` that the goal does not use.
pub fn game_a_with_free_resource() -> Game {
    GameBuilder::numbered(1, 1, 2)
        .goals_of(0, [0])
        .endow(0, 0, 1)
        .require(0, 0, 1)
        .build()
        .expect("fixture is valid")
}

/// [`game_a`] plus a goal `g2` in `G_1` that needs nothing.
pub fn game_a_with_free_goal() -> Game {
    GameBuilder::numbered(1, 2, 1)
        .goals_of(0, [0, 1])
        .endow(0, 0, 1)
        .require(0, 0, 1)
        .build()
        .expect("fixture is valid")
}

/// Two agents with private goals `G_i = {g_i}`, each goal needing one unit of
/// the single resource and each agent holding one unit.
pub fn two_agent_conflict() -> Game {
    GameBuilder::numbered(2, 2, 1)
        .goals_of(0, [0])
        .goals_of(1, [1])
        .endow(0, 0, 1)
        .endow(1, 0, 1)
        .require(0, 0, 1)
        .require(1, 0, 1)
        .build()
        .expect("fixture is valid")
}

/// Two agents where `a2` has no goals, so no coalition containing it succeeds.
pub fn two_agent_with_idle() -> Game {
    GameBuilder::numbered(2, 1, 1)
        .goals_of(0, [0])
        .endow(0, 0, 1)
        .require(0, 0, 1)
        .build()
        .expect("fixture is valid")
}
