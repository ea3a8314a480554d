//! Decision procedures for coalitional resource games.
//!
//! A coalitional resource game fixes agents, goals and resources; each agent
//! wants at least one goal from its own goal set, agents hold endowments,
//! and goals consume resources. This crate provides:
//!
//! * the model and its satisfaction/feasibility semantics ([`game`]),
//! * deciders for the ten standard decision problems, each backed by
//!   goal-subset enumeration and, where one exists, a 0/1 integer program
//!   ([`problems`], [`ilp`]),
//! * constructive hardness reductions and the counterexample family for the
//!   goal-subset-first ESCK algorithm ([`reductions`]),
//! * brute-force reference semantics used to certify all of the above
//!   ([`oracles`], [`verify`]),
//! * the JSON game format and edge-list graph format ([`io`]).

pub mod error;
pub mod fixtures;
pub mod game;
pub mod generate;
pub mod ilp;
pub mod io;
pub mod oracles;
pub mod problems;
pub mod quantity;
pub mod reductions;
pub mod verify;

pub use error::{CrgError, Result};
pub use game::{Coalition, Game, GameBuilder, GameParts, GoalSet, ResourceBound};
pub use problems::{solve, Answer, Backend, Problem, Query, SolveOptions, Witness};
pub use quantity::Quantity;
pub use reductions::{Graph, Polarity, ReductionOutput};
