//! 0/1 integer feasibility and the compilers from decision queries to programs.

mod compile;
mod engine;

pub use compile::{build_base_ip, build_fcip, compile, CompiledQuery, VerdictRule, WitnessShape};
pub use engine::{Comparator, IntegerProgram, LinearConstraint, VarKind, VarLabel};
