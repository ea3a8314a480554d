//! Brute-force reference semantics.
//!
//! Everything here is evaluated straight from the problem definitions by
//! exhaustive enumeration over bitmasks, without the size bounds, pool
//! restrictions or program compilation the deciders use. Only the model
//! predicates from [`crate::game`] are shared with the code under test.

use crate::error::{CrgError, Result};
use crate::game::{Coalition, Game, GoalSet, ResourceBound};
use crate::ilp::{Comparator, IntegerProgram};
use crate::problems::{Query, SolveOptions};
use crate::reductions::Graph;

/// Largest `|G|` and `|Ag|` the oracle accepts.
pub const ORACLE_LIMIT: usize = 12;

/// Largest number of variables [`ilp_exhaustive`] will enumerate.
pub const ILP_ORACLE_LIMIT: usize = 20;

fn members(mask: u64, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |i| mask >> i & 1 == 1)
}

/// Is there a set of `k` pairwise non-adjacent vertices?
pub fn independent_set_exists(graph: &Graph, k: usize) -> Result<bool> {
    let n = graph.num_vertices();
    if k > n {
        return Err(CrgError::input(format!("k must lie in 0..={n}, got {k}")));
    }
    if n > ILP_ORACLE_LIMIT {
        return Err(CrgError::TooLarge(format!("{n} vertices")));
    }
    Ok((0u64..1 << n).any(|mask| {
        mask.count_ones() as usize == k
            && graph
                .edges()
                .iter()
                .all(|&(u, v)| !(mask >> u & 1 == 1 && mask >> v & 1 == 1))
    }))
}

/// All of `succ(C)`, by bitmask over every subset of `G`.
fn succ(game: &Game, c: &Coalition) -> Vec<GoalSet> {
    let m = game.num_goals();
    (1u64..1 << m)
        .map(|mask| GoalSet::new(members(mask, m)))
        .filter(|gs| game.is_successful_goalset(gs, c))
        .collect()
}

fn respects(game: &Game, gs: &GoalSet, bound: &ResourceBound) -> bool {
    (0..game.num_resources()).all(|r| bound.get(r) >= game.goalset_requirement(gs, r).expect("valid resource"))
}

/// The verdict of `query` computed literally from the problem definitions.
///
/// Refuses instances with more than [`ORACLE_LIMIT`] goals or agents.
pub fn brute_force_answer(game: &Game, query: &Query, options: &SolveOptions) -> Result<bool> {
    if game.num_goals() > ORACLE_LIMIT || game.num_agents() > ORACLE_LIMIT {
        return Err(CrgError::TooLarge(format!(
            "{} agents and {} goals exceed the oracle limit of {ORACLE_LIMIT}",
            game.num_agents(),
            game.num_goals()
        )));
    }
    query.validate(game)?;
    let req = |gs: &GoalSet, r: usize| game.goalset_requirement(gs, r).expect("valid resource");
    let n = game.num_agents();
    let verdict = match query {
        Query::Sc { coalition } => !succ(game, coalition).is_empty(),
        Query::Esck { k } => (1u64..1 << n)
            .filter(|mask| mask.count_ones() as usize == *k)
            .any(|mask| !succ(game, &Coalition::new(members(mask, n))).is_empty()),
        Query::Maxc { coalition } => maximal(game, coalition),
        Query::Maxsc { coalition } => !succ(game, coalition).is_empty() && maximal(game, coalition),
        Query::Nr { coalition, resource } => succ(game, coalition)
            .iter()
            .all(|gs| !req(gs, *resource).is_zero()),
        Query::Snr { coalition, resource } => {
            let s = succ(game, coalition);
            !s.is_empty() && s.iter().all(|gs| !req(gs, *resource).is_zero())
        }
        Query::Cgro { coalition, goal_set, resource } => {
            let s = succ(game, coalition);
            if !s.contains(goal_set) {
                return Err(CrgError::Precondition(format!(
                    "goal set {goal_set} is not in succ({coalition})"
                )));
            }
            s.iter().all(|gs| req(gs, *resource) >= req(goal_set, *resource))
        }
        Query::Rpegs { coalition, goal_set } => {
            let resources = 0..game.num_resources();
            succ(game, coalition).iter().all(|gs| {
                let cheaper_somewhere = resources.clone().any(|r| req(gs, r) < req(goal_set, r));
                let dearer_somewhere = resources.clone().any(|r| req(gs, r) > req(goal_set, r));
                !cheaper_somewhere || dearer_somewhere
            })
        }
        Query::Scrb { coalition, bound } => {
            let s = succ(game, coalition);
            (options.vacuous_scrb_yes && s.is_empty()) || s.iter().any(|gs| respects(game, gs, bound))
        }
        Query::Cc { first, second, bound } => {
            let (s1, s2) = (succ(game, first), succ(game, second));
            s1.iter().all(|g1| {
                s2.iter().all(|g2| {
                    respects(game, g1, bound)
                        && respects(game, g2, bound)
                        && !respects(game, &g1.union(g2), bound)
                })
            })
        }
    };
    Ok(verdict)
}

fn maximal(game: &Game, c: &Coalition) -> bool {
    let n = game.num_agents();
    let base: u64 = c.iter().map(|i| 1u64 << i).sum();
    (0u64..1 << n)
        .filter(|&mask| mask & base == base && mask != base)
        .all(|mask| succ(game, &Coalition::new(members(mask, n))).is_empty())
}

/// Does `assignment` honour every fix and every constraint of `ip`?
pub fn assignment_satisfies(ip: &IntegerProgram, assignment: &[bool]) -> bool {
    if assignment.len() != ip.num_vars() {
        return false;
    }
    let fixed_ok = ip
        .fixed
        .iter()
        .zip(assignment)
        .all(|(f, a)| f.is_none_or(|v| v == *a));
    fixed_ok
        && ip.constraints.iter().all(|c| {
            let lhs: i128 = c
                .terms
                .iter()
                .map(|&(v, a)| if assignment[v] { a as i128 } else { 0 })
                .sum();
            match c.comparator {
                Comparator::Le => lhs <= c.rhs as i128,
                Comparator::Ge => lhs >= c.rhs as i128,
                Comparator::Eq => lhs == c.rhs as i128,
            }
        })
}

/// First satisfying assignment in binary counting order over all `2^n`
/// assignments, or `None`.
pub fn ilp_exhaustive(ip: &IntegerProgram) -> Result<Option<Vec<bool>>> {
    ip.validate()?;
    let n = ip.num_vars();
    if n > ILP_ORACLE_LIMIT {
        return Err(CrgError::TooLarge(format!("{n} variables")));
    }
    for mask in 0u64..1 << n {
        let assignment: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if assignment_satisfies(ip, &assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
