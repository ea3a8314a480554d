//! The coalitional resource game tuple and its satisfaction and feasibility semantics.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{CrgError, Result};
use crate::quantity::Quantity;

/// Upper limit on any per-resource total (all endowments, or all finite
/// requirements). Keeping totals inside `i64` lets the integer-program
/// compiler use plain signed coefficients and rules out finite overflow.
pub const MAX_TOTAL: u64 = i64::MAX as u64;

macro_rules! index_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Vec<usize>);

        impl $name {
            pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
                let mut v: Vec<usize> = indices.into_iter().collect();
                v.sort_unstable();
                v.dedup();
                $name(v)
            }

            pub fn empty() -> Self {
                $name(Vec::new())
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, index: usize) -> bool {
                self.0.binary_search(&index).is_ok()
            }

            /// Indices in increasing order.
            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.iter().copied()
            }

            pub fn as_slice(&self) -> &[usize] {
                &self.0
            }

            pub fn union(&self, other: &Self) -> Self {
                $name::new(self.iter().chain(other.iter()))
            }

            pub fn intersects(&self, other: &Self) -> bool {
                let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
                while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
                    match x.cmp(&y) {
                        std::cmp::Ordering::Less => {
                            a.next();
                        }
                        std::cmp::Ordering::Greater => {
                            b.next();
                        }
                        std::cmp::Ordering::Equal => return true,
                    }
                }
                false
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.iter().all(|i| other.contains(i))
            }

            pub(crate) fn max_index(&self) -> Option<usize> {
                self.0.last().copied()
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                $name::new(iter)
            }
        }

        impl From<Vec<usize>> for $name {
            fn from(v: Vec<usize>) -> Self {
                $name::new(v)
            }
        }

        impl<const N: usize> From<[usize; N]> for $name {
            fn from(v: [usize; N]) -> Self {
                $name::new(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{{}}}", self.0.iter().join(","))
            }
        }
    };
}

index_set!(
    /// A set of agent indices.
    Coalition
);
index_set!(
    /// A set of goal indices.
    GoalSet
);

/// A per-resource cap `b`. A goal set respects the bound when its total
/// requirement is at most `b(r)` for every resource.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResourceBound(Vec<Quantity>);

impl ResourceBound {
    pub fn new(bound: Vec<Quantity>) -> Self {
        ResourceBound(bound)
    }

    pub fn get(&self, resource: usize) -> Quantity {
        self.0[resource]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Quantity] {
        &self.0
    }

    pub(crate) fn check_shape(&self, game: &Game) -> Result<()> {
        if self.0.len() != game.num_resources() {
            return Err(CrgError::input(format!(
                "resource bound has {} entries but the game has {} resources",
                self.0.len(),
                game.num_resources()
            )));
        }
        Ok(())
    }

    /// Whether `goals` needs at most `b(r)` of every resource.
    pub fn respected_by(&self, game: &Game, goals: &GoalSet) -> bool {
        (0..game.num_resources()).all(|r| game.requirement_of(goals, r) <= self.0[r])
    }
}

/// Raw components of a [`Game`]; validated by [`Game::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameParts {
    pub agents: Vec<String>,
    pub goals: Vec<String>,
    pub resources: Vec<String>,
    /// `G_i` for every agent, indexed like `agents`.
    pub agent_goals: Vec<GoalSet>,
    /// `en(i, r)`, one row per agent.
    pub endowment: Vec<Vec<u64>>,
    /// `req(g, r)`, one row per goal.
    pub requirement: Vec<Vec<Quantity>>,
}

/// A coalitional resource game `<Ag, G, R, G_1..G_n, en, req>`.
///
/// Immutable once built. Endowments are always finite; requirements may be
/// infinite, which makes any goal set containing such a goal infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    parts: GameParts,
}

fn check_ids(kind: &str, ids: &[String]) -> Result<()> {
    if ids.is_empty() {
        return Err(CrgError::input(format!("a game needs at least one {kind}")));
    }
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id.as_str()) {
            return Err(CrgError::input(format!("duplicate {kind} identifier `{id}`")));
        }
    }
    Ok(())
}

impl Game {
    pub fn new(parts: GameParts) -> Result<Game> {
        check_ids("agent", &parts.agents)?;
        check_ids("goal", &parts.goals)?;
        check_ids("resource", &parts.resources)?;
        let (n, m, k) = (parts.agents.len(), parts.goals.len(), parts.resources.len());

        if parts.agent_goals.len() != n {
            return Err(CrgError::input(format!(
                "expected goal sets for {n} agents, got {}",
                parts.agent_goals.len()
            )));
        }
        for (i, gi) in parts.agent_goals.iter().enumerate() {
            if gi.max_index().is_some_and(|g| g >= m) {
                return Err(CrgError::input(format!(
                    "goal set of agent `{}` references a goal index out of range",
                    parts.agents[i]
                )));
            }
        }
        if parts.endowment.len() != n || parts.endowment.iter().any(|row| row.len() != k) {
            return Err(CrgError::input(format!("endowment matrix must be {n}x{k}")));
        }
        if parts.requirement.len() != m || parts.requirement.iter().any(|row| row.len() != k) {
            return Err(CrgError::input(format!("requirement matrix must be {m}x{k}")));
        }
        for r in 0..k {
            let en_total = parts
                .endowment
                .iter()
                .try_fold(0u64, |acc, row| acc.checked_add(row[r]));
            let req_total = parts
                .requirement
                .iter()
                .filter_map(|row| row[r].finite())
                .try_fold(0u64, |acc, v| acc.checked_add(v));
            if en_total.is_none_or(|t| t > MAX_TOTAL) || req_total.is_none_or(|t| t > MAX_TOTAL) {
                return Err(CrgError::Overflow(format!(
                    "totals for resource `{}` exceed {MAX_TOTAL}",
                    parts.resources[r]
                )));
            }
        }
        Ok(Game { parts })
    }

    pub fn parts(&self) -> &GameParts {
        &self.parts
    }

    pub fn into_parts(self) -> GameParts {
        self.parts
    }

    pub fn num_agents(&self) -> usize {
        self.parts.agents.len()
    }

    pub fn num_goals(&self) -> usize {
        self.parts.goals.len()
    }

    pub fn num_resources(&self) -> usize {
        self.parts.resources.len()
    }

    pub fn agents(&self) -> &[String] {
        &self.parts.agents
    }

    pub fn goals(&self) -> &[String] {
        &self.parts.goals
    }

    pub fn resources(&self) -> &[String] {
        &self.parts.resources
    }

    pub fn agent_index(&self, id: &str) -> Option<usize> {
        self.parts.agents.iter().position(|a| a == id)
    }

    pub fn goal_index(&self, id: &str) -> Option<usize> {
        self.parts.goals.iter().position(|g| g == id)
    }

    pub fn resource_index(&self, id: &str) -> Option<usize> {
        self.parts.resources.iter().position(|r| r == id)
    }

    /// `G_i`.
    pub fn agent_goals(&self, agent: usize) -> &GoalSet {
        &self.parts.agent_goals[agent]
    }

    pub fn endowment(&self, agent: usize, resource: usize) -> u64 {
        self.parts.endowment[agent][resource]
    }

    pub fn requirement(&self, goal: usize, resource: usize) -> Quantity {
        self.parts.requirement[goal][resource]
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::new(0..self.num_agents())
    }

    pub fn all_goals(&self) -> GoalSet {
        GoalSet::new(0..self.num_goals())
    }

    pub fn check_resource(&self, resource: usize) -> Result<()> {
        if resource >= self.num_resources() {
            return Err(CrgError::input(format!(
                "resource index {resource} out of range (game has {} resources)",
                self.num_resources()
            )));
        }
        Ok(())
    }

    pub fn check_coalition(&self, c: &Coalition) -> Result<()> {
        if c.max_index().is_some_and(|i| i >= self.num_agents()) {
            return Err(CrgError::input(format!("coalition {c} references an unknown agent")));
        }
        Ok(())
    }

    /// Like [`check_coalition`](Self::check_coalition), additionally rejecting the empty coalition.
    pub fn check_nonempty_coalition(&self, c: &Coalition) -> Result<()> {
        if c.is_empty() {
            return Err(CrgError::input("coalition must be non-empty"));
        }
        self.check_coalition(c)
    }

    pub fn check_goal_set(&self, gs: &GoalSet) -> Result<()> {
        if gs.max_index().is_some_and(|g| g >= self.num_goals()) {
            return Err(CrgError::input(format!("goal set {gs} references an unknown goal")));
        }
        Ok(())
    }

    /// `en(C, r)`: total endowment of `r` held by the coalition.
    pub fn coalition_endowment(&self, c: &Coalition, resource: usize) -> Result<Quantity> {
        self.check_resource(resource)?;
        self.check_coalition(c)?;
        Ok(self.endowment_of(c, resource))
    }

    /// `req(G', r)`: total requirement of `r` over the goal set, saturating at infinity.
    pub fn goalset_requirement(&self, gs: &GoalSet, resource: usize) -> Result<Quantity> {
        self.check_resource(resource)?;
        self.check_goal_set(gs)?;
        Ok(self.requirement_of(gs, resource))
    }

    pub(crate) fn endowment_of(&self, c: &Coalition, resource: usize) -> Quantity {
        c.iter().map(|i| Quantity::Finite(self.parts.endowment[i][resource])).sum()
    }

    pub(crate) fn requirement_of(&self, gs: &GoalSet, resource: usize) -> Quantity {
        gs.iter().map(|g| self.parts.requirement[g][resource]).sum()
    }

    /// Every member of `c` has at least one of its goals in `gs`. Vacuously true for `c = {}`.
    pub fn satisfies(&self, gs: &GoalSet, c: &Coalition) -> bool {
        c.iter().all(|i| self.parts.agent_goals[i].intersects(gs))
    }

    /// The coalition's endowment covers the goal set's requirement on every resource.
    pub fn is_feasible(&self, gs: &GoalSet, c: &Coalition) -> bool {
        (0..self.num_resources()).all(|r| self.requirement_of(gs, r) <= self.endowment_of(c, r))
    }

    /// `gs ∈ succ(C)`: non-empty, satisfying and feasible.
    pub fn is_successful_goalset(&self, gs: &GoalSet, c: &Coalition) -> bool {
        !gs.is_empty() && self.satisfies(gs, c) && self.is_feasible(gs, c)
    }

    /// Every member of `succ(C)`, optionally only those with at most `max_size` goals.
    ///
    /// Output order is by size, then lexicographic on the sorted goal indices.
    pub fn enumerate_succ(&self, c: &Coalition, max_size: Option<usize>) -> Result<Vec<GoalSet>> {
        self.check_coalition(c)?;
        let limit = match max_size {
            None => self.num_goals(),
            Some(s) if (1..=self.num_goals()).contains(&s) => s,
            Some(s) => {
                return Err(CrgError::input(format!(
                    "max_size must lie in 1..={}, got {s}",
                    self.num_goals()
                )))
            }
        };
        let pool: Vec<usize> = (0..self.num_goals()).collect();
        Ok(subsets_up_to(&pool, limit)
            .map(GoalSet::new)
            .filter(|gs| self.is_successful_goalset(gs, c))
            .collect())
    }
}

/// Non-empty subsets of `pool` with at most `max_size` elements, by size and
/// then lexicographically.
pub(crate) fn subsets_up_to(pool: &[usize], max_size: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1..=max_size.min(pool.len())).flat_map(move |size| pool.iter().copied().combinations(size))
}

/// Convenience constructor with dense, index-based setters.
///
/// Setters panic on out-of-range indices; shape and total checks happen in
/// [`build`](Self::build).
#[derive(Debug, Clone)]
pub struct GameBuilder {
    parts: GameParts,
}

impl GameBuilder {
    pub fn new<S: Into<String>>(
        agents: impl IntoIterator<Item = S>,
        goals: impl IntoIterator<Item = S>,
        resources: impl IntoIterator<Item = S>,
    ) -> Self {
        let agents: Vec<String> = agents.into_iter().map(Into::into).collect();
        let goals: Vec<String> = goals.into_iter().map(Into::into).collect();
        let resources: Vec<String> = resources.into_iter().map(Into::into).collect();
        let (n, m, k) = (agents.len(), goals.len(), resources.len());
        GameBuilder {
            parts: GameParts {
                agents,
                goals,
                resources,
                agent_goals: vec![GoalSet::empty(); n],
                endowment: vec![vec![0; k]; n],
                requirement: vec![vec![Quantity::ZERO; k]; m],
            },
        }
    }

    /// Agents `a1..`, goals `g1..`, resources `r1..`.
    pub fn numbered(num_agents: usize, num_goals: usize, num_resources: usize) -> Self {
        GameBuilder::new(
            numbered_ids("a", num_agents),
            numbered_ids("g", num_goals),
            numbered_ids("r", num_resources),
        )
    }

    pub fn goals_of(mut self, agent: usize, goals: impl IntoIterator<Item = usize>) -> Self {
        self.parts.agent_goals[agent] = GoalSet::new(goals);
        self
    }

    pub fn endow(mut self, agent: usize, resource: usize, value: u64) -> Self {
        self.parts.endowment[agent][resource] = value;
        self
    }

    pub fn require(mut self, goal: usize, resource: usize, value: impl Into<Quantity>) -> Self {
        self.parts.requirement[goal][resource] = value.into();
        self
    }

    pub fn build(self) -> Result<Game> {
        Game::new(self.parts)
    }
}

/// `prefix1, prefix2, ..., prefix{count}`.
pub fn numbered_ids(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}
