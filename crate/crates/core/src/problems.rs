//! Deciders for the ten coalitional resource game decision problems.
//!
//! Every decider validates its input, then dispatches to either goal-subset
//! enumeration or the integer-program compiler in [`crate::ilp`].
//!
//! Enumeration searches goal sets of size at most `|C|` wherever the question
//! is monotone in the goal set: any successful set contains a successful
//! subset with one goal per member, and shrinking a goal set never raises
//! its requirement. CC is the exception, since its conflict predicate is not
//! monotone, and there the full `succ` sets are enumerated.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{CrgError, Result};
use crate::game::{subsets_up_to, Coalition, Game, GoalSet, ResourceBound};
use crate::ilp;
use crate::quantity::Quantity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    #[default]
    Enumeration,
    IntegerProgram,
}

impl FromStr for Backend {
    type Err = CrgError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" | "enumeration" => Ok(Backend::Enumeration),
            "ilp" | "ip" => Ok(Backend::IntegerProgram),
            other => Err(CrgError::input(format!("unknown backend `{other}` (expected enum|ilp)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    Sc,
    Esck,
    Maxc,
    Maxsc,
    Nr,
    Snr,
    Cgro,
    Rpegs,
    Scrb,
    Cc,
}

impl Problem {
    pub const ALL: [Problem; 10] = [
        Problem::Sc,
        Problem::Esck,
        Problem::Maxc,
        Problem::Maxsc,
        Problem::Nr,
        Problem::Snr,
        Problem::Cgro,
        Problem::Rpegs,
        Problem::Scrb,
        Problem::Cc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Sc => "sc",
            Problem::Esck => "esck",
            Problem::Maxc => "maxc",
            Problem::Maxsc => "maxsc",
            Problem::Nr => "nr",
            Problem::Snr => "snr",
            Problem::Cgro => "cgro",
            Problem::Rpegs => "rpegs",
            Problem::Scrb => "scrb",
            Problem::Cc => "cc",
        }
    }

    /// Whether the integer-program backend can decide this problem.
    pub fn has_integer_program(self) -> bool {
        !matches!(self, Problem::Maxc | Problem::Maxsc)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = CrgError;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CrgError::input(format!("unknown problem `{s}`")))
    }
}

/// A problem together with its arguments.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Query {
    Sc { coalition: Coalition },
    Esck { k: usize },
    Maxc { coalition: Coalition },
    Maxsc { coalition: Coalition },
    Nr { coalition: Coalition, resource: usize },
    Snr { coalition: Coalition, resource: usize },
    Cgro { coalition: Coalition, goal_set: GoalSet, resource: usize },
    Rpegs { coalition: Coalition, goal_set: GoalSet },
    Scrb { coalition: Coalition, bound: ResourceBound },
    Cc { first: Coalition, second: Coalition, bound: ResourceBound },
}

impl Query {
    pub fn problem(&self) -> Problem {
        match self {
            Query::Sc { .. } => Problem::Sc,
            Query::Esck { .. } => Problem::Esck,
            Query::Maxc { .. } => Problem::Maxc,
            Query::Maxsc { .. } => Problem::Maxsc,
            Query::Nr { .. } => Problem::Nr,
            Query::Snr { .. } => Problem::Snr,
            Query::Cgro { .. } => Problem::Cgro,
            Query::Rpegs { .. } => Problem::Rpegs,
            Query::Scrb { .. } => Problem::Scrb,
            Query::Cc { .. } => Problem::Cc,
        }
    }

    /// Checks indices, shapes and the non-empty coalition requirement.
    /// Problem-specific preconditions (CGRO's `G_0 ∈ succ(C)`) are checked by the deciders.
    pub fn validate(&self, game: &Game) -> Result<()> {
        match self {
            Query::Sc { coalition } | Query::Maxc { coalition } | Query::Maxsc { coalition } => {
                game.check_nonempty_coalition(coalition)
            }
            Query::Esck { k } => {
                if (1..=game.num_agents()).contains(k) {
                    Ok(())
                } else {
                    Err(CrgError::input(format!(
                        "k must lie in 1..={}, got {k}",
                        game.num_agents()
                    )))
                }
            }
            Query::Nr { coalition, resource } | Query::Snr { coalition, resource } => {
                game.check_nonempty_coalition(coalition)?;
                game.check_resource(*resource)
            }
            Query::Cgro { coalition, goal_set, resource } => {
                game.check_nonempty_coalition(coalition)?;
                game.check_goal_set(goal_set)?;
                game.check_resource(*resource)
            }
            Query::Rpegs { coalition, goal_set } => {
                game.check_nonempty_coalition(coalition)?;
                game.check_goal_set(goal_set)
            }
            Query::Scrb { coalition, bound } => {
                game.check_nonempty_coalition(coalition)?;
                bound.check_shape(game)
            }
            Query::Cc { first, second, bound } => {
                game.check_nonempty_coalition(first)?;
                game.check_nonempty_coalition(second)?;
                bound.check_shape(game)
            }
        }
    }
}

/// Knobs that change problem semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SolveOptions {
    /// Read SCRB as "YES when `succ(C)` is empty" instead of the strict
    /// existential reading. Only the SCRB gadget check uses this.
    pub vacuous_scrb_yes: bool,
}

/// An object that certifies a verdict when replayed through the model predicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    Goals(GoalSet),
    CoalitionGoals { coalition: Coalition, goals: GoalSet },
    GoalPair { first: GoalSet, second: GoalSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Answer {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl Answer {
    pub fn yes(witness: Option<Witness>) -> Answer {
        Answer { verdict: true, witness }
    }

    pub fn no(witness: Option<Witness>) -> Answer {
        Answer { verdict: false, witness }
    }
}

/// Decides `query` on `game` with the chosen backend.
pub fn solve(game: &Game, query: &Query, backend: Backend, options: &SolveOptions) -> Result<Answer> {
    query.validate(game)?;
    if let Query::Cgro { coalition, goal_set, .. } = query {
        if !game.is_successful_goalset(goal_set, coalition) {
            return Err(CrgError::Precondition(format!(
                "goal set {goal_set} is not in succ({coalition})"
            )));
        }
    }
    match backend {
        Backend::Enumeration => enumerate(game, query, options),
        Backend::IntegerProgram => ilp::compile(game, query, options)?.decide(),
    }
}

pub fn sc(game: &Game, c: &Coalition, backend: Backend) -> Result<Answer> {
    solve(game, &Query::Sc { coalition: c.clone() }, backend, &SolveOptions::default())
}

pub fn esck(game: &Game, k: usize, backend: Backend) -> Result<Answer> {
    solve(game, &Query::Esck { k }, backend, &SolveOptions::default())
}

/// Superset enumeration; exponential in `|Ag| - |C|`.
pub fn maxc(game: &Game, c: &Coalition) -> Result<Answer> {
    solve(game, &Query::Maxc { coalition: c.clone() }, Backend::Enumeration, &SolveOptions::default())
}

pub fn maxsc(game: &Game, c: &Coalition) -> Result<Answer> {
    solve(game, &Query::Maxsc { coalition: c.clone() }, Backend::Enumeration, &SolveOptions::default())
}

pub fn nr(game: &Game, c: &Coalition, resource: usize, backend: Backend) -> Result<Answer> {
    let q = Query::Nr { coalition: c.clone(), resource };
    solve(game, &q, backend, &SolveOptions::default())
}

pub fn snr(game: &Game, c: &Coalition, resource: usize, backend: Backend) -> Result<Answer> {
    let q = Query::Snr { coalition: c.clone(), resource };
    solve(game, &q, backend, &SolveOptions::default())
}

pub fn cgro(game: &Game, c: &Coalition, g0: &GoalSet, resource: usize, backend: Backend) -> Result<Answer> {
    let q = Query::Cgro { coalition: c.clone(), goal_set: g0.clone(), resource };
    solve(game, &q, backend, &SolveOptions::default())
}

pub fn rpegs(game: &Game, c: &Coalition, g0: &GoalSet, backend: Backend) -> Result<Answer> {
    let q = Query::Rpegs { coalition: c.clone(), goal_set: g0.clone() };
    solve(game, &q, backend, &SolveOptions::default())
}

/// Strict existential SCRB; use [`solve`] with [`SolveOptions`] for the vacuous convention.
pub fn scrb(game: &Game, c: &Coalition, bound: &ResourceBound, backend: Backend) -> Result<Answer> {
    let q = Query::Scrb { coalition: c.clone(), bound: bound.clone() };
    solve(game, &q, backend, &SolveOptions::default())
}

/// With [`Backend::IntegerProgram`] this runs the linearized counterexample search.
pub fn cc(game: &Game, c1: &Coalition, c2: &Coalition, bound: &ResourceBound, backend: Backend) -> Result<Answer> {
    let q = Query::Cc { first: c1.clone(), second: c2.clone(), bound: bound.clone() };
    solve(game, &q, backend, &SolveOptions::default())
}

/// `cgs(G1, G2, b)`: both respect the bound, their union does not.
pub fn in_conflict(game: &Game, g1: &GoalSet, g2: &GoalSet, bound: &ResourceBound) -> bool {
    bound.respected_by(game, g1) && bound.respected_by(game, g2) && !bound.respected_by(game, &g1.union(g2))
}

/// `candidate` needs at most as much as `target` everywhere and strictly less somewhere.
pub fn dominates(game: &Game, candidate: &GoalSet, target: &GoalSet) -> bool {
    let mut strict = false;
    for r in 0..game.num_resources() {
        let (a, b) = (game.requirement_of(candidate, r), game.requirement_of(target, r));
        if a > b {
            return false;
        }
        strict |= a < b;
    }
    strict
}

fn first_successful(game: &Game, c: &Coalition, pool: &[usize], accept: impl Fn(&GoalSet) -> bool) -> Option<GoalSet> {
    subsets_up_to(pool, c.len())
        .map(GoalSet::new)
        .find(|gs| game.is_successful_goalset(gs, c) && accept(gs))
}

fn all_goals(game: &Game) -> Vec<usize> {
    (0..game.num_goals()).collect()
}

fn requirement_free_goals(game: &Game, resource: usize) -> Vec<usize> {
    (0..game.num_goals())
        .filter(|&g| game.requirement(g, resource).is_zero())
        .collect()
}

fn enumerate(game: &Game, query: &Query, options: &SolveOptions) -> Result<Answer> {
    let pool = all_goals(game);
    let any = |_: &GoalSet| true;
    let answer = match query {
        Query::Sc { coalition } => match first_successful(game, coalition, &pool, any) {
            Some(gs) => Answer::yes(Some(Witness::Goals(gs))),
            None => Answer::no(None),
        },
        // Coalitions first: picking a goal set and then the agents it happens
        // to satisfy misses coalitions that a goal set over-satisfies.
        Query::Esck { k } => (0..game.num_agents())
            .combinations(*k)
            .map(Coalition::new)
            .find_map(|c| {
                first_successful(game, &c, &pool, any)
                    .map(|goals| Witness::CoalitionGoals { coalition: c, goals })
            })
            .map_or(Answer::no(None), |w| Answer::yes(Some(w))),
        Query::Maxc { coalition } => maximality(game, coalition, &pool),
        Query::Maxsc { coalition } => match first_successful(game, coalition, &pool, any) {
            None => Answer::no(None),
            Some(gs) => {
                let maximal = maximality(game, coalition, &pool);
                if maximal.verdict {
                    Answer::yes(Some(Witness::Goals(gs)))
                } else {
                    maximal
                }
            }
        },
        Query::Nr { coalition, resource } => {
            let free = requirement_free_goals(game, *resource);
            match first_successful(game, coalition, &free, any) {
                Some(gs) => Answer::no(Some(Witness::Goals(gs))),
                None => Answer::yes(None),
            }
        }
        Query::Snr { coalition, resource } => match first_successful(game, coalition, &pool, any) {
            None => Answer::no(None),
            Some(gs) => {
                let free = requirement_free_goals(game, *resource);
                match first_successful(game, coalition, &free, any) {
                    Some(free_gs) => Answer::no(Some(Witness::Goals(free_gs))),
                    None => Answer::yes(Some(Witness::Goals(gs))),
                }
            }
        },
        Query::Cgro { coalition, goal_set, resource } => {
            let beta = game.requirement_of(goal_set, *resource);
            let cheaper = |gs: &GoalSet| game.requirement_of(gs, *resource) < beta;
            match first_successful(game, coalition, &pool, cheaper) {
                Some(gs) => Answer::no(Some(Witness::Goals(gs))),
                None => Answer::yes(None),
            }
        }
        Query::Rpegs { coalition, goal_set } => {
            match first_successful(game, coalition, &pool, |gs| dominates(game, gs, goal_set)) {
                Some(gs) => Answer::no(Some(Witness::Goals(gs))),
                None => Answer::yes(None),
            }
        }
        Query::Scrb { coalition, bound } => {
            match first_successful(game, coalition, &pool, |gs| bound.respected_by(game, gs)) {
                Some(gs) => Answer::yes(Some(Witness::Goals(gs))),
                None if options.vacuous_scrb_yes
                    && first_successful(game, coalition, &pool, any).is_none() =>
                {
                    Answer::yes(None)
                }
                None => Answer::no(None),
            }
        }
        Query::Cc { first, second, bound } => {
            let s1 = game.enumerate_succ(first, None)?;
            let s2 = game.enumerate_succ(second, None)?;
            s1.iter()
                .cartesian_product(s2.iter())
                .find(|(g1, g2)| !in_conflict(game, g1, g2, bound))
                .map_or(Answer::yes(None), |(g1, g2)| {
                    Answer::no(Some(Witness::GoalPair {
                        first: g1.clone(),
                        second: g2.clone(),
                    }))
                })
        }
    };
    Ok(answer)
}

fn maximality(game: &Game, coalition: &Coalition, pool: &[usize]) -> Answer {
    let outsiders: Vec<usize> = (0..game.num_agents()).filter(|&i| !coalition.contains(i)).collect();
    let witness = subsets_up_to(&outsiders, outsiders.len())
        .map(|extra| coalition.union(&Coalition::new(extra)))
        .find_map(|sup| {
            first_successful(game, &sup, pool, |_| true)
                .map(|goals| Witness::CoalitionGoals { coalition: sup, goals })
        });
    witness.map_or(Answer::yes(None), |w| Answer::no(Some(w)))
}

/// Replays `answer`'s witness against the model predicates. Answers without
/// a witness pass trivially; a witness of the wrong shape fails.
pub fn witness_is_valid(game: &Game, query: &Query, answer: &Answer) -> bool {
    let Some(witness) = &answer.witness else {
        return true;
    };
    let succ = |gs: &GoalSet, c: &Coalition| game.is_successful_goalset(gs, c);
    match (query, witness, answer.verdict) {
        (Query::Sc { coalition }, Witness::Goals(gs), true) => succ(gs, coalition),
        (Query::Esck { k }, Witness::CoalitionGoals { coalition, goals }, true) => {
            coalition.len() == *k && succ(goals, coalition)
        }
        (
            Query::Maxc { coalition } | Query::Maxsc { coalition },
            Witness::CoalitionGoals { coalition: sup, goals },
            false,
        ) => coalition.is_subset(sup) && sup.len() > coalition.len() && succ(goals, sup),
        (Query::Maxsc { coalition }, Witness::Goals(gs), true) => succ(gs, coalition),
        (Query::Nr { coalition, resource } | Query::Snr { coalition, resource }, Witness::Goals(gs), false) => {
            succ(gs, coalition) && game.requirement_of(gs, *resource).is_zero()
        }
        (Query::Snr { coalition, .. }, Witness::Goals(gs), true) => succ(gs, coalition),
        (Query::Cgro { coalition, goal_set, resource }, Witness::Goals(gs), false) => {
            succ(gs, coalition) && game.requirement_of(gs, *resource) < game.requirement_of(goal_set, *resource)
        }
        (Query::Rpegs { coalition, goal_set }, Witness::Goals(gs), false) => {
            succ(gs, coalition) && dominates(game, gs, goal_set)
        }
        (Query::Scrb { coalition, bound }, Witness::Goals(gs), true) => {
            succ(gs, coalition) && bound.respected_by(game, gs)
        }
        (Query::Cc { first, second, bound }, Witness::GoalPair { first: g1, second: g2 }, false) => {
            succ(g1, first) && succ(g2, second) && !in_conflict(game, g1, g2, bound)
        }
        _ => false,
    }
}

/// The requirement vector of a goal set, for reporting.
pub fn requirement_vector(game: &Game, gs: &GoalSet) -> Vec<Quantity> {
    (0..game.num_resources()).map(|r| game.requirement_of(gs, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::game::GameBuilder;

    const BACKENDS: [Backend; 2] = [Backend::Enumeration, Backend::IntegerProgram];

    fn c(ix: &[usize]) -> Coalition {
        Coalition::new(ix.iter().copied())
    }

    fn gs(ix: &[usize]) -> GoalSet {
        GoalSet::new(ix.iter().copied())
    }

    fn bound(v: &[u64]) -> ResourceBound {
        ResourceBound::new(v.iter().copied().map(Quantity::Finite).collect())
    }

    #[test]
    fn sc_examples() {
        for b in BACKENDS {
            let a = sc(&game_a(), &c(&[0]), b).unwrap();
            assert!(a.verdict);
            assert_eq!(a.witness, Some(Witness::Goals(gs(&[0]))));
            assert!(!sc(&game_b(), &c(&[0]), b).unwrap().verdict);
            assert!(sc(&game_a(), &Coalition::empty(), b).is_err());
        }
    }

    #[test]
    fn esck_examples() {
        for b in BACKENDS {
            assert!(esck(&game_a(), 1, b).unwrap().verdict);
            assert!(esck(&game_a(), 0, b).is_err());
            assert!(esck(&game_a(), 2, b).is_err());
            let a = esck(&two_agent_with_idle(), 2, b).unwrap();
            assert!(!a.verdict);
        }
    }

    #[test]
    fn maxc_and_maxsc_examples() {
        assert!(maxc(&game_a(), &c(&[0])).unwrap().verdict);
        let conflict = two_agent_conflict();
        // {a1, a2} with {g1, g2}: needs 2, holds 2
        let a = maxc(&conflict, &c(&[0])).unwrap();
        assert!(!a.verdict);
        assert!(witness_is_valid(&conflict, &Query::Maxc { coalition: c(&[0]) }, &a));
        assert!(maxc(&two_agent_with_idle(), &c(&[0])).unwrap().verdict);

        assert!(maxsc(&game_a(), &c(&[0])).unwrap().verdict);
        assert!(!maxsc(&game_b(), &c(&[0])).unwrap().verdict);
        assert!(!maxsc(&conflict, &c(&[0])).unwrap().verdict);
        assert!(maxsc(&two_agent_with_idle(), &c(&[0])).unwrap().verdict);

        let q = Query::Maxc { coalition: c(&[0]) };
        assert!(solve(&game_a(), &q, Backend::IntegerProgram, &SolveOptions::default()).is_err());
    }

    #[test]
    fn nr_and_snr_examples() {
        for b in BACKENDS {
            assert!(nr(&game_a(), &c(&[0]), 0, b).unwrap().verdict);
            let a = nr(&game_a_with_free_resource(), &c(&[0]), 1, b).unwrap();
            assert!(!a.verdict);
            assert_eq!(a.witness, Some(Witness::Goals(gs(&[0]))));
            assert!(nr(&game_b(), &c(&[0]), 0, b).unwrap().verdict);
            assert!(nr(&game_a(), &c(&[0]), 1, b).is_err());

            assert!(snr(&game_a(), &c(&[0]), 0, b).unwrap().verdict);
            assert!(!snr(&game_b(), &c(&[0]), 0, b).unwrap().verdict);
            assert!(!snr(&game_a_with_free_resource(), &c(&[0]), 1, b).unwrap().verdict);
        }
    }

    #[test]
    fn cgro_examples() {
        for b in BACKENDS {
            assert!(cgro(&game_a(), &c(&[0]), &gs(&[0]), 0, b).unwrap().verdict);
            let a = cgro(&game_a_with_free_goal(), &c(&[0]), &gs(&[0]), 0, b).unwrap();
            assert!(!a.verdict);
            assert_eq!(a.witness, Some(Witness::Goals(gs(&[1]))));
            // req(G0, r) = 0 is always optimal
            assert!(cgro(&game_a_with_free_goal(), &c(&[0]), &gs(&[1]), 0, b).unwrap().verdict);
            let err = cgro(&game_b(), &c(&[0]), &gs(&[0]), 0, b).unwrap_err();
            assert!(err.is_precondition());
        }
    }

    #[test]
    fn rpegs_examples() {
        // g2 costs 2 and is in no agent's goal set, so {g2} is dominated by {g1}
        let dominated = GameBuilder::numbered(1, 2, 1)
            .goals_of(0, [0])
            .endow(0, 0, 1)
            .require(0, 0, 1)
            .require(1, 0, 2)
            .build()
            .unwrap();
        for b in BACKENDS {
            assert!(rpegs(&game_a(), &c(&[0]), &gs(&[0]), b).unwrap().verdict);
            let a = rpegs(&dominated, &c(&[0]), &gs(&[1]), b).unwrap();
            assert!(!a.verdict);
            assert_eq!(a.witness, Some(Witness::Goals(gs(&[0]))));
            assert!(rpegs(&game_b(), &c(&[0]), &gs(&[0]), b).unwrap().verdict);
            assert!(rpegs(&game_b(), &c(&[0]), &GoalSet::empty(), b).unwrap().verdict);
        }
    }

    #[test]
    fn scrb_examples() {
        let vacuous = SolveOptions { vacuous_scrb_yes: true };
        for b in BACKENDS {
            let a = scrb(&game_a(), &c(&[0]), &bound(&[1]), b).unwrap();
            assert!(a.verdict);
            assert_eq!(a.witness, Some(Witness::Goals(gs(&[0]))));
            assert!(!scrb(&game_a(), &c(&[0]), &bound(&[0]), b).unwrap().verdict);
            assert!(!scrb(&game_b(), &c(&[0]), &bound(&[5]), b).unwrap().verdict);
            assert!(scrb(&game_a(), &c(&[0]), &bound(&[1, 1]), b).is_err());

            let q = Query::Scrb { coalition: c(&[0]), bound: bound(&[5]) };
            assert!(solve(&game_b(), &q, b, &vacuous).unwrap().verdict);
            let q = Query::Scrb { coalition: c(&[0]), bound: bound(&[0]) };
            assert!(!solve(&game_a(), &q, b, &vacuous).unwrap().verdict);
        }
    }

    #[test]
    fn cc_examples() {
        for b in BACKENDS {
            assert!(cc(&two_agent_conflict(), &c(&[0]), &c(&[1]), &bound(&[1]), b).unwrap().verdict);
            let a = cc(&game_a(), &c(&[0]), &c(&[0]), &bound(&[1]), b).unwrap();
            assert!(!a.verdict);
            assert_eq!(a.witness, Some(Witness::GoalPair { first: gs(&[0]), second: gs(&[0]) }));
            assert!(cc(&game_b(), &c(&[0]), &c(&[0]), &bound(&[0]), b).unwrap().verdict);
            // a member of succ(C1) that breaks the bound on its own
            assert!(!cc(&two_agent_conflict(), &c(&[0]), &c(&[1]), &bound(&[0]), b).unwrap().verdict);
        }
    }

    #[test]
    fn witnesses_replay() {
        let game = game_a_with_free_goal();
        let queries = [
            Query::Sc { coalition: c(&[0]) },
            Query::Esck { k: 1 },
            Query::Nr { coalition: c(&[0]), resource: 0 },
            Query::Snr { coalition: c(&[0]), resource: 0 },
            Query::Cgro { coalition: c(&[0]), goal_set: gs(&[0]), resource: 0 },
            Query::Rpegs { coalition: c(&[0]), goal_set: gs(&[0]) },
            Query::Scrb { coalition: c(&[0]), bound: bound(&[0]) },
            Query::Cc { first: c(&[0]), second: c(&[0]), bound: bound(&[1]) },
        ];
        for q in &queries {
            for b in BACKENDS {
                let a = solve(&game, q, b, &SolveOptions::default()).unwrap();
                assert!(witness_is_valid(&game, q, &a), "{q:?} {b:?} {a:?}");
            }
        }
        let bogus = Answer::yes(Some(Witness::Goals(gs(&[0]))));
        assert!(!witness_is_valid(&game_b(), &Query::Sc { coalition: c(&[0]) }, &bogus));
    }

    #[test]
    fn parses_names() {
        assert_eq!("RPEGS".parse::<Problem>().unwrap(), Problem::Rpegs);
        assert!("nope".parse::<Problem>().is_err());
        assert_eq!("ilp".parse::<Backend>().unwrap(), Backend::IntegerProgram);
    }
}
