//! Constructive hardness reductions between coalitional resource game
//! problems, plus the instance family that breaks the goal-subset-first ESCK
//! algorithm.
//!
//! Every `sc_to_*` gadget takes an SC instance `(Γ, C)` and returns a target
//! instance whose answer relates to SC's through the recorded [`Polarity`].

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{CrgError, Result};
use crate::game::{numbered_ids, Coalition, Game, GameBuilder, GameParts, GoalSet, ResourceBound};
use crate::problems::Query;
use crate::quantity::Quantity;

/// A simple undirected graph on vertices `0..num_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Rejects self-loops, repeated edges (in either orientation) and out-of-range endpoints.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if num_vertices == 0 {
            return Err(CrgError::input("a graph needs at least one vertex"));
        }
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= num_vertices || v >= num_vertices {
                return Err(CrgError::input(format!("edge ({u}, {v}) has an endpoint out of range")));
            }
            if u == v {
                return Err(CrgError::input(format!("self-loop on vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(CrgError::input(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph { num_vertices, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_incident(&self, vertex: usize, edge: usize) -> bool {
        let (u, v) = self.edges[edge];
        u == vertex || v == vertex
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == vertex || v == vertex).count()
    }

    /// Every labeled graph on `n` vertices, in order of the edge bitmask over
    /// the pairs `(0,1), (0,2), ..., (n-2,n-1)`.
    pub fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::new(n, edges).expect("enumerated graphs are simple")
            })
            .collect()
    }

    /// The graph with isolated vertices removed, remaining vertices relabeled
    /// in order, plus the number removed.
    pub fn without_isolated(&self) -> (Option<Graph>, usize) {
        let keep: Vec<usize> = (0..self.num_vertices).filter(|&v| self.degree(v) > 0).collect();
        let removed = self.num_vertices - keep.len();
        if keep.is_empty() {
            return (None, removed);
        }
        let relabel = |v: usize| keep.binary_search(&v).expect("endpoint is kept");
        let edges = self.edges.iter().map(|&(u, v)| (relabel(u), relabel(v))).collect();
        (Some(Graph { num_vertices: keep.len(), edges }), removed)
    }
}

/// How the target answer relates to the source answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Source YES ⇔ target YES.
    Same,
    /// Source YES ⇔ target NO.
    Opposite,
}

impl Polarity {
    /// The target verdict this polarity predicts for a source verdict.
    pub fn expected_target(self, source: bool) -> bool {
        match self {
            Polarity::Same => source,
            Polarity::Opposite => !source,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Polarity::Same => "same",
            Polarity::Opposite => "opposite",
        }
    }
}

/// A constructed target instance and the equivalence it claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub game: Game,
    pub query: Query,
    pub polarity: Polarity,
}

/// Where the CGRO gadget puts its new goal `g'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CgroPlacement {
    /// `g'` belongs to no agent's goal set. For any non-empty coalition
    /// `{g'}` then satisfies nobody, so `G_0 ∉ succ(C)` and the CGRO
    /// precondition never holds.
    #[default]
    Verbatim,
    /// `g'` is added to `G_i` for every member `i` of the coalition.
    MemberGoalSets,
}

fn fresh_id(existing: &[String], base: &str) -> String {
    let mut candidate = base.to_string();
    let mut n = 1;
    while existing.contains(&candidate) {
        n += 1;
        candidate = format!("{base}{n}");
    }
    candidate
}

fn checked_mul(a: usize, b: usize) -> Result<u64> {
    (a as u64)
        .checked_mul(b as u64)
        .ok_or_else(|| CrgError::Overflow(format!("{a} * {b}")))
}

/// Appends a resource with the given per-agent endowment and per-goal requirement.
fn add_resource(
    parts: &mut GameParts,
    endowment: impl Fn(usize) -> u64,
    requirement: impl Fn(usize) -> Quantity,
) -> usize {
    let id = fresh_id(&parts.resources, "r'");
    parts.resources.push(id);
    for (i, row) in parts.endowment.iter_mut().enumerate() {
        row.push(endowment(i));
    }
    for (g, row) in parts.requirement.iter_mut().enumerate() {
        row.push(requirement(g));
    }
    parts.resources.len() - 1
}

/// Appends a goal with the given per-resource requirement.
fn add_goal(parts: &mut GameParts, requirement: Vec<Quantity>) -> usize {
    let id = fresh_id(&parts.goals, "g'");
    parts.goals.push(id);
    parts.requirement.push(requirement);
    parts.goals.len() - 1
}

/// Independent Set → SC. `k` agents, each with a private copy of every
/// vertex as a goal; one resource per edge, endowed 1 per agent; goal copies
/// of an endpoint of edge `e_j` need `k` of `r_j`. The grand coalition is
/// successful iff the graph has an independent set of size `k`.
///
/// Isolated vertices are removed first and `k` lowered accordingly; when
/// that brings `k` to zero the output is a trivially successful one-agent game.
pub fn is_to_sc(graph: &Graph, k: usize) -> Result<ReductionOutput> {
    if !(1..=graph.num_vertices()).contains(&k) {
        return Err(CrgError::input(format!(
            "k must lie in 1..={}, got {k}",
            graph.num_vertices()
        )));
    }
    let (core, isolated) = graph.without_isolated();
    let k = k.saturating_sub(isolated);
    let Some(core) = core.filter(|_| k > 0) else {
        let game = GameBuilder::numbered(1, 1, 1).goals_of(0, [0]).build()?;
        return Ok(ReductionOutput {
            game,
            query: Query::Sc { coalition: Coalition::from([0]) },
            polarity: Polarity::Same,
        });
    };
    let (n, m) = (core.num_vertices(), core.edges().len());
    let goals: Vec<String> = (0..k)
        .flat_map(|i| (0..n).map(move |l| format!("g{}_{}", l + 1, i + 1)))
        .collect();
    let mut builder = GameBuilder::new(numbered_ids("c", k), goals, numbered_ids("r", m));
    for i in 0..k {
        builder = builder.goals_of(i, (0..n).map(|l| i * n + l));
        for j in 0..m {
            builder = builder.endow(i, j, 1);
        }
        for l in 0..n {
            for j in 0..m {
                if core.is_incident(l, j) {
                    builder = builder.require(i * n + l, j, k as u64);
                }
            }
        }
    }
    let game = builder.build()?;
    let coalition = game.grand_coalition();
    Ok(ReductionOutput {
        game,
        query: Query::Sc { coalition },
        polarity: Polarity::Same,
    })
}

/// SC → ESCK: drop every agent outside `C` and ask for a successful coalition of size `|C|`.
pub fn sc_to_esck(game: &Game, c: &Coalition) -> Result<ReductionOutput> {
    game.check_nonempty_coalition(c)?;
    let p = game.parts();
    let parts = GameParts {
        agents: c.iter().map(|i| p.agents[i].clone()).collect(),
        goals: p.goals.clone(),
        resources: p.resources.clone(),
        agent_goals: c.iter().map(|i| p.agent_goals[i].clone()).collect(),
        endowment: c.iter().map(|i| p.endowment[i].clone()).collect(),
        requirement: p.requirement.clone(),
    };
    Ok(ReductionOutput {
        game: Game::new(parts)?,
        query: Query::Esck { k: c.len() },
        polarity: Polarity::Same,
    })
}

/// SC → NR: a new resource every agent holds one unit of and no goal uses.
pub fn sc_to_nr(game: &Game, c: &Coalition) -> Result<ReductionOutput> {
    game.check_nonempty_coalition(c)?;
    let mut parts = game.parts().clone();
    let r = add_resource(&mut parts, |_| 1, |_| Quantity::ZERO);
    Ok(ReductionOutput {
        game: Game::new(parts)?,
        query: Query::Nr { coalition: c.clone(), resource: r },
        polarity: Polarity::Opposite,
    })
}

/// SC → SNR: a new resource every agent holds `|G|` of and every goal needs one unit of.
pub fn sc_to_snr(game: &Game, c: &Coalition) -> Result<ReductionOutput> {
    game.check_nonempty_coalition(c)?;
    let mut parts = game.parts().clone();
    let num_goals = game.num_goals() as u64;
    let r = add_resource(&mut parts, |_| num_goals, |_| Quantity::Finite(1));
    Ok(ReductionOutput {
        game: Game::new(parts)?,
        query: Query::Snr { coalition: c.clone(), resource: r },
        polarity: Polarity::Same,
    })
}

/// SC → CGRO: a new resource `r'` held one unit per member of `C`, and a
/// new goal `g'` needing `|C|` of `r'` and nothing else; `G_0 = {g'}`.
pub fn sc_to_cgro(game: &Game, c: &Coalition, placement: CgroPlacement) -> Result<ReductionOutput> {
    game.check_nonempty_coalition(c)?;
    let mut parts = game.parts().clone();
    let r = add_resource(&mut parts, |i| c.contains(i) as u64, |_| Quantity::ZERO);
    let mut requirement = vec![Quantity::ZERO; parts.resources.len()];
    requirement[r] = Quantity::Finite(c.len() as u64);
    let g = add_goal(&mut parts, requirement);
    if placement == CgroPlacement::MemberGoalSets {
        for i in c.iter() {
            let gi = &parts.agent_goals[i];
            parts.agent_goals[i] = gi.union(&GoalSet::from([g]));
        }
    }
    Ok(ReductionOutput {
        game: Game::new(parts)?,
        query: Query::Cgro {
            coalition: c.clone(),
            goal_set: GoalSet::from([g]),
            resource: r,
        },
        polarity: Polarity::Opposite,
    })
}

/// SC → RPEGS: `r'` held `|G|` per member of `C`, every old goal needs `|C|`
/// of it; the new goal `g'` needs `|G|·|C| + 1` of `r'` and infinitely much
/// of every old resource, so any successful set dominates `G_0 = {g'}`.
pub fn sc_to_rpegs(game: &Game, c: &Coalition) -> Result<ReductionOutput> {
    game.check_nonempty_coalition(c)?;
    let (num_goals, size) = (game.num_goals(), c.len());
    let total = checked_mul(num_goals, size)?;
    let top = total
        .checked_add(1)
        .ok_or_else(|| CrgError::Overflow("|G|·|C| + 1".into()))?;
    let mut parts = game.parts().clone();
    let r = add_resource(
        &mut parts,
        |i| if c.contains(i) { num_goals as u64 } else { 0 },
        |_| Quantity::Finite(size as u64),
    );
    let mut requirement = vec![Quantity::Infinite; parts.resources.len()];
    requirement[r] = Quantity::Finite(top);
    let g = add_goal(&mut parts, requirement);
    Ok(ReductionOutput {
        game: Game::new(parts)?,
        query: Query::Rpegs {
            coalition: c.clone(),
            goal_set: GoalSet::from([g]),
        },
        polarity: Polarity::Opposite,
    })
}

/// `r'` held `|G|` per member of `C`, needed `|C|` by every goal. Shared by the SCRB and CC gadgets.
fn add_scaled_resource(game: &Game, c: &Coalition) -> GameParts {
    let (num_goals, size) = (game.num_goals() as u64, c.len() as u64);
    let mut parts = game.parts().clone();
    add_resource(
        &mut parts,
        |i| if c.contains(i) { num_goals } else { 0 },
        |_| Quantity::Finite(size),
    );
    parts
}

/// SC → SCRB with `b = (1, ..., 1, |C| - 1)`: every successful set needs at
/// least `|C|` of `r'`, so none respects `b`.
///
/// The claimed polarity (SC YES ⇔ SCRB NO) holds in full only when SCRB is
/// read with the vacuous convention; under the strict reading an
/// unsuccessful `C` also yields NO.
pub fn sc_to_scrb(game: &Game, c: &Coalition) -> Result<ReductionOutput> {
    game.check_nonempty_coalition(c)?;
    let parts = add_scaled_resource(game, c);
    let mut bound = vec![Quantity::Finite(1); game.num_resources()];
    bound.push(Quantity::Finite(c.len() as u64 - 1));
    Ok(ReductionOutput {
        game: Game::new(parts)?,
        query: Query::Scrb {
            coalition: c.clone(),
            bound: ResourceBound::new(bound),
        },
        polarity: Polarity::Opposite,
    })
}

/// SC → CC with `C1 = C2 = C` and `b = (∞, ..., ∞, |G|·|C|)`: any successful
/// set paired with itself is not in conflict.
pub fn sc_to_cc(game: &Game, c: &Coalition) -> Result<ReductionOutput> {
    game.check_nonempty_coalition(c)?;
    let cap = checked_mul(game.num_goals(), c.len())?;
    let parts = add_scaled_resource(game, c);
    let mut bound = vec![Quantity::Infinite; game.num_resources()];
    bound.push(Quantity::Finite(cap));
    Ok(ReductionOutput {
        game: Game::new(parts)?,
        query: Query::Cc {
            first: c.clone(),
            second: c.clone(),
            bound: ResourceBound::new(bound),
        },
        polarity: Polarity::Opposite,
    })
}

/// Independent Set → ESCK on a game with a single goal. Agent `a_i` stands
/// for vertex `v_i` and holds one unit of every edge resource except those
/// of its incident edges; the goal needs `k - 1` of each. A `k`-coalition
/// affords the goal iff no edge has both endpoints inside it.
///
/// Edgeless graphs get one placeholder resource that nobody needs, since a
/// game must have at least one resource.
pub fn is_to_esck_g1(graph: &Graph, k: usize) -> Result<ReductionOutput> {
    if !(1..=graph.num_vertices()).contains(&k) {
        return Err(CrgError::input(format!(
            "k must lie in 1..={}, got {k}",
            graph.num_vertices()
        )));
    }
    let n = graph.num_vertices();
    let m = graph.edges().len();
    let game = if m == 0 {
        let mut b = GameBuilder::new(numbered_ids("a", n), vec!["g".to_string()], vec!["r0".to_string()]);
        for i in 0..n {
            b = b.goals_of(i, [0]).endow(i, 0, 1);
        }
        b.build()?
    } else {
        // with k = 1 the requirement is 0 and every singleton coalition succeeds
        let mut b = GameBuilder::new(numbered_ids("a", n), vec!["g".to_string()], numbered_ids("r", m));
        for i in 0..n {
            b = b.goals_of(i, [0]);
            for j in 0..m {
                b = b.endow(i, j, u64::from(!graph.is_incident(i, j)));
            }
        }
        for j in 0..m {
            b = b.require(0, j, (k - 1) as u64);
        }
        b.build()?
    };
    Ok(ReductionOutput {
        game,
        query: Query::Esck { k },
        polarity: Polarity::Same,
    })
}

/// `num_agents` agents, one goal and one resource; every agent holds one
/// unit, the goal needs nothing and every agent wants it. Every coalition is
/// successful, yet every non-empty goal set satisfies all `num_agents > k` agents.
pub fn gen_counterexample(k: usize, num_agents: usize) -> Result<(Game, usize)> {
    gen_counterexample_sized(k, num_agents, 1, 1)
}

/// [`gen_counterexample`] with a configurable number of goals and resources.
pub fn gen_counterexample_sized(
    k: usize,
    num_agents: usize,
    num_goals: usize,
    num_resources: usize,
) -> Result<(Game, usize)> {
    if k == 0 || num_agents <= k {
        return Err(CrgError::input(format!(
            "need num_agents > k >= 1, got k = {k}, num_agents = {num_agents}"
        )));
    }
    let mut b = GameBuilder::numbered(num_agents, num_goals, num_resources);
    for i in 0..num_agents {
        b = b.goals_of(i, 0..num_goals);
        for r in 0..num_resources {
            b = b.endow(i, r, 1);
        }
    }
    Ok((b.build()?, k))
}

/// The refuted goal-subset-first ESCK procedure, kept as a test fixture:
/// for each `G' ⊆ G`, take the agents `G'` satisfies, skip unless there are
/// exactly `k`, and accept if `G'` is feasible for them.
pub fn buggy_esck(game: &Game, k: usize) -> Result<bool> {
    if !(1..=game.num_agents()).contains(&k) {
        return Err(CrgError::input(format!(
            "k must lie in 1..={}, got {k}",
            game.num_agents()
        )));
    }
    for goals in (0..game.num_goals()).powerset().map(GoalSet::new) {
        let satisfied: Coalition = (0..game.num_agents())
            .filter(|&i| game.agent_goals(i).intersects(&goals))
            .collect();
        if satisfied.len() != k {
            continue;
        }
        if game.is_feasible(&goals, &satisfied) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::problems::{solve, Backend, SolveOptions};

    fn k3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2)]).unwrap()
    }

    fn verdict(out: &ReductionOutput, opts: SolveOptions) -> bool {
        solve(&out.game, &out.query, Backend::Enumeration, &opts).unwrap().verdict
    }

    fn strict() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
        assert!(Graph::new(0, vec![]).is_err());
        assert_eq!(Graph::all_labeled(4).len(), 64);
    }

    #[test]
    fn is_to_sc_examples() {
        assert!(!verdict(&is_to_sc(&k3(), 2).unwrap(), strict()));
        assert!(verdict(&is_to_sc(&p3(), 2).unwrap(), strict()));
        let edge = Graph::new(2, vec![(0, 1)]).unwrap();
        assert!(verdict(&is_to_sc(&edge, 1).unwrap(), strict()));
        assert!(is_to_sc(&k3(), 0).is_err());
        assert!(is_to_sc(&k3(), 4).is_err());
    }

    #[test]
    fn is_to_sc_sizes_and_entries() {
        let out = is_to_sc(&k3(), 2).unwrap();
        let g = &out.game;
        assert_eq!((g.num_agents(), g.num_goals(), g.num_resources()), (2, 6, 3));
        for r in 0..3 {
            assert_eq!(g.coalition_endowment(&g.grand_coalition(), r).unwrap(), Quantity::Finite(2));
        }
        // two copies of vertex x1 (goals g1_1 and g1_2) on edge e1 = {x1, x2}
        let pair = GoalSet::from([0, 3]);
        assert_eq!(g.goalset_requirement(&pair, 0).unwrap(), Quantity::Finite(4));
    }

    #[test]
    fn isolated_vertices_lower_k() {
        // one edge plus two isolated vertices: IS of size 3 exists, size 4 does not
        let g = Graph::new(4, vec![(0, 1)]).unwrap();
        let out = is_to_sc(&g, 3).unwrap();
        assert_eq!(out.game.num_agents(), 1);
        assert!(verdict(&out, strict()));
        assert!(!verdict(&is_to_sc(&g, 4).unwrap(), strict()));
        let empty = Graph::new(3, vec![]).unwrap();
        assert!(verdict(&is_to_sc(&empty, 3).unwrap(), strict()));
    }

    #[test]
    fn sc_to_esck_examples() {
        assert!(verdict(&sc_to_esck(&game_a(), &[0].into()).unwrap(), strict()));
        assert!(!verdict(&sc_to_esck(&game_b(), &[0].into()).unwrap(), strict()));
        let out = sc_to_esck(&two_agent_conflict(), &[0].into()).unwrap();
        assert_eq!(out.game.num_agents(), 1);
        assert_eq!(out.query, Query::Esck { k: 1 });
    }

    #[test]
    fn sc_to_nr_examples() {
        let out = sc_to_nr(&game_a(), &[0].into()).unwrap();
        assert_eq!(out.game.num_resources(), 2);
        assert!(!verdict(&out, strict()));
        assert!(verdict(&sc_to_nr(&game_b(), &[0].into()).unwrap(), strict()));
    }

    #[test]
    fn sc_to_snr_examples() {
        let out = sc_to_snr(&game_a(), &[0].into()).unwrap();
        assert!(verdict(&out, strict()));
        assert!(!verdict(&sc_to_snr(&game_b(), &[0].into()).unwrap(), strict()));
        let free = game_a_with_free_goal();
        let out = sc_to_snr(&free, &[0].into()).unwrap();
        let Query::Snr { resource, .. } = out.query else { panic!() };
        for gs in out.game.all_goals().iter().powerset().map(GoalSet::new) {
            assert_eq!(out.game.requirement_of(&gs, resource), Quantity::Finite(gs.len() as u64));
        }
    }

    #[test]
    fn sc_to_cgro_examples() {
        let verbatim = sc_to_cgro(&game_a(), &[0].into(), CgroPlacement::Verbatim).unwrap();
        let err = solve(&verbatim.game, &verbatim.query, Backend::Enumeration, &strict()).unwrap_err();
        assert!(err.is_precondition());

        let out = sc_to_cgro(&game_a(), &[0].into(), CgroPlacement::MemberGoalSets).unwrap();
        assert!(!verdict(&out, strict()));
        let out = sc_to_cgro(&game_b(), &[0].into(), CgroPlacement::MemberGoalSets).unwrap();
        assert!(verdict(&out, strict()));

        let c = Coalition::from([0, 1]);
        let out = sc_to_cgro(&two_agent_conflict(), &c, CgroPlacement::Verbatim).unwrap();
        let Query::Cgro { goal_set, resource, .. } = &out.query else { panic!() };
        assert_eq!(out.game.requirement_of(goal_set, *resource), Quantity::Finite(2));
    }

    #[test]
    fn sc_to_rpegs_examples() {
        let out = sc_to_rpegs(&game_a(), &[0].into()).unwrap();
        assert!(!verdict(&out, strict()));
        assert!(verdict(&sc_to_rpegs(&game_b(), &[0].into()).unwrap(), strict()));
        let g = out.game.num_goals() - 1;
        assert!(!out.game.is_feasible(&GoalSet::from([g]), &out.game.grand_coalition()));
    }

    #[test]
    fn sc_to_scrb_examples() {
        let vacuous = SolveOptions { vacuous_scrb_yes: true };
        assert!(!verdict(&sc_to_scrb(&game_a(), &[0].into()).unwrap(), strict()));
        assert!(!verdict(&sc_to_scrb(&game_b(), &[0].into()).unwrap(), strict()));
        assert!(verdict(&sc_to_scrb(&game_b(), &[0].into()).unwrap(), vacuous));
    }

    #[test]
    fn sc_to_cc_examples() {
        assert!(!verdict(&sc_to_cc(&game_a(), &[0].into()).unwrap(), strict()));
        assert!(verdict(&sc_to_cc(&game_b(), &[0].into()).unwrap(), strict()));
        let base = two_agent_conflict();
        let c = Coalition::from([0, 1]);
        let out = sc_to_cc(&base, &c).unwrap();
        assert_eq!(base.enumerate_succ(&c, None).unwrap(), out.game.enumerate_succ(&c, None).unwrap());
    }

    #[test]
    fn is_to_esck_g1_examples() {
        let out = is_to_esck_g1(&p3(), 2).unwrap();
        assert_eq!(out.game.num_goals(), 1);
        assert!(verdict(&out, strict()));
        assert!(!verdict(&is_to_esck_g1(&k3(), 2).unwrap(), strict()));
        assert!(verdict(&is_to_esck_g1(&k3(), 1).unwrap(), strict()));
        assert!(verdict(&is_to_esck_g1(&Graph::new(3, vec![]).unwrap(), 3).unwrap(), strict()));
        assert!(is_to_esck_g1(&k3(), 4).is_err());
    }

    #[test]
    fn counterexample_family() {
        for (k, n) in [(1, 2), (2, 5)] {
            let (game, k) = gen_counterexample(k, n).unwrap();
            assert!(!buggy_esck(&game, k).unwrap());
            assert!(verdict(
                &ReductionOutput { game, query: Query::Esck { k }, polarity: Polarity::Same },
                strict()
            ));
        }
        assert!(gen_counterexample(2, 2).is_err());
        assert!(gen_counterexample(0, 2).is_err());
        let (game, k) = gen_counterexample_sized(1, 3, 2, 2).unwrap();
        assert!(!buggy_esck(&game, k).unwrap());
    }

    #[test]
    fn buggy_esck_accepts_when_satisfied_set_has_size_k() {
        assert!(buggy_esck(&game_a(), 1).unwrap());
        let conflict = two_agent_conflict();
        assert!(buggy_esck(&conflict, 2).unwrap());
        assert!(buggy_esck(&conflict, 1).unwrap());
        assert!(buggy_esck(&conflict, 3).is_err());
    }
}
