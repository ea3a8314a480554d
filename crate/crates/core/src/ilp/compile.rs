//! Compilation of decision queries into 0/1 programs over goal and agent variables.
//!
//! The base program has one variable `x_g` per goal and `y_i` per agent with
//!
//! ```text
//! (1)  for every agent i:     Σ_{g ∈ G_i} x_g  >=  y_i
//! (2)  for every resource r:  Σ_g req(g,r)·x_g  <=  Σ_i en(i,r)·y_i
//! ```
//!
//! Goals with an infinite requirement can never be afforded and are fixed
//! to 0, so every coefficient is a finite integer.

use crate::error::{CrgError, Result};
use crate::game::{Coalition, Game, GoalSet, ResourceBound, MAX_TOTAL};
use crate::problems::{Answer, Query, SolveOptions, Witness};
use crate::quantity::Quantity;

use super::engine::{IntegerProgram, LinearConstraint, VarKind};

/// How the feasibility of the compiled programs maps to a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictRule {
    /// Decided at compile time; no programs.
    Constant(bool),
    FeasibleMeansYes,
    FeasibleMeansNo,
    /// NO as soon as any program is feasible.
    AnyFeasibleMeansNo,
    /// YES iff the first program is feasible and the second is not.
    FirstFeasibleSecondInfeasible,
    /// YES iff the first program is infeasible or the second is feasible.
    FirstInfeasibleOrSecondFeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessShape {
    Goals,
    CoalitionGoals,
    GoalPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledQuery {
    pub programs: Vec<IntegerProgram>,
    pub rule: VerdictRule,
    pub shape: WitnessShape,
}

impl CompiledQuery {
    /// Solves the programs in order, stopping once the verdict is settled.
    pub fn decide(&self) -> Result<Answer> {
        let solve = |i: usize| -> Result<Option<Vec<bool>>> { self.programs[i].feasible() };
        let witness = |i: usize, a: &[bool]| Some(self.witness(i, a));
        let answer = match self.rule {
            VerdictRule::Constant(v) => Answer { verdict: v, witness: None },
            VerdictRule::FeasibleMeansYes => match solve(0)? {
                Some(a) => Answer::yes(witness(0, &a)),
                None => Answer::no(None),
            },
            VerdictRule::FeasibleMeansNo => match solve(0)? {
                Some(a) => Answer::no(witness(0, &a)),
                None => Answer::yes(None),
            },
            VerdictRule::AnyFeasibleMeansNo => {
                for i in 0..self.programs.len() {
                    if let Some(a) = solve(i)? {
                        return Ok(Answer::no(witness(i, &a)));
                    }
                }
                Answer::yes(None)
            }
            VerdictRule::FirstFeasibleSecondInfeasible => match solve(0)? {
                None => Answer::no(None),
                Some(first) => match solve(1)? {
                    Some(a) => Answer::no(witness(1, &a)),
                    None => Answer::yes(witness(0, &first)),
                },
            },
            VerdictRule::FirstInfeasibleOrSecondFeasible => match solve(0)? {
                None => Answer::yes(None),
                Some(_) => match solve(1)? {
                    Some(a) => Answer::yes(witness(1, &a)),
                    None => Answer::no(None),
                },
            },
        };
        Ok(answer)
    }

    fn witness(&self, program: usize, assignment: &[bool]) -> Witness {
        let labels = &self.programs[program].labels;
        let pick = |kind: VarKind| -> Vec<usize> {
            labels
                .iter()
                .zip(assignment)
                .filter(|(l, &on)| on && l.kind == kind)
                .map(|(l, _)| l.index)
                .collect()
        };
        match self.shape {
            WitnessShape::Goals => Witness::Goals(GoalSet::new(pick(VarKind::Goal))),
            WitnessShape::CoalitionGoals => Witness::CoalitionGoals {
                coalition: Coalition::new(pick(VarKind::Agent)),
                goals: GoalSet::new(pick(VarKind::Goal)),
            },
            WitnessShape::GoalPair => Witness::GoalPair {
                first: GoalSet::new(pick(VarKind::Goal)),
                second: GoalSet::new(pick(VarKind::SecondGoal)),
            },
        }
    }
}

/// Variable indices of one coalition block.
struct Block {
    goals: Vec<usize>,
    agents: Vec<usize>,
}

fn coefficient(v: u64) -> i64 {
    // game construction keeps every total, hence every entry, within MAX_TOTAL
    debug_assert!(v <= MAX_TOTAL);
    v as i64
}

/// Caps a finite bound at `MAX_TOTAL`; no goal set can need more than that.
fn capped(v: u64) -> i64 {
    v.min(MAX_TOTAL) as i64
}

fn add_block(ip: &mut IntegerProgram, game: &Game, goal_kind: VarKind, agent_kind: VarKind) -> Result<Block> {
    let goals: Vec<usize> = (0..game.num_goals()).map(|g| ip.add_var(goal_kind, g)).collect();
    let agents: Vec<usize> = (0..game.num_agents()).map(|i| ip.add_var(agent_kind, i)).collect();
    for (g, &x) in goals.iter().enumerate() {
        if (0..game.num_resources()).any(|r| !game.requirement(g, r).is_finite()) {
            ip.fix(x, false)?;
        }
    }
    for (i, &y) in agents.iter().enumerate() {
        let mut terms: Vec<(usize, i64)> = game.agent_goals(i).iter().map(|g| (goals[g], 1)).collect();
        terms.push((y, -1));
        ip.add_constraint(LinearConstraint::ge(terms, 0))?;
    }
    for r in 0..game.num_resources() {
        let mut terms = usage(game, &goals, r);
        for (i, &y) in agents.iter().enumerate() {
            let en = game.endowment(i, r);
            if en > 0 {
                terms.push((y, -coefficient(en)));
            }
        }
        ip.add_constraint(LinearConstraint::le(terms, 0))?;
    }
    Ok(Block { goals, agents })
}

/// `Σ_g req(g, r)·x_g` over goals with a finite, non-zero requirement.
fn usage(game: &Game, goals: &[usize], r: usize) -> Vec<(usize, i64)> {
    goals
        .iter()
        .enumerate()
        .filter_map(|(g, &x)| match game.requirement(g, r) {
            Quantity::Finite(v) if v > 0 => Some((x, coefficient(v))),
            _ => None,
        })
        .collect()
}

fn pin_coalition(ip: &mut IntegerProgram, block: &Block, c: &Coalition) -> Result<()> {
    for (i, &y) in block.agents.iter().enumerate() {
        ip.fix(y, c.contains(i))?;
    }
    Ok(())
}

/// Constraints (1) and (2) with free agent variables. The all-zero
/// assignment always satisfies this program; callers add whatever forces a
/// non-empty coalition.
pub fn build_base_ip(game: &Game) -> IntegerProgram {
    let mut ip = IntegerProgram::new();
    add_block(&mut ip, game, VarKind::Goal, VarKind::Agent).expect("fresh variables");
    ip
}

/// The base program with `y_i = [i ∈ C]`. Satisfiable iff `C` is successful.
pub fn build_fcip(game: &Game, c: &Coalition) -> Result<IntegerProgram> {
    game.check_nonempty_coalition(c)?;
    Ok(fcip_with_block(game, c)?.0)
}

fn fcip_with_block(game: &Game, c: &Coalition) -> Result<(IntegerProgram, Block)> {
    let mut ip = IntegerProgram::new();
    let block = add_block(&mut ip, game, VarKind::Goal, VarKind::Agent)?;
    pin_coalition(&mut ip, &block, c)?;
    Ok((ip, block))
}

/// FCIP with every goal that uses `resource` switched off.
fn resource_free_fcip(game: &Game, c: &Coalition, resource: usize) -> Result<IntegerProgram> {
    let (mut ip, block) = fcip_with_block(game, c)?;
    for (g, &x) in block.goals.iter().enumerate() {
        if !game.requirement(g, resource).is_zero() {
            ip.fix(x, false)?;
        }
    }
    Ok(ip)
}

fn bounded_fcip(game: &Game, c: &Coalition, bound: &ResourceBound) -> Result<IntegerProgram> {
    let (mut ip, block) = fcip_with_block(game, c)?;
    for r in 0..game.num_resources() {
        let terms = usage(game, &block.goals, r);
        // an unbounded resource keeps its row, with a right-hand side no goal set can exceed
        let rhs = match bound.get(r) {
            Quantity::Finite(b) => capped(b),
            Quantity::Infinite => terms.iter().map(|&(_, a)| a).sum(),
        };
        ip.add_constraint(LinearConstraint::le(terms, rhs))?;
    }
    Ok(ip)
}

/// Compiles a query into programs plus the rule that turns their feasibility into a verdict.
///
/// MAXC and MAXSC have no program formulation and are rejected. CC compiles
/// into a search for a pair `(G1, G2) ∈ succ(C1) × succ(C2)` that is *not* in
/// conflict, with `z_g = x_g ∨ X_g` linearized as `z ≥ x`, `z ≥ X`, `z ≤ x + X`:
/// one program per finite-bounded resource for "G1 breaks the bound there",
/// the same for G2, and one for "G1 ∪ G2 respects the bound". Any feasible
/// program refutes CC.
pub fn compile(game: &Game, query: &Query, options: &SolveOptions) -> Result<CompiledQuery> {
    query.validate(game)?;
    let single = |ip: IntegerProgram, rule: VerdictRule, shape: WitnessShape| CompiledQuery {
        programs: vec![ip],
        rule,
        shape,
    };
    let compiled = match query {
        Query::Sc { coalition } => single(
            build_fcip(game, coalition)?,
            VerdictRule::FeasibleMeansYes,
            WitnessShape::Goals,
        ),
        Query::Esck { k } => {
            let mut ip = IntegerProgram::new();
            let block = add_block(&mut ip, game, VarKind::Goal, VarKind::Agent)?;
            let terms = block.agents.iter().map(|&y| (y, 1)).collect();
            ip.add_constraint(LinearConstraint::eq(terms, *k as i64))?;
            single(ip, VerdictRule::FeasibleMeansYes, WitnessShape::CoalitionGoals)
        }
        Query::Maxc { .. } | Query::Maxsc { .. } => {
            return Err(CrgError::input(format!(
                "{} has no integer-program formulation; use the enumeration backend",
                query.problem()
            )))
        }
        Query::Nr { coalition, resource } => single(
            resource_free_fcip(game, coalition, *resource)?,
            VerdictRule::FeasibleMeansNo,
            WitnessShape::Goals,
        ),
        Query::Snr { coalition, resource } => CompiledQuery {
            programs: vec![
                build_fcip(game, coalition)?,
                resource_free_fcip(game, coalition, *resource)?,
            ],
            rule: VerdictRule::FirstFeasibleSecondInfeasible,
            shape: WitnessShape::Goals,
        },
        Query::Cgro { coalition, goal_set, resource } => {
            if !game.is_successful_goalset(goal_set, coalition) {
                return Err(CrgError::Precondition(format!(
                    "goal set {goal_set} is not in succ({coalition})"
                )));
            }
            // G0 is feasible, so its requirement is finite
            let beta = game.requirement_of(goal_set, *resource).finite().expect("feasible goal set");
            if beta == 0 {
                CompiledQuery {
                    programs: Vec::new(),
                    rule: VerdictRule::Constant(true),
                    shape: WitnessShape::Goals,
                }
            } else {
                let (mut ip, block) = fcip_with_block(game, coalition)?;
                let terms = usage(game, &block.goals, *resource);
                ip.add_constraint(LinearConstraint::le(terms, coefficient(beta) - 1))?;
                single(ip, VerdictRule::FeasibleMeansNo, WitnessShape::Goals)
            }
        }
        Query::Rpegs { coalition, goal_set } => {
            let target: Vec<Quantity> = (0..game.num_resources())
                .map(|r| game.requirement_of(goal_set, r))
                .collect();
            let mut programs = Vec::with_capacity(game.num_resources());
            for strict in 0..game.num_resources() {
                let (mut ip, block) = fcip_with_block(game, coalition)?;
                for (r, &t) in target.iter().enumerate() {
                    // anything feasible is finite, so a comparison against infinity always holds
                    let Quantity::Finite(t) = t else { continue };
                    let rhs = if r == strict { coefficient(t) - 1 } else { coefficient(t) };
                    ip.add_constraint(LinearConstraint::le(usage(game, &block.goals, r), rhs))?;
                }
                programs.push(ip);
            }
            CompiledQuery {
                programs,
                rule: VerdictRule::AnyFeasibleMeansNo,
                shape: WitnessShape::Goals,
            }
        }
        Query::Scrb { coalition, bound } => {
            let bounded = bounded_fcip(game, coalition, bound)?;
            if options.vacuous_scrb_yes {
                CompiledQuery {
                    programs: vec![build_fcip(game, coalition)?, bounded],
                    rule: VerdictRule::FirstInfeasibleOrSecondFeasible,
                    shape: WitnessShape::Goals,
                }
            } else {
                single(bounded, VerdictRule::FeasibleMeansYes, WitnessShape::Goals)
            }
        }
        Query::Cc { first, second, bound } => compile_cc(game, first, second, bound)?,
    };
    Ok(compiled)
}

/// Which non-conflict condition a CC program looks for.
#[derive(Debug, Clone, Copy)]
enum PairCondition {
    FirstExceeds(usize),
    SecondExceeds(usize),
    UnionRespects,
}

fn compile_cc(game: &Game, c1: &Coalition, c2: &Coalition, bound: &ResourceBound) -> Result<CompiledQuery> {
    let mut conditions = vec![PairCondition::UnionRespects];
    for r in 0..game.num_resources() {
        // exceeding an infinite bound, or one above every reachable total, is impossible
        if bound.get(r).finite().is_some_and(|b| b < MAX_TOTAL) {
            conditions.push(PairCondition::FirstExceeds(r));
            conditions.push(PairCondition::SecondExceeds(r));
        }
    }
    let programs = conditions
        .into_iter()
        .map(|cond| cc_program(game, c1, c2, bound, cond))
        .collect::<Result<Vec<_>>>()?;
    Ok(CompiledQuery {
        programs,
        rule: VerdictRule::AnyFeasibleMeansNo,
        shape: WitnessShape::GoalPair,
    })
}

fn cc_program(
    game: &Game,
    c1: &Coalition,
    c2: &Coalition,
    bound: &ResourceBound,
    condition: PairCondition,
) -> Result<IntegerProgram> {
    let mut ip = IntegerProgram::new();
    let first = add_block(&mut ip, game, VarKind::Goal, VarKind::Agent)?;
    pin_coalition(&mut ip, &first, c1)?;
    let second = add_block(&mut ip, game, VarKind::SecondGoal, VarKind::SecondAgent)?;
    pin_coalition(&mut ip, &second, c2)?;
    let union: Vec<usize> = (0..game.num_goals()).map(|g| ip.add_var(VarKind::UnionGoal, g)).collect();
    for ((&x, &xx), &z) in first.goals.iter().zip(&second.goals).zip(&union) {
        ip.add_constraint(LinearConstraint::ge(vec![(z, 1), (x, -1)], 0))?;
        ip.add_constraint(LinearConstraint::ge(vec![(z, 1), (xx, -1)], 0))?;
        ip.add_constraint(LinearConstraint::le(vec![(z, 1), (x, -1), (xx, -1)], 0))?;
    }
    let finite_bound = |r: usize| bound.get(r).finite().map(capped);
    match condition {
        PairCondition::FirstExceeds(r) | PairCondition::SecondExceeds(r) => {
            let goals = match condition {
                PairCondition::FirstExceeds(_) => &first.goals,
                _ => &second.goals,
            };
            let b = finite_bound(r).expect("only finite bounds are targeted");
            ip.add_constraint(LinearConstraint::ge(usage(game, goals, r), b + 1))?;
        }
        PairCondition::UnionRespects => {
            for r in 0..game.num_resources() {
                if let Some(b) = finite_bound(r) {
                    ip.add_constraint(LinearConstraint::le(usage(game, &union, r), b))?;
                }
            }
        }
    }
    Ok(ip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::game::GameBuilder;
    use crate::problems::{solve, Backend};

    fn c(ix: &[usize]) -> Coalition {
        Coalition::new(ix.iter().copied())
    }

    #[test]
    fn base_ip_shape() {
        let ip = build_base_ip(&game_a());
        assert_eq!(ip.num_vars(), 2);
        assert_eq!(ip.constraints.len(), 2);
        assert_eq!(ip.to_string(), "1*x1 - 1*y1 >= 0\n1*x1 - 1*y1 <= 0\n");
        // the all-zero assignment is always a solution
        assert!(ip.is_satisfied_by(&[false, false]));
    }

    #[test]
    fn infinite_goals_are_fixed_off() {
        let g = GameBuilder::numbered(1, 2, 1)
            .goals_of(0, [0, 1])
            .require(1, 0, Quantity::Infinite)
            .build()
            .unwrap();
        let ip = build_base_ip(&g);
        assert_eq!(ip.fixed[1], Some(false));
        assert_eq!(ip.fixed[0], None);
    }

    #[test]
    fn fcip_matches_success() {
        let a = build_fcip(&game_a(), &c(&[0])).unwrap().feasible().unwrap();
        assert_eq!(a, Some(vec![true, true]));
        assert_eq!(build_fcip(&game_b(), &c(&[0])).unwrap().feasible().unwrap(), None);
        assert!(build_fcip(&game_a(), &Coalition::empty()).is_err());

        let all_infinite = GameBuilder::numbered(1, 2, 1)
            .goals_of(0, [0, 1])
            .require(0, 0, Quantity::Infinite)
            .require(1, 0, Quantity::Infinite)
            .build()
            .unwrap();
        assert_eq!(build_fcip(&all_infinite, &c(&[0])).unwrap().feasible().unwrap(), None);
    }

    #[test]
    fn constraint_counts() {
        let game = two_agent_conflict();
        let (n, r) = (game.num_agents(), game.num_resources());
        let opts = SolveOptions::default();
        assert_eq!(build_base_ip(&game).constraints.len(), n + r);
        let esck = compile(&game, &Query::Esck { k: 1 }, &opts).unwrap();
        assert_eq!(esck.programs[0].constraints.len(), n + r + 1);
        let bound = ResourceBound::new(vec![Quantity::Finite(1)]);
        let scrb = compile(&game, &Query::Scrb { coalition: c(&[0]), bound }, &opts).unwrap();
        assert_eq!(scrb.programs[0].constraints.len(), n + 2 * r);
    }

    #[test]
    fn compiled_examples() {
        let opts = SolveOptions::default();
        let esck = compile(&game_a(), &Query::Esck { k: 1 }, &opts).unwrap();
        assert_eq!(esck.programs.len(), 1);
        assert!(esck.programs[0].feasible().unwrap().is_some());

        let q = Query::Rpegs { coalition: c(&[0]), goal_set: GoalSet::from([0]) };
        let rpegs = compile(&game_a(), &q, &opts).unwrap();
        assert_eq!(rpegs.programs.len(), 1);
        assert!(rpegs.programs[0].feasible().unwrap().is_none());
        assert!(rpegs.decide().unwrap().verdict);

        let q = Query::Cgro { coalition: c(&[0]), goal_set: GoalSet::from([1]), resource: 0 };
        let cgro = compile(&game_a_with_free_goal(), &q, &opts).unwrap();
        assert_eq!(cgro.rule, VerdictRule::Constant(true));
        assert!(cgro.programs.is_empty());
    }

    #[test]
    fn cc_search_finds_no_compatible_pair() {
        let bound = ResourceBound::new(vec![Quantity::Finite(1)]);
        let q = Query::Cc { first: c(&[0]), second: c(&[1]), bound };
        let compiled = compile(&two_agent_conflict(), &q, &SolveOptions::default()).unwrap();
        assert_eq!(compiled.programs.len(), 3);
        assert!(compiled.programs.iter().all(|p| p.feasible().unwrap().is_none()));
        assert!(compiled.decide().unwrap().verdict);
    }

    #[test]
    fn cc_skips_infinite_bounds() {
        let bound = ResourceBound::new(vec![Quantity::Infinite, Quantity::Finite(1)]);
        let q = Query::Cc { first: c(&[0]), second: c(&[0]), bound };
        let compiled = compile(&game_a_with_free_resource(), &q, &SolveOptions::default()).unwrap();
        assert_eq!(compiled.programs.len(), 3);
    }

    #[test]
    fn linearized_union_is_exact() {
        for a in [false, true] {
            for b in [false, true] {
                let mut ip = IntegerProgram::new();
                let x = ip.add_var(VarKind::Goal, 0);
                let xx = ip.add_var(VarKind::SecondGoal, 0);
                let z = ip.add_var(VarKind::UnionGoal, 0);
                ip.fix(x, a).unwrap();
                ip.fix(xx, b).unwrap();
                ip.add_constraint(LinearConstraint::ge(vec![(z, 1), (x, -1)], 0)).unwrap();
                ip.add_constraint(LinearConstraint::ge(vec![(z, 1), (xx, -1)], 0)).unwrap();
                ip.add_constraint(LinearConstraint::le(vec![(z, 1), (x, -1), (xx, -1)], 0)).unwrap();
                let sol = ip.feasible().unwrap().unwrap();
                assert_eq!(sol[z], a || b);
                // the other value of z is excluded
                ip.fix(z, !(a || b)).unwrap();
                assert!(ip.feasible().unwrap().is_none());
            }
        }
    }

    #[test]
    fn maxc_is_not_compiled() {
        let err = compile(&game_a(), &Query::Maxc { coalition: c(&[0]) }, &SolveOptions::default());
        assert!(err.is_err());
        assert!(solve(&game_a(), &Query::Maxsc { coalition: c(&[0]) }, Backend::IntegerProgram, &SolveOptions::default()).is_err());
    }
}
