//! Seeded certification runs: deciders against the brute-force oracle,
//! reduction polarities, the integer-program engine against exhaustive
//! evaluation.
//!
//! Every trial draws from its own ChaCha stream of the configured seed, so
//! trial `t` sees the same instance in every suite and reports are
//! byte-identical for identical configurations.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CrgError, Result};
use crate::game::{Coalition, Game, GoalSet, ResourceBound};
use crate::generate::{random_game_with, RandomParams};
use crate::ilp::{build_base_ip, compile, Comparator, IntegerProgram, LinearConstraint};
use crate::io::{parse_game, query_document, serialize_game};
use crate::oracles::{assignment_satisfies, brute_force_answer, ilp_exhaustive, independent_set_exists, ORACLE_LIMIT};
use crate::problems::{solve, witness_is_valid, Backend, Problem, Query, SolveOptions};
use crate::quantity::Quantity;
use crate::reductions::{self, buggy_esck, CgroPlacement, Graph, ReductionOutput};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Failure details kept per check.
const MAX_DETAILS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemmas,
    Backends,
    Reductions,
    Ilp,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Lemmas, Suite::Backends, Suite::Reductions, Suite::Ilp];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Backends => "backends",
            Suite::Reductions => "reductions",
            Suite::Ilp => "ilp",
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Lemmas => 300,
            Suite::Backends => 500,
            Suite::Reductions => 300,
            Suite::Ilp => 1000,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CrgError;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| CrgError::input(format!("unknown verify suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_agents: usize,
    pub max_goals: usize,
    pub max_resources: usize,
    pub max_value: u64,
}

impl VerifyConfig {
    pub fn new(suite: Suite) -> Self {
        VerifyConfig {
            trials: suite.default_trials(),
            seed: DEFAULT_SEED,
            max_agents: 5,
            max_goals: 5,
            max_resources: 3,
            max_value: 3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_agents == 0 || self.max_goals == 0 || self.max_resources == 0 {
            return Err(CrgError::input("maximum agent, goal and resource counts must be at least 1"));
        }
        // gadgets add one goal
        if self.max_agents > ORACLE_LIMIT || self.max_goals >= ORACLE_LIMIT {
            return Err(CrgError::input(format!(
                "at most {ORACLE_LIMIT} agents and {} goals fit the oracle",
                ORACLE_LIMIT - 1
            )));
        }
        Ok(())
    }
}

/// One named property and how often it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub details: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: 0, total: 0, details: Vec::new() }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.details.len() < MAX_DETAILS {
            self.details.push(detail());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(suite: Suite, config: &VerifyConfig) -> Self {
        Report { suite, config: *config, checks: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, name: &str) -> &mut Check {
        match self.checks.iter().position(|c| c.name == name) {
            Some(i) => &mut self.checks[i],
            None => {
                self.checks.push(Check::new(name));
                self.checks.last_mut().expect("just pushed")
            }
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn render(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "verify {} (seed {}, trials {}, max agents {}, goals {}, resources {}, value {})\n",
            self.suite, c.seed, c.trials, c.max_agents, c.max_goals, c.max_resources, c.max_value
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for check in &self.checks {
            let status = if check.ok() { "ok" } else { "FAIL" };
            out += &format!("  {:width$}  {:>5}/{:<5} {status}\n", check.name, check.passed, check.total);
            for d in &check.details {
                out += &format!("      {d}\n");
            }
        }
        for note in &self.notes {
            out += &format!("  note: {note}\n");
        }
        out += if self.passed() { "result: PASS\n" } else { "result: FAIL\n" };
        out
    }
}

pub fn run(suite: Suite, config: &VerifyConfig) -> Result<Report> {
    config.validate()?;
    match suite {
        Suite::Lemmas => lemmas(config),
        Suite::Backends => backends(config),
        Suite::Reductions => reductions_suite(config),
        Suite::Ilp => Ok(ilp(config)),
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn nonempty_subset<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    if members.is_empty() {
        members.push(rng.gen_range(0..n));
    }
    members
}

/// A random game, a coalition, and one query per problem over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub game: Game,
    pub coalition: Coalition,
    pub queries: Vec<Query>,
}

/// Instance `trial` of the corpus for `config`.
pub fn corpus_instance(config: &VerifyConfig, trial: usize) -> Result<Instance> {
    let rng = &mut trial_rng(config.seed, trial);
    let params = RandomParams {
        num_agents: rng.gen_range(1..=config.max_agents),
        num_goals: rng.gen_range(1..=config.max_goals),
        num_resources: rng.gen_range(1..=config.max_resources),
        max_value: config.max_value,
        goal_density: *[0.25, 0.5, 0.75].choose(rng).expect("non-empty"),
    };
    let mut game = random_game_with(&params, rng)?;
    let (n, m, r) = (params.num_agents, params.num_goals, params.num_resources);
    if rng.gen_bool(0.2) {
        let mut parts = game.into_parts();
        parts.requirement[rng.gen_range(0..m)][rng.gen_range(0..r)] = Quantity::Infinite;
        game = Game::new(parts)?;
    }
    let coalition = Coalition::new(nonempty_subset(rng, n));
    let second = Coalition::new(nonempty_subset(rng, n));
    let resource = rng.gen_range(0..r);
    let k = rng.gen_range(1..=n);
    let succ = game.enumerate_succ(&coalition, None)?;
    let mut pick_goal_set = |from_succ: f64| match succ.choose(rng) {
        Some(gs) if rng.gen_bool(from_succ) => gs.clone(),
        _ => GoalSet::new(nonempty_subset(rng, m)),
    };
    let cgro_set = pick_goal_set(0.85);
    let rpegs_set = pick_goal_set(0.5);
    let bound_cap = config.max_value.saturating_mul(2);
    let mut bound = || {
        ResourceBound::new(
            (0..r)
                .map(|_| {
                    if rng.gen_bool(0.15) {
                        Quantity::Infinite
                    } else {
                        Quantity::Finite(rng.gen_range(0..=bound_cap))
                    }
                })
                .collect(),
        )
    };
    let (scrb_bound, cc_bound) = (bound(), bound());
    let c = || coalition.clone();
    let queries = vec![
        Query::Sc { coalition: c() },
        Query::Esck { k },
        Query::Maxc { coalition: c() },
        Query::Maxsc { coalition: c() },
        Query::Nr { coalition: c(), resource },
        Query::Snr { coalition: c(), resource },
        Query::Cgro { coalition: c(), goal_set: cgro_set, resource },
        Query::Rpegs { coalition: c(), goal_set: rpegs_set },
        Query::Scrb { coalition: c(), bound: scrb_bound },
        Query::Cc { first: c(), second, bound: cc_bound },
    ];
    Ok(Instance { game, coalition, queries })
}

/// A decider's result reduced to what must agree across implementations.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Verdict(bool),
    Precondition,
    Error(String),
}

impl Outcome {
    fn of(result: Result<bool>) -> Outcome {
        match result {
            Ok(v) => Outcome::Verdict(v),
            Err(e) if e.is_precondition() => Outcome::Precondition,
            Err(e) => Outcome::Error(e.to_string()),
        }
    }

    fn agrees(&self, other: &Outcome) -> bool {
        !matches!(self, Outcome::Error(_)) && self == other
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Verdict(true) => f.write_str("YES"),
            Outcome::Verdict(false) => f.write_str("NO"),
            Outcome::Precondition => f.write_str("precondition error"),
            Outcome::Error(e) => write!(f, "error: {e}"),
        }
    }
}

fn backends(config: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::Backends, config);
    let strict = SolveOptions::default();
    let vacuous = SolveOptions { vacuous_scrb_yes: true };
    let mut yes = [0usize; Problem::ALL.len()];
    let mut screened = 0;
    let mut finite = 0;
    for trial in 0..config.trials {
        let inst = corpus_instance(config, trial)?;
        let game = &inst.game;
        for (pi, query) in inst.queries.iter().enumerate() {
            let problem = query.problem();
            let mut runs = vec![(strict, "")];
            if problem == Problem::Scrb {
                runs.push((vacuous, " (vacuous)"));
            }
            for (opts, suffix) in runs {
                let oracle = Outcome::of(brute_force_answer(game, query, &opts));
                let enumerated = solve(game, query, Backend::Enumeration, &opts);
                let detail = |what: &str, a: &Outcome, b: &Outcome| {
                    format!("trial {trial}: {query:?}: {what} {a}, oracle {b}")
                };
                let e = Outcome::of(enumerated.as_ref().map(|a| a.verdict).map_err(Clone::clone));
                report
                    .check(&format!("oracle agreement {problem}{suffix}"))
                    .record(e.agrees(&oracle), || detail("enumeration", &e, &oracle));
                let mut answers = vec![enumerated];
                if problem.has_integer_program() {
                    let ip = solve(game, query, Backend::IntegerProgram, &opts);
                    let i = Outcome::of(ip.as_ref().map(|a| a.verdict).map_err(Clone::clone));
                    report
                        .check(&format!("backend agreement {problem}{suffix}"))
                        .record(i.agrees(&e) && i.agrees(&oracle), || detail("integer program", &i, &oracle));
                    answers.push(ip);
                }
                for answer in answers.iter().flatten() {
                    report
                        .check("witness validity")
                        .record(witness_is_valid(game, query, answer), || {
                            format!("trial {trial}: {query:?}: witness {:?}", answer.witness)
                        });
                }
                if suffix.is_empty() {
                    match oracle {
                        Outcome::Verdict(true) => yes[pi] += 1,
                        Outcome::Precondition => screened += 1,
                        _ => {}
                    }
                }
            }
        }
        let all_finite = (0..game.num_goals())
            .all(|g| (0..game.num_resources()).all(|r| game.requirement(g, r).is_finite()));
        if all_finite {
            finite += 1;
            let (n, r) = (game.num_agents(), game.num_resources());
            let counts = constraint_counts(game, &inst.queries)?;
            report
                .check("constraint counts")
                .record(counts == [n + r, n + r + 1, n + 2 * r], || {
                    format!("trial {trial}: |Ag| = {n}, |R| = {r}, got {counts:?}")
                });
        }
    }
    let tally: Vec<String> = Problem::ALL
        .iter()
        .zip(yes)
        .map(|(p, y)| format!("{p} {y}"))
        .collect();
    report.notes.push(format!("oracle YES counts: {}", tally.join(", ")));
    report.notes.push(format!("cgro queries failing the succ precondition: {screened}"));
    report.notes.push(format!("finite-requirement instances: {finite}"));
    Ok(report)
}

/// Constraint counts of the base, ESCK and SCRB programs.
fn constraint_counts(game: &Game, queries: &[Query]) -> Result<[usize; 3]> {
    let opts = SolveOptions::default();
    let single = |problem: Problem| -> Result<usize> {
        let query = queries.iter().find(|q| q.problem() == problem).expect("corpus covers every problem");
        let compiled = compile(game, query, &opts)?;
        Ok(compiled.programs.first().map_or(0, |p| p.constraints.len()))
    };
    Ok([
        build_base_ip(game).constraints.len(),
        single(Problem::Esck)?,
        single(Problem::Scrb)?,
    ])
}

fn oracle_verdict(out: &ReductionOutput, opts: &SolveOptions) -> Outcome {
    Outcome::of(brute_force_answer(&out.game, &out.query, opts))
}

/// succ(C) on the original game against succ(C) on the gadget, restricted
/// to the original goals.
fn succ_preserved(game: &Game, out: &ReductionOutput, c: &Coalition) -> Result<bool> {
    let m = game.num_goals();
    let before = game.enumerate_succ(c, None)?;
    let after: Vec<GoalSet> = out
        .game
        .enumerate_succ(c, None)?
        .into_iter()
        .filter(|gs| gs.iter().all(|g| g < m))
        .collect();
    Ok(before == after)
}

fn lemmas(config: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::Lemmas, config);
    let strict = SolveOptions::default();
    let vacuous = SolveOptions { vacuous_scrb_yes: true };
    let mut sc_yes = 0;
    let mut verbatim_screened = 0;
    let mut variant_screened = 0;
    type Gadget = fn(&Game, &Coalition) -> Result<ReductionOutput>;
    let gadgets: [(&str, Gadget); 5] = [
        ("esck", reductions::sc_to_esck),
        ("nr", reductions::sc_to_nr),
        ("snr", reductions::sc_to_snr),
        ("rpegs", reductions::sc_to_rpegs),
        ("cc", reductions::sc_to_cc),
    ];
    for trial in 0..config.trials {
        let Instance { game, coalition: c, .. } = corpus_instance(config, trial)?;
        let source = brute_force_answer(&game, &Query::Sc { coalition: c.clone() }, &strict)?;
        sc_yes += source as usize;
        let polarity_detail = |out: &ReductionOutput, got: &Outcome| {
            format!("trial {trial}: C = {c}, SC {source}, target {got}, polarity {}", out.polarity.name())
        };
        for (name, gadget) in gadgets {
            let out = gadget(&game, &c)?;
            let target = oracle_verdict(&out, &strict);
            let expected = Outcome::Verdict(out.polarity.expected_target(source));
            report
                .check(&format!("polarity sc->{name}"))
                .record(target.agrees(&expected), || polarity_detail(&out, &target));
            let decided = Outcome::of(solve(&out.game, &out.query, Backend::Enumeration, &strict).map(|a| a.verdict));
            report
                .check("gadget decided like oracle")
                .record(decided.agrees(&target), || format!("trial {trial}: sc->{name}: {decided} vs {target}"));
            if matches!(name, "snr" | "rpegs" | "cc") {
                let same = succ_preserved(&game, &out, &c)?;
                report
                    .check(&format!("succ preserved sc->{name}"))
                    .record(same, || format!("trial {trial}: C = {c}"));
            }
        }

        for (placement, label, screened) in [
            (CgroPlacement::Verbatim, "verbatim", &mut verbatim_screened),
            (CgroPlacement::MemberGoalSets, "member-goal-sets", &mut variant_screened),
        ] {
            let out = reductions::sc_to_cgro(&game, &c, placement)?;
            let target = oracle_verdict(&out, &strict);
            if target == Outcome::Precondition {
                *screened += 1;
                continue;
            }
            let expected = Outcome::Verdict(out.polarity.expected_target(source));
            report
                .check(&format!("polarity sc->cgro {label}"))
                .record(target.agrees(&expected), || polarity_detail(&out, &target));
        }

        let out = reductions::sc_to_scrb(&game, &c)?;
        let strict_target = oracle_verdict(&out, &strict);
        report
            .check("scrb: sc yes implies scrb no")
            .record(!source || strict_target == Outcome::Verdict(false), || {
                polarity_detail(&out, &strict_target)
            });
        let vacuous_target = oracle_verdict(&out, &vacuous);
        report
            .check("polarity sc->scrb vacuous")
            .record(vacuous_target == Outcome::Verdict(!source), || {
                polarity_detail(&out, &vacuous_target)
            });
    }
    report.check("polarity sc->cgro verbatim");
    report.notes.push(format!("sc YES on {sc_yes} of {} pairs", config.trials));
    report.notes.push(format!(
        "cgro verbatim gadget failed the succ precondition on {verbatim_screened} of {} pairs",
        config.trials
    ));
    report.notes.push(format!(
        "cgro member-goal-sets gadget failed the succ precondition on {variant_screened} of {} pairs",
        config.trials
    ));
    Ok(report)
}

fn round_trip(doc_game: Game, query: &Query) -> Result<bool> {
    let doc = query_document(doc_game, query);
    let text = serialize_game(&doc);
    let back = parse_game(&text)?;
    Ok(back == doc && serialize_game(&back) == text)
}

fn reductions_suite(config: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::Reductions, config);
    let strict = SolveOptions::default();
    for (gi, graph) in Graph::all_labeled(4).iter().enumerate() {
        for k in 1..=4 {
            let truth = independent_set_exists(graph, k)?;
            let detail = |what: &str| format!("graph {gi} {:?}, k = {k}: {what}", graph.edges());
            for (name, out) in [
                ("is->sc", reductions::is_to_sc(graph, k)?),
                ("is->esck_g1", reductions::is_to_esck_g1(graph, k)?),
            ] {
                for backend in [Backend::Enumeration, Backend::IntegerProgram] {
                    let got = solve(&out.game, &out.query, backend, &strict)?.verdict;
                    report
                        .check(&format!("{name} agrees with independent set"))
                        .record(got == truth, || detail(&format!("{backend:?} {got}, oracle {truth}")));
                }
                report
                    .check("gadget round-trip")
                    .record(round_trip(out.game.clone(), &out.query)?, || detail(name));
            }
            let (core, isolated) = graph.without_isolated();
            if let Some(core) = core.filter(|_| k > isolated) {
                let out = reductions::is_to_sc(graph, k)?;
                let kk = k - isolated;
                let (n, m) = (core.num_vertices(), core.edges().len());
                let sizes = (out.game.num_agents(), out.game.num_goals(), out.game.num_resources());
                report
                    .check("is->sc sizes")
                    .record(sizes == (kk, n * kk, m), || detail(&format!("sizes {sizes:?}")));
            }
        }
    }

    for n in 2..=5 {
        for k in 1..n {
            let (game, k) = reductions::gen_counterexample(k, n)?;
            let buggy = buggy_esck(&game, k)?;
            let correct = solve(&game, &Query::Esck { k }, Backend::Enumeration, &strict)?.verdict
                && solve(&game, &Query::Esck { k }, Backend::IntegerProgram, &strict)?.verdict;
            report
                .check("counterexample: buggy NO, esck YES")
                .record(!buggy && correct, || format!("k = {k}, n = {n}: buggy {buggy}, esck {correct}"));
            report
                .check("gadget round-trip")
                .record(round_trip(game, &Query::Esck { k })?, || format!("counterexample k = {k}, n = {n}"));
        }
    }

    let mut exact_cases = 0;
    for trial in 0..config.trials {
        let Instance { game, coalition: c, queries } = corpus_instance(config, trial)?;
        let Some(Query::Esck { k }) = queries.iter().find(|q| q.problem() == Problem::Esck).cloned() else {
            unreachable!("corpus covers every problem")
        };
        let buggy = buggy_esck(&game, k)?;
        let truth = brute_force_answer(&game, &Query::Esck { k }, &strict)?;
        report
            .check("buggy esck YES implies esck YES")
            .record(!buggy || truth, || format!("trial {trial}: k = {k}"));
        let max_satisfied = (1u64..1 << game.num_goals())
            .map(|mask| {
                let gs = GoalSet::new((0..game.num_goals()).filter(|g| mask >> g & 1 == 1));
                (0..game.num_agents()).filter(|&i| game.agent_goals(i).intersects(&gs)).count()
            })
            .max()
            .unwrap_or(0);
        if max_satisfied <= k {
            exact_cases += 1;
            report
                .check("buggy esck exact when no goal set oversatisfies")
                .record(buggy == truth, || format!("trial {trial}: k = {k}, buggy {buggy}, esck {truth}"));
        }
        let outputs = [
            reductions::sc_to_esck(&game, &c)?,
            reductions::sc_to_nr(&game, &c)?,
            reductions::sc_to_snr(&game, &c)?,
            reductions::sc_to_cgro(&game, &c, CgroPlacement::Verbatim)?,
            reductions::sc_to_cgro(&game, &c, CgroPlacement::MemberGoalSets)?,
            reductions::sc_to_rpegs(&game, &c)?,
            reductions::sc_to_scrb(&game, &c)?,
            reductions::sc_to_cc(&game, &c)?,
        ];
        for out in outputs {
            let problem = out.query.problem();
            report
                .check("gadget round-trip")
                .record(round_trip(out.game, &out.query)?, || format!("trial {trial}: sc->{problem}"));
        }
    }
    report
        .notes
        .push(format!("instances with no goal set satisfying more than k agents: {exact_cases}"));
    Ok(report)
}

/// A random 0/1 program with at most 12 variables and 8 constraints.
pub fn random_program<R: Rng>(rng: &mut R) -> IntegerProgram {
    let n = rng.gen_range(1..=12);
    let mut ip = IntegerProgram::with_free_vars(n);
    for v in 0..n {
        if rng.gen_bool(0.1) {
            ip.fix(v, rng.gen_bool(0.5)).expect("fresh variable");
        }
    }
    for _ in 0..rng.gen_range(0..=8) {
        let mut terms = Vec::new();
        for v in 0..n {
            if rng.gen_bool(0.4) {
                terms.push((v, *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("non-empty")));
            }
        }
        if terms.is_empty() {
            terms.push((rng.gen_range(0..n), 1));
        }
        let rhs = rng.gen_range(-3..=4);
        let constraint = match rng.gen_range(0..5) {
            0 | 1 => LinearConstraint::le(terms, rhs),
            2 | 3 => LinearConstraint::ge(terms, rhs),
            _ => LinearConstraint::eq(terms, rhs),
        };
        ip.add_constraint(constraint).expect("terms reference declared variables");
    }
    ip
}

/// Program `index` of the random family for `seed`.
pub fn seeded_program(seed: u64, index: usize) -> IntegerProgram {
    random_program(&mut trial_rng(seed, index))
}

fn ilp(config: &VerifyConfig) -> Report {
    let mut report = Report::new(Suite::Ilp, config);
    let mut feasible = 0;
    let mut equalities = 0;
    for trial in 0..config.trials {
        let ip = seeded_program(config.seed, trial);
        equalities += ip.constraints.iter().filter(|c| c.comparator == Comparator::Eq).count();
        let solved = ip.feasible();
        let exhaustive = ilp_exhaustive(&ip);
        let agree = match (&solved, &exhaustive) {
            (Ok(a), Ok(b)) => a.is_some() == b.is_some(),
            _ => false,
        };
        report.check("feasibility agrees with exhaustive search").record(agree, || {
            format!("trial {trial}: engine {:?}, exhaustive {:?}\n{ip}", solved.as_ref().map(Option::is_some), exhaustive.as_ref().map(Option::is_some))
        });
        if let Ok(Some(assignment)) = &solved {
            feasible += 1;
            report
                .check("returned assignment satisfies every constraint")
                .record(assignment_satisfies(&ip, assignment), || format!("trial {trial}: {assignment:?}"));
        }
    }
    report.check("returned assignment satisfies every constraint");
    report
        .notes
        .push(format!("feasible programs: {feasible} of {}; equality rows: {equalities}", config.trials));
    report
}
