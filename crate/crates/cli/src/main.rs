//! `crg`: solve, reduce, generate and verify coalitional resource games.
//!
//! Exit codes: 0 YES (or a passing verify run), 1 NO (or a failing run),
//! 2 input error, 3 precondition error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use crg_core::generate::gen_random;
use crg_core::io::{parse_game, parse_graph, query_document, serialize_game, GameDocument};
use crg_core::reductions::{self, CgroPlacement};
use crg_core::verify::{self, Suite, VerifyConfig, DEFAULT_SEED};
use crg_core::{solve, Backend, Coalition, CrgError, Game, GoalSet, Problem, Quantity, Query, ResourceBound};
use serde_json::json;

mod witness;

#[derive(Parser, Debug)]
#[command(name = "crg", version, about = "Coalitional resource game toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a problem on a game and print the verdict as JSON.
    Solve(SolveArgs),
    /// Build a reduction gadget and write it as a game document.
    Reduce(ReduceArgs),
    /// Generate a game document.
    Gen(GenArgs),
    /// Run a seeded certification suite and print its report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// sc, esck, maxc, maxsc, nr, snr, cgro, rpegs, scrb or cc.
    problem: Problem,
    /// Game document.
    #[arg(long)]
    game: PathBuf,
    /// Named coalition from the document, or comma-separated agent ids.
    #[arg(long)]
    coalition: Option<String>,
    /// Second coalition for cc.
    #[arg(long)]
    coalition2: Option<String>,
    /// Resource id.
    #[arg(long)]
    resource: Option<String>,
    /// Named goal set from the document, or comma-separated goal ids.
    #[arg(long)]
    goal_set: Option<String>,
    /// Named bound from the document, or one value per resource (`3,inf,0`).
    #[arg(long)]
    bound: Option<String>,
    /// Coalition size for esck.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value = "enum")]
    backend: Backend,
    /// Read scrb as YES when the coalition has no successful goal set.
    #[arg(long)]
    vacuous_scrb: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Reduction {
    IsToSc,
    ScToEsck,
    ScToNr,
    ScToSnr,
    ScToCgro,
    ScToRpegs,
    ScToScrb,
    ScToCc,
    IsToEsckG1,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    reduction: Reduction,
    /// Source graph in edge-list format (is-to-* reductions).
    #[arg(long, conflicts_with = "game")]
    graph: Option<PathBuf>,
    /// Source game document (sc-to-* reductions).
    #[arg(long)]
    game: Option<PathBuf>,
    /// Independent set size (is-to-* reductions).
    #[arg(long)]
    k: Option<usize>,
    /// Source coalition (sc-to-* reductions).
    #[arg(long)]
    coalition: Option<String>,
    /// sc-to-cgro only: also add the new goal to every member's goal set.
    #[arg(long)]
    member_goal_sets: bool,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// A seeded random game.
    Random {
        #[arg(long, default_value_t = 4)]
        agents: usize,
        #[arg(long, default_value_t = 4)]
        goals: usize,
        #[arg(long, default_value_t = 2)]
        resources: usize,
        #[arg(long, default_value_t = 3)]
        max_value: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, env = "CRG_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A game on which the goal-subset-first ESCK procedure answers NO although the answer is YES.
    Counterexample {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        agents: usize,
        #[arg(long, default_value_t = 1)]
        goals: usize,
        #[arg(long, default_value_t = 1)]
        resources: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// lemmas, backends, reductions or ilp.
    suite: Suite,
    /// Defaults to 300 for lemmas and reductions, 500 for backends, 1000 for ilp.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, env = "CRG_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    max_agents: usize,
    #[arg(long, default_value_t = 5)]
    max_goals: usize,
    #[arg(long, default_value_t = 3)]
    max_resources: usize,
    #[arg(long, default_value_t = 3)]
    max_value: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let precondition = err.downcast_ref::<CrgError>().is_some_and(CrgError::is_precondition);
            ExitCode::from(if precondition { 3 } else { 2 })
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Solve(args) => run_solve(args),
        Command::Reduce(args) => run_reduce(args),
        Command::Gen(args) => run_gen(args.kind),
        Command::Verify(args) => run_verify(args),
    }
}

fn verdict_code(yes: bool) -> ExitCode {
    ExitCode::from(if yes { 0 } else { 1 })
}

fn read_document(path: &Path) -> anyhow::Result<GameDocument> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_game(&text).with_context(|| format!("in {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn lookup(ids: &[String], id: &str, kind: &str) -> anyhow::Result<usize> {
    match ids.iter().position(|x| x == id) {
        Some(i) => Ok(i),
        None => Err(CrgError::input(format!("unknown {kind} `{id}`")).into()),
    }
}

fn id_list(ids: &[String], spec: &str, kind: &str) -> anyhow::Result<Vec<usize>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| lookup(ids, s, kind))
        .collect()
}

fn coalition_arg(doc: &GameDocument, spec: Option<&str>, flag: &str) -> anyhow::Result<Coalition> {
    let Some(spec) = spec else { bail!(CrgError::input(format!("{flag} is required"))) };
    match doc.coalitions.get(spec) {
        Some(c) => Ok(c.clone()),
        None => Ok(Coalition::new(id_list(doc.game.agents(), spec, "agent or coalition")?)),
    }
}

fn goal_set_arg(doc: &GameDocument, spec: Option<&str>) -> anyhow::Result<GoalSet> {
    let Some(spec) = spec else { bail!(CrgError::input("--goal-set is required")) };
    match doc.goal_sets.get(spec) {
        Some(g) => Ok(g.clone()),
        None => Ok(GoalSet::new(id_list(doc.game.goals(), spec, "goal or goal set")?)),
    }
}

fn bound_arg(doc: &GameDocument, spec: Option<&str>) -> anyhow::Result<ResourceBound> {
    let Some(spec) = spec else { bail!(CrgError::input("--bound is required")) };
    if let Some(b) = doc.bounds.get(spec) {
        return Ok(b.clone());
    }
    let values = spec
        .split(',')
        .map(|s| s.trim().parse::<Quantity>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CrgError::input(format!("`{spec}` is neither a named bound nor a list of quantities")))?;
    Ok(ResourceBound::new(values))
}

fn resource_arg(game: &Game, spec: Option<&str>) -> anyhow::Result<usize> {
    let Some(spec) = spec else { bail!(CrgError::input("--resource is required")) };
    lookup(game.resources(), spec, "resource")
}

fn build_query(args: &SolveArgs, doc: &GameDocument) -> anyhow::Result<Query> {
    let c = || coalition_arg(doc, args.coalition.as_deref(), "--coalition");
    let resource = || resource_arg(&doc.game, args.resource.as_deref());
    let goal_set = || goal_set_arg(doc, args.goal_set.as_deref());
    let bound = || bound_arg(doc, args.bound.as_deref());
    Ok(match args.problem {
        Problem::Sc => Query::Sc { coalition: c()? },
        Problem::Esck => match args.k {
            Some(k) => Query::Esck { k },
            None => bail!(CrgError::input("--k is required")),
        },
        Problem::Maxc => Query::Maxc { coalition: c()? },
        Problem::Maxsc => Query::Maxsc { coalition: c()? },
        Problem::Nr => Query::Nr { coalition: c()?, resource: resource()? },
        Problem::Snr => Query::Snr { coalition: c()?, resource: resource()? },
        Problem::Cgro => Query::Cgro { coalition: c()?, goal_set: goal_set()?, resource: resource()? },
        Problem::Rpegs => Query::Rpegs { coalition: c()?, goal_set: goal_set()? },
        Problem::Scrb => Query::Scrb { coalition: c()?, bound: bound()? },
        Problem::Cc => Query::Cc {
            first: c()?,
            second: coalition_arg(doc, args.coalition2.as_deref(), "--coalition2")?,
            bound: bound()?,
        },
    })
}

fn run_solve(args: SolveArgs) -> anyhow::Result<ExitCode> {
    let doc = read_document(&args.game)?;
    let query = build_query(&args, &doc)?;
    let options = crg_core::SolveOptions { vacuous_scrb_yes: args.vacuous_scrb };
    let answer = solve(&doc.game, &query, args.backend, &options)?;
    let mut out = json!({ "problem": args.problem.name(), "verdict": answer.verdict });
    if let Some(w) = &answer.witness {
        out["witness"] = witness::to_json(&doc.game, w);
    }
    println!("{out}");
    Ok(verdict_code(answer.verdict))
}

fn describe_target(game: &Game, query: &Query) -> String {
    match query {
        Query::Esck { k } => format!("esck --k {k}"),
        Query::Nr { resource, .. } | Query::Snr { resource, .. } => {
            format!("{} --coalition C --resource {}", query.problem(), game.resources()[*resource])
        }
        Query::Cgro { resource, .. } => format!("cgro --coalition C --goal-set G0 --resource {}", game.resources()[*resource]),
        Query::Rpegs { .. } => "rpegs --coalition C --goal-set G0".into(),
        Query::Scrb { .. } => "scrb --coalition C --bound b".into(),
        Query::Cc { .. } => "cc --coalition C --coalition2 C2 --bound b".into(),
        other => format!("{} --coalition C", other.problem()),
    }
}

fn run_reduce(args: ReduceArgs) -> anyhow::Result<ExitCode> {
    use Reduction::*;
    let out = match args.reduction {
        IsToSc | IsToEsckG1 => {
            let Some(path) = &args.graph else { bail!(CrgError::input("--graph is required")) };
            let Some(k) = args.k else { bail!(CrgError::input("--k is required")) };
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let graph = parse_graph(&text).with_context(|| format!("in {}", path.display()))?;
            if matches!(args.reduction, IsToSc) {
                reductions::is_to_sc(&graph, k)?
            } else {
                reductions::is_to_esck_g1(&graph, k)?
            }
        }
        reduction => {
            let Some(path) = &args.game else { bail!(CrgError::input("--game is required")) };
            let doc = read_document(path)?;
            let c = coalition_arg(&doc, args.coalition.as_deref(), "--coalition")?;
            let game = &doc.game;
            match reduction {
                ScToEsck => reductions::sc_to_esck(game, &c)?,
                ScToNr => reductions::sc_to_nr(game, &c)?,
                ScToSnr => reductions::sc_to_snr(game, &c)?,
                ScToCgro => {
                    let placement = if args.member_goal_sets {
                        CgroPlacement::MemberGoalSets
                    } else {
                        CgroPlacement::Verbatim
                    };
                    reductions::sc_to_cgro(game, &c, placement)?
                }
                ScToRpegs => reductions::sc_to_rpegs(game, &c)?,
                ScToScrb => reductions::sc_to_scrb(game, &c)?,
                ScToCc => reductions::sc_to_cc(game, &c)?,
                IsToSc | IsToEsckG1 => unreachable!("handled above"),
            }
        }
    };
    eprintln!(
        "target: {} ({} polarity)",
        describe_target(&out.game, &out.query),
        out.polarity.name()
    );
    let query = out.query;
    write_output(args.output.as_deref(), &serialize_game(&query_document(out.game, &query)))?;
    Ok(ExitCode::SUCCESS)
}

fn run_gen(kind: GenKind) -> anyhow::Result<ExitCode> {
    let (doc, output) = match kind {
        GenKind::Random { agents, goals, resources, max_value, density, seed, output } => {
            let game = gen_random(agents, goals, resources, max_value, density, seed)?;
            (GameDocument::new(game), output)
        }
        GenKind::Counterexample { k, agents, goals, resources, output } => {
            let (game, k) = reductions::gen_counterexample_sized(k, agents, goals, resources)?;
            eprintln!("target: esck --k {k}");
            (GameDocument::new(game), output)
        }
    };
    write_output(output.as_deref(), &serialize_game(&doc))?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let config = VerifyConfig {
        trials: args.trials.unwrap_or(args.suite.default_trials()),
        seed: args.seed,
        max_agents: args.max_agents,
        max_goals: args.max_goals,
        max_resources: args.max_resources,
        max_value: args.max_value,
    };
    let report = verify::run(args.suite, &config)?;
    print!("{}", report.render());
    Ok(verdict_code(report.passed()))
}
