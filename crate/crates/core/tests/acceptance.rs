//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use crg_core::io::{parse_game, query_document, serialize_game};
use crg_core::oracles::independent_set_exists;
use crg_core::problems::esck;
use crg_core::reductions::{buggy_esck, gen_counterexample, is_to_esck_g1, is_to_sc};
use crg_core::verify::{self, Report, Suite, VerifyConfig};
use crg_core::{solve, Backend, Graph, SolveOptions};

struct Outcome {
    passed: bool,
    summary: String,
}

fn outcome(passed: bool, summary: impl Into<String>) -> Outcome {
    Outcome { passed, summary: summary.into() }
}

fn run_suite(suite: Suite) -> (Report, Duration) {
    let start = Instant::now();
    let report = verify::run(suite, &VerifyConfig::new(suite)).expect("suite runs");
    (report, start.elapsed())
}

fn checks_with_prefix(report: &Report, prefix: &str) -> (bool, usize, usize) {
    let selected: Vec<_> = report.checks.iter().filter(|c| c.name.starts_with(prefix)).collect();
    let passed = selected.iter().map(|c| c.passed).sum();
    let total = selected.iter().map(|c| c.total).sum();
    (!selected.is_empty() && selected.iter().all(|c| c.ok()), passed, total)
}

fn failures(report: &Report, prefix: &str) -> String {
    report
        .checks
        .iter()
        .filter(|c| c.name.starts_with(prefix) && !c.ok())
        .flat_map(|c| c.details.iter().map(move |d| format!("\n    {}: {d}", c.name)))
        .collect()
}

fn oracle_agreement(backends: &Report, elapsed: Duration) -> Outcome {
    let (ok, passed, total) = checks_with_prefix(backends, "oracle agreement");
    let fast = elapsed < Duration::from_secs(60);
    outcome(
        ok && fast && backends.config.trials >= 500,
        format!(
            "{passed}/{total} decisions match the oracle over {} instances in {:.1?}{}",
            backends.config.trials,
            elapsed,
            failures(backends, "oracle agreement")
        ),
    )
}

fn backend_agreement(backends: &Report) -> Outcome {
    let (ok, passed, total) = checks_with_prefix(backends, "backend agreement");
    outcome(
        ok,
        format!(
            "{passed}/{total} integer-program decisions match enumeration{}",
            failures(backends, "backend agreement")
        ),
    )
}

fn independent_set_reductions() -> Outcome {
    let start = Instant::now();
    let opts = SolveOptions::default();
    let (mut total, mut mismatches) = (0, Vec::new());
    for (i, graph) in Graph::all_labeled(4).iter().enumerate() {
        for k in 1..=4 {
            let truth = independent_set_exists(graph, k).unwrap();
            for out in [is_to_sc(graph, k).unwrap(), is_to_esck_g1(graph, k).unwrap()] {
                total += 1;
                let got = solve(&out.game, &out.query, Backend::Enumeration, &opts).unwrap().verdict;
                if got != truth {
                    mismatches.push(format!("graph {i}, k = {k}, {:?}", out.query.problem()));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches.is_empty() && total == 64 * 4 * 2 && elapsed < Duration::from_secs(10),
        format!("{} mismatches over {total} gadget instances in {elapsed:.1?} {mismatches:?}", mismatches.len()),
    )
}

fn lemma_polarities(lemmas: &Report) -> Outcome {
    let names = [
        "polarity sc->esck",
        "polarity sc->nr",
        "polarity sc->snr",
        "polarity sc->rpegs",
        "polarity sc->cc",
        "polarity sc->cgro member-goal-sets",
        "scrb: sc yes implies scrb no",
        "polarity sc->scrb vacuous",
        "succ preserved sc->snr",
        "succ preserved sc->rpegs",
        "succ preserved sc->cc",
    ];
    let mut ok = lemmas.config.trials >= 300;
    let mut parts = Vec::new();
    for name in names {
        match lemmas.get(name) {
            Some(c) => {
                ok &= c.ok() && c.total >= 300;
                parts.push(format!("{} {}/{}", name.trim_start_matches("polarity "), c.passed, c.total));
            }
            None => {
                ok = false;
                parts.push(format!("{name} missing"));
            }
        }
    }
    let screened = lemmas.notes.iter().find(|n| n.contains("verbatim")).cloned().unwrap_or_default();
    outcome(ok, format!("{}; {screened}{}", parts.join(", "), failures(lemmas, "")))
}

fn counterexample_reproduction() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 2..=5 {
        for k in 1..n {
            cases += 1;
            let (game, k) = gen_counterexample(k, n).unwrap();
            let buggy = buggy_esck(&game, k).unwrap();
            let correct = esck(&game, k, Backend::Enumeration).unwrap().verdict
                && esck(&game, k, Backend::IntegerProgram).unwrap().verdict;
            if buggy || !correct {
                bad.push((k, n));
            }
        }
    }
    outcome(
        bad.is_empty() && cases == 10,
        format!("buggy procedure answers NO and esck answers YES on {}/{cases} (k, n) pairs {bad:?}", cases - bad.len()),
    )
}

fn ilp_soundness(ilp: &Report) -> Outcome {
    let agree = ilp.get("feasibility agrees with exhaustive search");
    let valid = ilp.get("returned assignment satisfies every constraint");
    let (Some(agree), Some(valid)) = (agree, valid) else {
        return outcome(false, "ilp report is missing its checks");
    };
    outcome(
        agree.ok() && valid.ok() && agree.total >= 1000,
        format!(
            "{}/{} programs agree with exhaustive evaluation, {}/{} returned assignments valid{}",
            agree.passed,
            agree.total,
            valid.passed,
            valid.total,
            failures(ilp, "")
        ),
    )
}

fn constraint_counts(backends: &Report) -> Outcome {
    match backends.get("constraint counts") {
        Some(c) => outcome(
            c.ok() && c.total > 0,
            format!("{}/{} finite-requirement instances have the expected row counts{}", c.passed, c.total, failures(backends, "constraint counts")),
        ),
        None => outcome(false, "no constraint-count check in the backends report"),
    }
}

fn round_trip_and_determinism(reductions: &Report) -> Outcome {
    let Some(rt) = reductions.get("gadget round-trip") else {
        return outcome(false, "no round-trip check in the reductions report");
    };
    // spot-check outside the verifier too
    let graph = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
    let out = is_to_sc(&graph, 2).unwrap();
    let text = serialize_game(&query_document(out.game, &out.query));
    let direct = serialize_game(&parse_game(&text).unwrap()) == text;

    let mut deterministic = 0;
    for suite in Suite::ALL {
        let config = VerifyConfig { trials: 40, seed: 17, ..VerifyConfig::new(suite) };
        let a = verify::run(suite, &config).unwrap().render();
        let b = verify::run(suite, &config).unwrap().render();
        deterministic += usize::from(a == b);
    }
    outcome(
        rt.ok() && rt.total > 0 && direct && deterministic == Suite::ALL.len(),
        format!(
            "{}/{} gadget documents round-trip; {deterministic}/{} suites render byte-identical reports on a repeated seed",
            rt.passed,
            rt.total,
            Suite::ALL.len()
        ),
    )
}

fn main() -> ExitCode {
    let (backends, backends_time) = run_suite(Suite::Backends);
    let (lemmas, _) = run_suite(Suite::Lemmas);
    let (reductions, _) = run_suite(Suite::Reductions);
    let (ilp, _) = run_suite(Suite::Ilp);
    let results = [
        ("oracle agreement", oracle_agreement(&backends, backends_time)),
        ("backend agreement", backend_agreement(&backends)),
        ("independent set reductions", independent_set_reductions()),
        ("lemma polarities", lemma_polarities(&lemmas)),
        ("counterexample reproduction", counterexample_reproduction()),
        ("ilp engine soundness", ilp_soundness(&ilp)),
        ("constraint-count bookkeeping", constraint_counts(&backends)),
        ("round-trip and determinism", round_trip_and_determinism(&reductions)),
    ];
    let mut all = true;
    for (i, (name, o)) in results.iter().enumerate() {
        all &= o.passed;
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {} {status} {name}: {}", i + 1, o.summary);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
