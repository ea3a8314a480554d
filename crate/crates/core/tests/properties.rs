use crg_core::generate::gen_random;
use crg_core::io::{parse_game, serialize_game, GameDocument};
use crg_core::oracles::brute_force_answer;
use crg_core::problems::{witness_is_valid, Problem};
use crg_core::reductions::buggy_esck;
use crg_core::verify::{corpus_instance, Suite, VerifyConfig};
use crg_core::{solve, Backend, Coalition, Query, SolveOptions};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_games_round_trip(n in 1usize..6, m in 1usize..6, r in 1usize..4, seed in any::<u64>()) {
        let game = gen_random(n, m, r, 5, 0.5, seed).unwrap();
        let text = serialize_game(&GameDocument::new(game.clone()));
        let back = parse_game(&text).unwrap();
        prop_assert_eq!(&back.game, &game);
        prop_assert_eq!(serialize_game(&back), text);
    }

    #[test]
    fn buggy_esck_is_sound(n in 1usize..5, m in 1usize..5, seed in any::<u64>(), k_seed in any::<usize>()) {
        let game = gen_random(n, m, 2, 3, 0.5, seed).unwrap();
        let k = 1 + k_seed % n;
        if buggy_esck(&game, k).unwrap() {
            let query = Query::Esck { k };
            let truth = brute_force_answer(&game, &query, &SolveOptions::default()).unwrap();
            prop_assert!(truth);
        }
    }

    #[test]
    fn sc_is_monotone_in_endowment(n in 1usize..5, m in 1usize..5, seed in any::<u64>(), bump in 1u64..4) {
        let game = gen_random(n, m, 2, 3, 0.5, seed).unwrap();
        let c = game.grand_coalition();
        let before = solve(&game, &Query::Sc { coalition: c.clone() }, Backend::Enumeration, &SolveOptions::default()).unwrap();
        let mut parts = game.into_parts();
        for row in &mut parts.endowment {
            for e in row.iter_mut() {
                *e += bump;
            }
        }
        let richer = crg_core::Game::new(parts).unwrap();
        let after = solve(&richer, &Query::Sc { coalition: c }, Backend::Enumeration, &SolveOptions::default()).unwrap();
        prop_assert!(!before.verdict || after.verdict);
    }
}

#[test]
fn corpus_witnesses_replay() {
    let config = VerifyConfig { trials: 60, ..VerifyConfig::new(Suite::Backends) };
    let opts = SolveOptions::default();
    for trial in 0..config.trials {
        let inst = corpus_instance(&config, trial).unwrap();
        for query in &inst.queries {
            let backends: &[Backend] = if query.problem().has_integer_program() {
                &[Backend::Enumeration, Backend::IntegerProgram]
            } else {
                &[Backend::Enumeration]
            };
            for &backend in backends {
                match solve(&inst.game, query, backend, &opts) {
                    Ok(answer) => assert!(witness_is_valid(&inst.game, query, &answer), "{trial} {query:?}"),
                    Err(e) => assert!(e.is_precondition() && query.problem() == Problem::Cgro, "{e}"),
                }
            }
        }
    }
}

#[test]
fn sc_yes_means_every_member_has_a_goal() {
    let config = VerifyConfig { trials: 60, ..VerifyConfig::new(Suite::Backends) };
    for trial in 0..config.trials {
        let inst = corpus_instance(&config, trial).unwrap();
        let c: &Coalition = &inst.coalition;
        let yes = solve(&inst.game, &Query::Sc { coalition: c.clone() }, Backend::IntegerProgram, &SolveOptions::default())
            .unwrap()
            .verdict;
        if yes {
            assert!(c.iter().all(|i| !inst.game.agent_goals(i).is_empty()));
        }
    }
}
