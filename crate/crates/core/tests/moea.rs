//! Evolutionary solvers: feasibility, budget, determinism and operators.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rfqmst::metrics::Front;
use rfqmst::moea::{
    crowding_distance, fast_nondominated_sort, hux, mochc_run, mochc_run_observed, nsga2_run,
    nsga2_run_observed, MochcParams, NsgaParams, RunResult,
};
use rfqmst::qmst::is_spanning_tree;
use rfqmst::{
    dominates, generate_random, paper_instance, ConfidenceLevels, EvalContext, ObjectivePair,
    TreeGenotype,
};

#[derive(Clone, Copy, Debug)]
enum Alg {
    Nsga2,
    Mochc,
}

fn run_observed(
    ctx: &EvalContext<'_, f64>,
    alg: Alg,
    pop: usize,
    evals: usize,
    seed: u64,
    seen: &mut Vec<(TreeGenotype, ObjectivePair<f64>)>,
) -> RunResult<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut obs = |g: &TreeGenotype, o: &ObjectivePair<f64>| seen.push((g.clone(), *o));
    match alg {
        Alg::Nsga2 => {
            let p = NsgaParams {
                population: pop,
                max_evaluations: evals,
                ..NsgaParams::default()
            };
            nsga2_run_observed(ctx, &p, &mut rng, &mut obs).unwrap()
        }
        Alg::Mochc => {
            let p = MochcParams {
                population: pop,
                max_evaluations: evals,
                ..MochcParams::default()
            };
            mochc_run_observed(ctx, &p, &mut rng, &mut obs).unwrap()
        }
    }
}

fn run(ctx: &EvalContext<'_, f64>, alg: Alg, evals: usize, seed: u64) -> RunResult<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match alg {
        Alg::Nsga2 => {
            let p = NsgaParams {
                max_evaluations: evals,
                ..NsgaParams::default()
            };
            nsga2_run(ctx, &p, &mut rng).unwrap()
        }
        Alg::Mochc => {
            let p = MochcParams {
                max_evaluations: evals,
                ..MochcParams::default()
            };
            mochc_run(ctx, &p, &mut rng).unwrap()
        }
    }
}

fn peel_ranks(points: &[ObjectivePair<f64>]) -> Vec<usize> {
    let mut rank = vec![0; points.len()];
    let mut left: Vec<usize> = (0..points.len()).collect();
    let mut r = 0;
    while !left.is_empty() {
        let layer: Vec<usize> = left
            .iter()
            .copied()
            .filter(|&i| !left.iter().any(|&j| dominates(&points[j], &points[i])))
            .collect();
        for &i in &layer {
            rank[i] = r;
        }
        left.retain(|i| !layer.contains(i));
        r += 1;
    }
    rank
}

#[test]
fn deterministic_per_seed() {
    let inst = paper_instance::<f64>();
    let ctx = EvalContext::new(&inst, ConfidenceLevels::uniform(0.9, 0.8).unwrap());
    for alg in [Alg::Nsga2, Alg::Mochc] {
        assert_eq!(run(&ctx, alg, 3000, 7), run(&ctx, alg, 3000, 7));
    }
}

#[test]
fn budget_of_one_population_returns_initial_front() {
    let inst = paper_instance::<f64>();
    let ctx = EvalContext::new(&inst, ConfidenceLevels::uniform(0.9, 0.4).unwrap());
    for alg in [Alg::Nsga2, Alg::Mochc] {
        let mut seen = Vec::new();
        let result = run_observed(&ctx, alg, 20, 20, 3, &mut seen);
        assert_eq!(seen.len(), 20);
        assert_eq!(result.evaluations, 20);
        let initial = Front::new(seen.iter().map(|(_, o)| *o).collect());
        assert_eq!(result.points(), initial.points());
    }
}

#[test]
fn rejects_invalid_parameters() {
    let inst = paper_instance::<f64>();
    let ctx = EvalContext::new(&inst, ConfidenceLevels::uniform(0.9, 0.4).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let odd = NsgaParams {
        population: 7,
        ..NsgaParams::default()
    };
    assert!(nsga2_run(&ctx, &odd, &mut rng).is_err());
    let bad = MochcParams {
        cataclysm_prob: 1.5,
        ..MochcParams::default()
    };
    assert!(mochc_run(&ctx, &bad, &mut rng).is_err());
}

#[test]
fn crowding_boundaries_are_infinite() {
    let pts: Vec<_> = [(0.0, 3.0), (1.0, 2.0), (2.0, 1.0), (3.0, 0.0)]
        .iter()
        .map(|&(a, b)| ObjectivePair::new(a, b))
        .collect();
    let d: Vec<f64> = crowding_distance(&pts);
    assert!(d[0].is_infinite() && d[3].is_infinite());
    assert!((d[1] - 4.0 / 3.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn evaluated_individuals_are_trees_within_budget(
        seed in any::<u64>(),
        evals in 40usize..1500,
        mochc in any::<bool>(),
    ) {
        let inst = generate_random::<f64>(10, 25, seed).unwrap();
        let ctx = EvalContext::new(&inst, ConfidenceLevels::uniform(0.7, 0.6).unwrap());
        let alg = if mochc { Alg::Mochc } else { Alg::Nsga2 };
        let mut seen = Vec::new();
        let result = run_observed(&ctx, alg, 20, evals, seed, &mut seen);
        prop_assert!(seen.len() <= evals);
        prop_assert_eq!(result.evaluations, seen.len());
        prop_assert!(seen.iter().all(|(g, _)| is_spanning_tree(&inst, g.bits())));
        let pts = result.points();
        for a in &pts {
            prop_assert!(pts.iter().all(|b| !dominates(b, a)));
        }
        for (g, o) in &result.front {
            prop_assert_eq!(ctx.evaluate(g), *o);
        }
    }

    #[test]
    fn sort_matches_peeling(raw in prop::collection::vec((0u8..12, 0u8..12), 1..200)) {
        let pts: Vec<_> = raw
            .iter()
            .map(|&(a, b)| ObjectivePair::new(f64::from(a), f64::from(b)))
            .collect();
        prop_assert_eq!(fast_nondominated_sort(&pts), peel_ranks(&pts));
    }

    #[test]
    fn hux_swaps_half(
        pair in (1usize..80).prop_flat_map(|n| (
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(any::<bool>(), n),
        )),
        seed in any::<u64>(),
    ) {
        let (a, b) = pair;
        let d = a.iter().zip(&b).filter(|(x, y)| x != y).count();
        let (c1, c2) = hux(&a, &b, &mut ChaCha8Rng::seed_from_u64(seed));
        for i in 0..a.len() {
            if a[i] == b[i] {
                prop_assert!(c1[i] == a[i] && c2[i] == a[i]);
            }
        }
        let moved = c1.iter().zip(&a).filter(|(x, y)| x != y).count();
        prop_assert_eq!(moved, d / 2);
        prop_assert_eq!(c2.iter().zip(&b).filter(|(x, y)| x != y).count(), d / 2);
    }
}
