//! MOCHC: CHC-style elitist search with HUX crossover, incest prevention
//! and cataclysmic restarts, ranked by nondomination and crowding.

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::error::{Error, Result};
use crate::qmst::{random_tree, repair, EvalContext, TreeGenotype};
use crate::scalar::Scalar;

use super::{final_front, select_survivors, Evaluator, Individual, Observer, RunResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MochcParams {
    pub population: usize,
    pub max_evaluations: usize,
    /// Probability that a pair cleared by incest prevention actually mates.
    pub crossover_prob: f64,
    pub incest_threshold_fraction: f64,
    pub preserved_fraction: f64,
    pub cataclysm_prob: f64,
}

impl Default for MochcParams {
    fn default() -> Self {
        Self {
            population: 100,
            max_evaluations: 50_000,
            crossover_prob: 0.9,
            incest_threshold_fraction: 0.25,
            preserved_fraction: 0.05,
            cataclysm_prob: 0.35,
        }
    }
}

impl MochcParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 || !self.population.is_multiple_of(2) {
            return Err(Error::InvalidParams(
                "population must be even and at least 2".into(),
            ));
        }
        if self.max_evaluations < self.population {
            return Err(Error::InvalidParams(
                "evaluation budget below population size".into(),
            ));
        }
        for (name, p) in [
            ("crossover probability", self.crossover_prob),
            ("incest threshold fraction", self.incest_threshold_fraction),
            ("preserved fraction", self.preserved_fraction),
            ("cataclysm probability", self.cataclysm_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!("{name} {p} outside [0, 1]")));
            }
        }
        Ok(())
    }

    /// Starting incest threshold for genomes of `len` bits.
    pub fn initial_threshold(&self, len: usize) -> usize {
        (self.incest_threshold_fraction * len as f64).floor() as usize
    }

    fn preserved(&self) -> usize {
        ((self.preserved_fraction * self.population as f64).ceil() as usize).min(self.population)
    }
}

/// Half-uniform crossover: of the `d` positions where the parents differ,
/// exactly `d / 2` (rounded down, chosen uniformly) are swapped.
pub fn hux<R: Rng + ?Sized>(a: &[bool], b: &[bool], rng: &mut R) -> (Vec<bool>, Vec<bool>) {
    assert_eq!(a.len(), b.len(), "parents differ in length");
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    let (mut c, mut d) = (a.to_vec(), b.to_vec());
    for k in index::sample(rng, diff.len(), diff.len() / 2) {
        let i = diff[k];
        c[i] = b[i];
        d[i] = a[i];
    }
    (c, d)
}

fn sorted_genotypes<T>(pop: &[Individual<T>]) -> Vec<TreeGenotype> {
    let mut g: Vec<_> = pop.iter().map(|i| i.genotype.clone()).collect();
    g.sort_unstable();
    g
}

pub fn mochc_run<T: Scalar, R: Rng + ?Sized>(
    ctx: &EvalContext<'_, T>,
    params: &MochcParams,
    rng: &mut R,
) -> Result<RunResult<T>> {
    run(ctx, params, rng, None)
}

/// [`mochc_run`] calling `observer` on every evaluated genotype.
pub fn mochc_run_observed<T: Scalar, R: Rng + ?Sized>(
    ctx: &EvalContext<'_, T>,
    params: &MochcParams,
    rng: &mut R,
    observer: Observer<'_, T>,
) -> Result<RunResult<T>> {
    run(ctx, params, rng, Some(observer))
}

fn run<T: Scalar, R: Rng + ?Sized>(
    ctx: &EvalContext<'_, T>,
    params: &MochcParams,
    rng: &mut R,
    observer: Option<Observer<'_, T>>,
) -> Result<RunResult<T>> {
    params.validate()?;
    let inst = ctx.instance();
    let n = params.population;
    let initial_threshold = params.initial_threshold(ctx.edge_count());
    let mut threshold = initial_threshold;
    let mut eval = Evaluator::new(ctx, params.max_evaluations, observer);
    let initial: Vec<_> = (0..n)
        .map(|_| eval.evaluate(random_tree(inst, rng)))
        .collect();
    let mut pop = select_survivors(initial, n);
    let mut previous = sorted_genotypes(&pop);
    // generations in a row that spent no evaluation; bounds the loop when
    // neither mating nor restarts can consume budget
    let mut idle = 0;

    while eval.remaining() > 0 && idle <= initial_threshold + 1 {
        let before = eval.used;
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut offspring = Vec::new();
        for pair in order.chunks_exact(2) {
            if eval.remaining() == 0 {
                break;
            }
            let (a, b) = (&pop[pair[0]].genotype, &pop[pair[1]].genotype);
            if a.hamming(b) <= threshold || !rng.gen_bool(params.crossover_prob) {
                continue;
            }
            let (ca, cb) = hux(a.bits(), b.bits(), rng);
            for child in [ca, cb] {
                if eval.remaining() > 0 {
                    offspring.push(eval.evaluate(repair(inst, &child, rng)));
                }
            }
        }
        pop.extend(offspring);
        pop = select_survivors(pop, n);

        let current = sorted_genotypes(&pop);
        if current == previous {
            threshold = threshold.saturating_sub(1);
            if threshold == 0 {
                let keep = params.preserved();
                // survivors are ordered by rank then crowding
                for ind in pop.iter_mut().skip(keep) {
                    if eval.remaining() == 0 {
                        break;
                    }
                    let mut bits = ind.genotype.bits().to_vec();
                    for b in bits.iter_mut() {
                        if rng.gen_bool(params.cataclysm_prob) {
                            *b = !*b;
                        }
                    }
                    *ind = eval.evaluate(repair(inst, &bits, rng));
                }
                pop = select_survivors(pop, n);
                threshold = initial_threshold;
            }
        }
        previous = sorted_genotypes(&pop);
        idle = if eval.used == before { idle + 1 } else { 0 };
    }
    Ok(final_front(&pop, eval.used))
}
