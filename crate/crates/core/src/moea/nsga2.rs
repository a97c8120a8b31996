//! NSGA-II with binary tournament, single-point crossover, bit-flip
//! mutation and repair to spanning trees.

use rand::Rng;

use crate::error::{Error, Result};
use crate::qmst::{random_tree, repair, EvalContext, TreeGenotype};
use crate::scalar::Scalar;

use super::{final_front, select_survivors, Evaluator, Individual, Observer, RunResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NsgaParams {
    pub population: usize,
    pub max_evaluations: usize,
    pub crossover_prob: f64,
    pub mutation_prob_per_bit: f64,
}

impl Default for NsgaParams {
    fn default() -> Self {
        Self {
            population: 100,
            max_evaluations: 50_000,
            crossover_prob: 0.9,
            mutation_prob_per_bit: 0.03,
        }
    }
}

impl NsgaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 4 || !self.population.is_multiple_of(2) {
            return Err(Error::InvalidParams(
                "population must be even and at least 4".into(),
            ));
        }
        if self.max_evaluations < self.population {
            return Err(Error::InvalidParams(
                "evaluation budget below population size".into(),
            ));
        }
        for (name, p) in [
            ("crossover", self.crossover_prob),
            ("mutation", self.mutation_prob_per_bit),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!(
                    "{name} probability {p} outside [0, 1]"
                )));
            }
        }
        Ok(())
    }
}

fn tournament<'p, T: Scalar, R: Rng + ?Sized>(
    pop: &'p [Individual<T>],
    rng: &mut R,
) -> &'p Individual<T> {
    let a = &pop[rng.gen_range(0..pop.len())];
    let b = &pop[rng.gen_range(0..pop.len())];
    match a.better_than(b) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => {
            if rng.gen_bool(0.5) {
                a
            } else {
                b
            }
        }
    }
}

fn single_point<R: Rng + ?Sized>(a: &[bool], b: &[bool], rng: &mut R) -> (Vec<bool>, Vec<bool>) {
    let cut = rng.gen_range(1..a.len().max(2)).min(a.len());
    let mut c = a[..cut].to_vec();
    c.extend_from_slice(&b[cut..]);
    let mut d = b[..cut].to_vec();
    d.extend_from_slice(&a[cut..]);
    (c, d)
}

fn mutate<R: Rng + ?Sized>(bits: &mut [bool], p: f64, rng: &mut R) {
    for b in bits {
        if rng.gen_bool(p) {
            *b = !*b;
        }
    }
}

pub fn nsga2_run<T: Scalar, R: Rng + ?Sized>(
    ctx: &EvalContext<'_, T>,
    params: &NsgaParams,
    rng: &mut R,
) -> Result<RunResult<T>> {
    run(ctx, params, rng, None)
}

/// [`nsga2_run`] calling `observer` on every evaluated genotype.
pub fn nsga2_run_observed<T: Scalar, R: Rng + ?Sized>(
    ctx: &EvalContext<'_, T>,
    params: &NsgaParams,
    rng: &mut R,
    observer: Observer<'_, T>,
) -> Result<RunResult<T>> {
    run(ctx, params, rng, Some(observer))
}

fn run<T: Scalar, R: Rng + ?Sized>(
    ctx: &EvalContext<'_, T>,
    params: &NsgaParams,
    rng: &mut R,
    observer: Option<Observer<'_, T>>,
) -> Result<RunResult<T>> {
    params.validate()?;
    let inst = ctx.instance();
    let n = params.population;
    let mut eval = Evaluator::new(ctx, params.max_evaluations, observer);
    let initial: Vec<_> = (0..n)
        .map(|_| eval.evaluate(random_tree(inst, rng)))
        .collect();
    let mut pop = select_survivors(initial, n);

    while eval.remaining() > 0 {
        let batch = n.min(eval.remaining());
        let mut offspring = Vec::with_capacity(batch);
        while offspring.len() < batch {
            let pa = tournament(&pop, rng).genotype.bits();
            let pb = tournament(&pop, rng).genotype.bits();
            let (mut ca, mut cb) = if rng.gen_bool(params.crossover_prob) {
                single_point(pa, pb, rng)
            } else {
                (pa.to_vec(), pb.to_vec())
            };
            mutate(&mut ca, params.mutation_prob_per_bit, rng);
            mutate(&mut cb, params.mutation_prob_per_bit, rng);
            for child in [ca, cb] {
                if offspring.len() < batch {
                    let g: TreeGenotype = repair(inst, &child, rng);
                    offspring.push(eval.evaluate(g));
                }
            }
        }
        pop.extend(offspring);
        pop = select_survivors(pop, n);
    }
    Ok(final_front(&pop, eval.used))
}
