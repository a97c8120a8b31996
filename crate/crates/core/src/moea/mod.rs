//! Evolutionary multi-objective solvers over spanning-tree genotypes.

mod mochc;
mod nsga2;
mod sort;

use std::cmp::Ordering;

use crate::qmst::{EvalContext, ObjectivePair, TreeGenotype};
use crate::scalar::Scalar;

pub use mochc::{hux, mochc_run, mochc_run_observed, MochcParams};
pub use nsga2::{nsga2_run, nsga2_run_observed, NsgaParams};
pub use sort::{crowding_distance, fast_nondominated_sort};

/// A population member. `rank` and `crowding` refer to the pool the member
/// was last sorted in.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual<T> {
    pub genotype: TreeGenotype,
    pub objectives: ObjectivePair<T>,
    pub rank: usize,
    pub crowding: T,
}

impl<T: Scalar> Individual<T> {
    fn new(genotype: TreeGenotype, objectives: ObjectivePair<T>) -> Self {
        Self {
            genotype,
            objectives,
            rank: 0,
            crowding: T::zero(),
        }
    }

    /// Lower rank first, then larger crowding distance.
    fn better_than(&self, other: &Self) -> Ordering {
        self.rank.cmp(&other.rank).then(
            other
                .crowding
                .partial_cmp(&self.crowding)
                .unwrap_or(Ordering::Equal),
        )
    }
}

/// Outcome of one run: the final population's nondominated points, one
/// genotype per distinct objective point, sorted by `f1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult<T> {
    pub front: Vec<(TreeGenotype, ObjectivePair<T>)>,
    pub evaluations: usize,
}

impl<T: Scalar> RunResult<T> {
    pub fn points(&self) -> Vec<ObjectivePair<T>> {
        self.front.iter().map(|(_, o)| *o).collect()
    }
}

/// Callback invoked on every evaluated genotype.
pub type Observer<'o, T> = &'o mut dyn FnMut(&TreeGenotype, &ObjectivePair<T>);

struct Evaluator<'c, 'a, 'o, T> {
    ctx: &'c EvalContext<'a, T>,
    budget: usize,
    used: usize,
    observer: Option<Observer<'o, T>>,
}

impl<'c, 'a, 'o, T: Scalar> Evaluator<'c, 'a, 'o, T> {
    fn new(ctx: &'c EvalContext<'a, T>, budget: usize, observer: Option<Observer<'o, T>>) -> Self {
        Self {
            ctx,
            budget,
            used: 0,
            observer,
        }
    }

    fn remaining(&self) -> usize {
        self.budget - self.used
    }

    fn evaluate(&mut self, g: TreeGenotype) -> Individual<T> {
        assert!(self.used < self.budget, "evaluation budget exhausted");
        self.used += 1;
        let obj = self.ctx.evaluate(&g);
        if let Some(f) = self.observer.as_mut() {
            f(&g, &obj);
        }
        Individual::new(g, obj)
    }
}

/// Assigns nondomination rank and per-front crowding distance in place.
fn assign_rank_and_crowding<T: Scalar>(pool: &mut [Individual<T>]) {
    let points: Vec<_> = pool.iter().map(|i| i.objectives).collect();
    let ranks = fast_nondominated_sort(&points);
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); max_rank + 1];
    for (i, &r) in ranks.iter().enumerate() {
        pool[i].rank = r;
        by_rank[r].push(i);
    }
    for members in by_rank {
        let front: Vec<_> = members.iter().map(|&i| points[i]).collect();
        for (&i, d) in members.iter().zip(crowding_distance(&front)) {
            pool[i].crowding = d;
        }
    }
}

/// Keeps the best `n` of `pool` by rank then crowding distance; ties keep
/// pool order.
fn select_survivors<T: Scalar>(mut pool: Vec<Individual<T>>, n: usize) -> Vec<Individual<T>> {
    assign_rank_and_crowding(&mut pool);
    pool.sort_by(|a, b| a.better_than(b));
    pool.truncate(n);
    pool
}

fn final_front<T: Scalar>(population: &[Individual<T>], evaluations: usize) -> RunResult<T> {
    let points: Vec<_> = population.iter().map(|i| i.objectives).collect();
    let ranks = fast_nondominated_sort(&points);
    let mut front: Vec<(TreeGenotype, ObjectivePair<T>)> = population
        .iter()
        .zip(ranks)
        .filter(|(_, r)| *r == 0)
        .map(|(i, _)| (i.genotype.clone(), i.objectives))
        .collect();
    front.sort_by(|a, b| {
        a.1.f1
            .partial_cmp(&b.1.f1)
            .unwrap_or(Ordering::Equal)
            .then(a.1.f2.partial_cmp(&b.1.f2).unwrap_or(Ordering::Equal))
            .then(a.0.cmp(&b.0))
    });
    front.dedup_by(|b, a| a.1 == b.1);
    RunResult { front, evaluations }
}
