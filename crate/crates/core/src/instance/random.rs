//! Seeded random instances `QMST_n_m` with a quadratic weight on every edge pair.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::uncertainty::{RoughFuzzyWeight, TriangularFuzzy};

use super::Instance;

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

fn random_weight<T: Scalar, R: Rng>(rng: &mut R) -> RoughFuzzyWeight<T> {
    let u = round2(rng.gen_range(8.0..=12.0));
    let v = round2(u + round2(rng.gen_range(0.5..=3.0)));
    let w = round2(v + round2(rng.gen_range(0.5..=3.0)));
    let a2 = round2(rng.gen_range(0.2..=2.5));
    let a3 = -round2(rng.gen_range(0.2..=2.0));
    let a4 = round2(a2 + round2(rng.gen_range(0.1..=1.0)));
    let base =
        TriangularFuzzy::new(T::lit(u), T::lit(v), T::lit(w)).expect("ordered by construction");
    RoughFuzzyWeight::new(base, T::zero(), T::lit(a2), T::lit(a3), T::lit(a4))
        .expect("ordered by construction")
}

/// Random connected simple graph on `n` vertices with `m` edges.
///
/// A random spanning tree is laid down first, then extra edges are drawn
/// from the remaining vertex pairs. Edges are listed by `(u, v)`. Weight
/// components are rounded to two decimals.
pub fn generate_random<T: Scalar>(n: usize, m: usize, seed: u64) -> Result<Instance<T>> {
    let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
    if n < 2 || m + 1 < n || m > max_edges {
        return Err(Error::InfeasibleSize {
            vertices: n,
            edges: m,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut chosen = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        chosen.insert((a.min(b), a.max(b)));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|p| !chosen.contains(p))
        .collect();
    rest.shuffle(&mut rng);
    chosen.extend(rest.into_iter().take(m - (n - 1)));

    let edges: Vec<_> = chosen
        .into_iter()
        .map(|(a, b)| (a, b, random_weight(&mut rng)))
        .collect();
    let quads = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, random_weight(&mut rng)))
        .collect::<Vec<_>>();
    Instance::new(n, edges, quads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let inst = generate_random::<f64>(10, 30, 1).unwrap();
        assert_eq!(inst.vertex_count(), 10);
        assert_eq!(inst.edge_count(), 30);
        assert_eq!(inst.quad_count(), 435);
        let tiny = generate_random::<f64>(2, 1, 5).unwrap();
        assert_eq!((tiny.edge_count(), tiny.quad_count()), (1, 0));
    }

    #[test]
    fn infeasible_sizes() {
        for (n, m) in [(9, 100), (1, 0), (5, 3), (4, 7)] {
            assert_eq!(
                generate_random::<f64>(n, m, 0).unwrap_err(),
                Error::InfeasibleSize {
                    vertices: n,
                    edges: m
                }
            );
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = generate_random::<f64>(12, 40, 99).unwrap();
        let b = generate_random::<f64>(12, 40, 99).unwrap();
        let c = generate_random::<f64>(12, 40, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
