//! Spanning-tree genotypes, feasibility repair and crisp bi-objective
//! evaluation.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::scalar::Scalar;
use crate::uncertainty::{
    chance_reduce_branch, AffineTerm, AggregatedChance, ChanceBranch, ConfidenceLevels,
    RoughFuzzyWeight, TriangularFuzzy,
};

/// One bit per canonical edge id; set bits select tree edges.
///
/// Ordering is lexicographic on the bit string with `0 < 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeGenotype(Vec<bool>);

impl TreeGenotype {
    /// Wraps bits without checking feasibility.
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    /// Genotype of length `len` selecting `ids`.
    pub fn from_edges(len: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![false; len];
        for id in ids {
            bits[id] = true;
        }
        Self(bits)
    }

    /// Validated constructor: bits must form a spanning tree of `inst`.
    pub fn new_tree<T: Scalar>(inst: &Instance<T>, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != inst.edge_count() {
            return Err(Error::LengthMismatch {
                expected: inst.edge_count(),
                got: bits.len(),
            });
        }
        if !is_spanning_tree(inst, &bits) {
            return Err(Error::NotSpanningTree(Self(bits).to_string()));
        }
        Ok(Self(bits))
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Selected edge ids in increasing order.
    pub fn selected(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    pub fn hamming(&self, other: &Self) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

impl fmt::Display for TreeGenotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for TreeGenotype {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidParams(format!(
                    "genotype character `{c}` is not 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

/// True iff `bits` selects `n - 1` acyclic edges of `inst`.
pub fn is_spanning_tree<T: Scalar>(inst: &Instance<T>, bits: &[bool]) -> bool {
    let n = inst.vertex_count();
    if bits.len() != inst.edge_count() || bits.iter().filter(|&&b| b).count() != n - 1 {
        return false;
    }
    let mut dsu = DisjointSet::new(n);
    inst.edges()
        .iter()
        .zip(bits)
        .filter(|(_, &b)| b)
        .all(|(e, _)| dsu.union(e.endpoints.0, e.endpoints.1))
}

/// Turns arbitrary bits into a spanning tree.
///
/// Valid trees are returned unchanged. Otherwise selected edges are kept in
/// random order while they close no cycle, and the tree is completed with
/// the remaining edges in random order.
pub fn repair<T: Scalar, R: Rng + ?Sized>(
    inst: &Instance<T>,
    bits: &[bool],
    rng: &mut R,
) -> TreeGenotype {
    assert_eq!(bits.len(), inst.edge_count(), "genotype length mismatch");
    if is_spanning_tree(inst, bits) {
        return TreeGenotype(bits.to_vec());
    }
    let n = inst.vertex_count();
    let (mut present, mut absent): (Vec<usize>, Vec<usize>) =
        (0..bits.len()).partition(|&i| bits[i]);
    present.shuffle(rng);
    absent.shuffle(rng);
    let mut dsu = DisjointSet::new(n);
    let mut out = vec![false; bits.len()];
    let mut joined = 0;
    for id in present.into_iter().chain(absent) {
        if joined == n - 1 {
            break;
        }
        let (a, b) = inst.edge(id).endpoints;
        if dsu.union(a, b) {
            out[id] = true;
            joined += 1;
        }
    }
    TreeGenotype(out)
}

/// A random spanning tree: repair of the empty selection.
pub fn random_tree<T: Scalar, R: Rng + ?Sized>(inst: &Instance<T>, rng: &mut R) -> TreeGenotype {
    repair(inst, &vec![false; inst.edge_count()], rng)
}

/// Which objective to aggregate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Linear,
    Quadratic,
}

fn affine_terms<'a, T: Scalar>(
    weights: impl Iterator<Item = &'a RoughFuzzyWeight<T>>,
) -> (Vec<AffineTerm<T>>, T) {
    let mut q1 = T::zero();
    let terms = weights
        .map(|w| {
            q1 += w.upper_width();
            AffineTerm {
                xi: w.base,
                coeff: T::one(),
                shift: w.a3,
            }
        })
        .collect();
    (terms, q1)
}

/// Sums the selected rough-fuzzy weights into the fuzzy lower end `p` and
/// crisp width `q1` of the upper approximation.
///
/// Quadratic aggregation counts each unordered pair of selected edges once.
pub fn aggregate<T: Scalar>(
    inst: &Instance<T>,
    tree: &TreeGenotype,
    which: Objective,
) -> AggregatedChance<T> {
    let ids: Vec<usize> = tree.selected().collect();
    let (terms, q1) = match which {
        Objective::Linear => affine_terms(ids.iter().map(|&i| &inst.edge(i).weight)),
        Objective::Quadratic => affine_terms(
            ids.iter()
                .enumerate()
                .flat_map(|(k, &i)| ids[k + 1..].iter().map(move |&j| (i, j)))
                .filter_map(|(i, j)| inst.quad(i, j)),
        ),
    };
    let p = TriangularFuzzy::affine_sum(terms).expect("unit coefficients");
    AggregatedChance { p, q1 }
}

/// Crisp objective bounds `(f1, f2)`, both minimized.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ObjectivePair<T> {
    pub f1: T,
    pub f2: T,
}

impl<T: Scalar> ObjectivePair<T> {
    pub fn new(f1: T, f2: T) -> Self {
        Self { f1, f2 }
    }

    pub fn dominates(&self, other: &Self) -> bool {
        dominates(self, other)
    }

    pub fn get(&self, objective: usize) -> T {
        match objective {
            0 => self.f1,
            1 => self.f2,
            _ => panic!("objective index {objective} out of range"),
        }
    }
}

/// Pareto dominance for minimization.
pub fn dominates<T: PartialOrd>(a: &ObjectivePair<T>, b: &ObjectivePair<T>) -> bool {
    a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2)
}

#[derive(Debug, Clone, Copy)]
struct Contribution<T> {
    p: TriangularFuzzy<T>,
    q1: T,
}

impl<T: Scalar> Contribution<T> {
    fn of(w: &RoughFuzzyWeight<T>) -> Self {
        Self {
            p: w.upper_lower_end(),
            q1: w.upper_width(),
        }
    }

    fn add_to(&self, acc: &mut AggregatedChance<T>) {
        acc.p.u += self.p.u;
        acc.p.v += self.p.v;
        acc.p.w += self.p.w;
        acc.q1 += self.q1;
    }
}

/// Instance plus confidence levels, with weights laid out for fast
/// evaluation.
#[derive(Debug, Clone)]
pub struct EvalContext<'a, T> {
    instance: &'a Instance<T>,
    levels: ConfidenceLevels<T>,
    linear: Vec<Contribution<T>>,
    quad: Vec<Option<Contribution<T>>>,
}

impl<'a, T: Scalar> EvalContext<'a, T> {
    pub fn new(instance: &'a Instance<T>, levels: ConfidenceLevels<T>) -> Self {
        let m = instance.edge_count();
        let linear = instance
            .edges()
            .iter()
            .map(|e| Contribution::of(&e.weight))
            .collect();
        let mut quad = vec![None; m * m];
        for q in instance.quads() {
            let c = Some(Contribution::of(&q.weight));
            quad[q.pair.0 * m + q.pair.1] = c;
            quad[q.pair.1 * m + q.pair.0] = c;
        }
        Self {
            instance,
            levels,
            linear,
            quad,
        }
    }

    pub fn instance(&self) -> &'a Instance<T> {
        self.instance
    }

    pub fn levels(&self) -> ConfidenceLevels<T> {
        self.levels
    }

    pub fn edge_count(&self) -> usize {
        self.linear.len()
    }

    /// Both aggregates of a tree, pairs counted once each.
    pub fn aggregates(&self, tree: &TreeGenotype) -> (AggregatedChance<T>, AggregatedChance<T>) {
        let m = self.edge_count();
        let ids: Vec<usize> = tree.selected().collect();
        let mut lin = AggregatedChance::zero();
        let mut quad = AggregatedChance::zero();
        for (k, &i) in ids.iter().enumerate() {
            self.linear[i].add_to(&mut lin);
            let row = &self.quad[i * m..(i + 1) * m];
            for &j in &ids[k + 1..] {
                if let Some(c) = &row[j] {
                    c.add_to(&mut quad);
                }
            }
        }
        (lin, quad)
    }

    pub fn evaluate(&self, tree: &TreeGenotype) -> ObjectivePair<T> {
        let l = &self.levels;
        self.evaluate_with(
            tree,
            ChanceBranch::for_beta(l.beta1),
            ChanceBranch::for_beta(l.beta2),
        )
    }

    /// [`Self::evaluate`] with the closed form chosen explicitly per objective.
    pub fn evaluate_with(
        &self,
        tree: &TreeGenotype,
        branch1: ChanceBranch,
        branch2: ChanceBranch,
    ) -> ObjectivePair<T> {
        let (lin, quad) = self.aggregates(tree);
        let l = &self.levels;
        ObjectivePair {
            f1: chance_reduce_branch(&lin, l.alpha1, l.beta1, branch1),
            f2: chance_reduce_branch(&quad, l.alpha2, l.beta2, branch2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::paper_instance;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn reference_tree(inst: &Instance<f64>) -> TreeGenotype {
        let ids = ["e12", "e17", "e26", "e34", "e45", "e49", "e58", "e79"]
            .map(|l| inst.find_label(l).unwrap());
        TreeGenotype::from_edges(inst.edge_count(), ids)
    }

    #[test]
    fn genotype_text_round_trip() {
        let g: TreeGenotype = "100011010010001101".parse().unwrap();
        assert_eq!(g.to_string(), "100011010010001101");
        assert_eq!(g.count_ones(), 8);
        assert!("10x".parse::<TreeGenotype>().is_err());
    }

    #[test]
    fn reference_tree_tree_is_spanning() {
        let inst = paper_instance::<f64>();
        let t = reference_tree(&inst);
        assert_eq!(t.to_string(), "100011010010001101");
        assert!(is_spanning_tree(&inst, t.bits()));
        assert!(!is_spanning_tree(&inst, &[false; 18]));
    }

    #[test]
    fn cycle_is_rejected() {
        let inst = paper_instance::<f64>();
        // e12, e26, e16 close a triangle on vertices 1, 2, 6
        let ids = ["e12", "e26", "e16", "e34", "e45", "e49", "e58", "e79"]
            .map(|l| inst.find_label(l).unwrap());
        let g = TreeGenotype::from_edges(18, ids);
        assert!(!is_spanning_tree(&inst, g.bits()));
        assert!(TreeGenotype::new_tree(&inst, g.into_bits()).is_err());
    }

    #[test]
    fn repair_keeps_valid_trees() {
        let inst = paper_instance::<f64>();
        let t = reference_tree(&inst);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(repair(&inst, t.bits(), &mut rng), t);
        let full = repair(&inst, &[true; 18], &mut rng);
        assert!(is_spanning_tree(&inst, full.bits()));
        let a = random_tree(&inst, &mut ChaCha8Rng::seed_from_u64(9));
        let b = random_tree(&inst, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
        assert_eq!(a.count_ones(), 8);
    }

    #[test]
    fn reference_tree_aggregates() {
        let inst = paper_instance::<f64>();
        let t = reference_tree(&inst);
        let lin = aggregate(&inst, &t, Objective::Linear);
        let close = |a: f64, b: f64| (a - b).abs() < 1e-9;
        assert!(
            close(lin.p.u, 74.6) && close(lin.p.v, 87.6) && close(lin.p.w, 100.8),
            "{lin:?}"
        );
        assert!(close(lin.q1, 24.2));
        let quad = aggregate(&inst, &t, Objective::Quadratic);
        assert!(close(quad.p.u, 8.4) && close(quad.p.v, 9.0) && close(quad.p.w, 9.6));
        assert!(close(quad.q1, 1.7));
    }

    #[test]
    fn reference_tree_objectives() {
        let inst = paper_instance::<f64>();
        let t = reference_tree(&inst);
        let ctx = EvalContext::new(&inst, ConfidenceLevels::uniform(0.9, 0.4).unwrap());
        let f = ctx.evaluate(&t);
        assert!(
            (f.f1 - 128.56).abs() < 1e-9 && (f.f2 - 11.94).abs() < 1e-9,
            "{f:?}"
        );
        let ctx0 = EvalContext::new(&inst, ConfidenceLevels::uniform(0.0, 0.0).unwrap());
        assert!((ctx0.evaluate(&t).f1 - 74.6).abs() < 1e-9);
    }

    #[test]
    fn dominance() {
        let p = ObjectivePair::new;
        assert!(dominates(&p(1.0, 2.0), &p(2.0, 2.0)));
        assert!(!dominates(&p(1.0, 2.0), &p(2.0, 1.0)));
        assert!(!dominates(&p(1.0, 2.0), &p(1.0, 2.0)));
    }
}
