//! Exhaustive ground truth for small instances: spanning-tree enumeration,
//! a matrix-tree counting oracle, the exact Pareto front and the
//! epsilon-constraint method.

use std::cmp::Ordering;

use crate::dsu::{DisjointSet, RollbackDisjointSet};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::qmst::{dominates, EvalContext, ObjectivePair, TreeGenotype};
use crate::scalar::Scalar;

/// Refuse to enumerate instances with more spanning trees than this.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// Number of spanning trees by the matrix-tree theorem: determinant of the
/// Laplacian with the last row and column removed, by Gaussian elimination
/// with partial pivoting, rounded.
pub fn kirchhoff_count<T: Scalar>(inst: &Instance<T>) -> u128 {
    let n = inst.vertex_count();
    if n <= 1 {
        return 1;
    }
    let k = n - 1;
    let mut a = vec![vec![0.0f64; k]; k];
    for e in inst.edges() {
        let (u, v) = e.endpoints;
        if u < k {
            a[u][u] += 1.0;
        }
        if v < k {
            a[v][v] += 1.0;
        }
        if u < k && v < k {
            a[u][v] -= 1.0;
            a[v][u] -= 1.0;
        }
    }
    let mut det = 1.0f64;
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("nonempty range");
        if a[pivot][col] == 0.0 {
            return 0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..k {
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                let (top, rest) = a.split_at_mut(row);
                for (x, p) in rest[0][col..k].iter_mut().zip(&top[col][col..k]) {
                    *x -= factor * p;
                }
            }
        }
    }
    det.abs().round() as u128
}

struct Enumerator<'a, T, F> {
    inst: &'a Instance<T>,
    dsu: RollbackDisjointSet,
    bits: Vec<bool>,
    visit: F,
}

impl<T: Scalar, F: FnMut(&[bool])> Enumerator<'_, T, F> {
    /// Whether the current partial forest plus edges `from..` still spans.
    fn completable(&self, from: usize) -> bool {
        let n = self.inst.vertex_count();
        let mut tmp = DisjointSet::new(n);
        let mut components = n;
        for v in 0..n {
            if tmp.union(v, self.dsu.find(v)) {
                components -= 1;
            }
        }
        for e in &self.inst.edges()[from..] {
            if tmp.union(e.endpoints.0, e.endpoints.1) {
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        components == 1
    }

    fn recurse(&mut self, idx: usize, remaining: usize) {
        if remaining == 0 {
            (self.visit)(&self.bits);
            return;
        }
        if idx == self.bits.len() {
            return;
        }
        let (a, b) = self.inst.edge(idx).endpoints;
        if self.dsu.union(a, b) {
            self.bits[idx] = true;
            self.recurse(idx + 1, remaining - 1);
            self.bits[idx] = false;
            self.dsu.rollback();
        }
        if self.completable(idx + 1) {
            self.recurse(idx + 1, remaining);
        }
    }
}

/// Calls `visit` once per spanning tree, in a fixed order (trees containing
/// lower edge ids first). Returns the number of trees visited.
pub fn visit_spanning_trees<T: Scalar, F: FnMut(&[bool])>(
    inst: &Instance<T>,
    mut visit: F,
) -> Result<u128> {
    let count = kirchhoff_count(inst);
    if count > ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded {
            count,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut visited = 0u128;
    let mut e = Enumerator {
        inst,
        dsu: RollbackDisjointSet::new(inst.vertex_count()),
        bits: vec![false; inst.edge_count()],
        visit: |bits: &[bool]| {
            visited += 1;
            visit(bits)
        },
    };
    e.recurse(0, inst.vertex_count() - 1);
    drop(e);
    Ok(visited)
}

/// Every spanning tree of `inst`, in enumeration order.
pub fn enumerate_spanning_trees<T: Scalar>(inst: &Instance<T>) -> Result<Vec<TreeGenotype>> {
    let mut out = Vec::new();
    visit_spanning_trees(inst, |bits| {
        out.push(TreeGenotype::from_bits(bits.to_vec()))
    })?;
    Ok(out)
}

/// A Pareto-optimal objective point with its representative tree.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontEntry<T> {
    /// Lowest bit string among trees with these objectives.
    pub tree: TreeGenotype,
    pub objectives: ObjectivePair<T>,
    /// Other trees with identical objectives; filled only on request.
    pub ties: Vec<TreeGenotype>,
}

/// Mutually nondominated entries sorted by `f1` ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactFront<T> {
    pub entries: Vec<FrontEntry<T>>,
}

impl<T: Scalar> ExactFront<T> {
    pub fn points(&self) -> Vec<ObjectivePair<T>> {
        self.entries.iter().map(|e| e.objectives).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Incremental nondominated archive.
struct Archive<T> {
    entries: Vec<FrontEntry<T>>,
    keep_ties: bool,
}

impl<T: Scalar> Archive<T> {
    fn offer(&mut self, candidate: TreeGenotype, obj: ObjectivePair<T>) {
        for e in &mut self.entries {
            if e.objectives == obj {
                if candidate < e.tree {
                    let old = std::mem::replace(&mut e.tree, candidate);
                    if self.keep_ties {
                        e.ties.push(old);
                    }
                } else if self.keep_ties {
                    e.ties.push(candidate);
                }
                return;
            }
            if dominates(&e.objectives, &obj) {
                return;
            }
        }
        self.entries.retain(|e| !dominates(&obj, &e.objectives));
        self.entries.push(FrontEntry {
            tree: candidate,
            objectives: obj,
            ties: Vec::new(),
        });
    }

    fn finish(mut self) -> ExactFront<T> {
        self.entries
            .sort_by(|a, b| cmp_pair(&a.objectives, &b.objectives));
        for e in &mut self.entries {
            e.ties.sort();
        }
        ExactFront {
            entries: self.entries,
        }
    }
}

fn cmp_pair<T: Scalar>(a: &ObjectivePair<T>, b: &ObjectivePair<T>) -> Ordering {
    a.f1.partial_cmp(&b.f1)
        .unwrap_or(Ordering::Equal)
        .then(a.f2.partial_cmp(&b.f2).unwrap_or(Ordering::Equal))
}

fn front_impl<T: Scalar>(ctx: &EvalContext<'_, T>, keep_ties: bool) -> Result<ExactFront<T>> {
    let mut archive = Archive {
        entries: Vec::new(),
        keep_ties,
    };
    visit_spanning_trees(ctx.instance(), |bits| {
        let tree = TreeGenotype::from_bits(bits.to_vec());
        let obj = ctx.evaluate(&tree);
        archive.offer(tree, obj);
    })?;
    Ok(archive.finish())
}

/// Exact Pareto front by exhaustive enumeration, one tree per objective point.
pub fn exact_pareto_front<T: Scalar>(ctx: &EvalContext<'_, T>) -> Result<ExactFront<T>> {
    front_impl(ctx, false)
}

/// As [`exact_pareto_front`], also listing objective-identical trees.
pub fn exact_pareto_front_with_ties<T: Scalar>(ctx: &EvalContext<'_, T>) -> Result<ExactFront<T>> {
    front_impl(ctx, true)
}

/// Objective index for the epsilon-constraint method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primary {
    F1,
    F2,
}

impl Primary {
    fn split<T: Scalar>(self, o: &ObjectivePair<T>) -> (T, T) {
        match self {
            Primary::F1 => (o.f1, o.f2),
            Primary::F2 => (o.f2, o.f1),
        }
    }
}

fn better<T: Scalar>(
    primary: Primary,
    a: (&ObjectivePair<T>, &TreeGenotype),
    b: (&ObjectivePair<T>, &TreeGenotype),
) -> bool {
    let (pa, sa) = primary.split(a.0);
    let (pb, sb) = primary.split(b.0);
    pa.partial_cmp(&pb)
        .unwrap_or(Ordering::Equal)
        .then(sa.partial_cmp(&sb).unwrap_or(Ordering::Equal))
        .then(a.1.cmp(b.1))
        == Ordering::Less
}

/// Minimizes the `primary` objective subject to the other being `<= eps`.
/// Ties go to the smaller other objective, then the lower bit string.
pub fn epsilon_constraint_solve<T: Scalar>(
    ctx: &EvalContext<'_, T>,
    primary: Primary,
    eps: T,
) -> Result<(TreeGenotype, ObjectivePair<T>)> {
    let mut best: Option<(TreeGenotype, ObjectivePair<T>)> = None;
    visit_spanning_trees(ctx.instance(), |bits| {
        let tree = TreeGenotype::from_bits(bits.to_vec());
        let obj = ctx.evaluate(&tree);
        if primary.split(&obj).1 > eps {
            return;
        }
        let replace = match &best {
            None => true,
            Some((bt, bo)) => better(primary, (&obj, &tree), (bo, bt)),
        };
        if replace {
            best = Some((tree, obj));
        }
    })?;
    best.ok_or(Error::InfeasibleEpsilon(eps.to_f64_lossy()))
}

/// Every spanning tree with its objectives; supports repeated queries
/// without re-enumerating.
#[derive(Debug, Clone)]
pub struct EvaluatedTrees<T> {
    pub entries: Vec<(TreeGenotype, ObjectivePair<T>)>,
}

impl<T: Scalar> EvaluatedTrees<T> {
    pub fn collect(ctx: &EvalContext<'_, T>) -> Result<Self> {
        let mut entries = Vec::new();
        visit_spanning_trees(ctx.instance(), |bits| {
            let tree = TreeGenotype::from_bits(bits.to_vec());
            let obj = ctx.evaluate(&tree);
            entries.push((tree, obj));
        })?;
        Ok(Self { entries })
    }

    /// Evaluates an already enumerated tree list under `ctx`.
    pub fn from_trees(ctx: &EvalContext<'_, T>, trees: &[TreeGenotype]) -> Self {
        Self {
            entries: trees.iter().map(|t| (t.clone(), ctx.evaluate(t))).collect(),
        }
    }

    /// Nondominated subset by sorting, one lowest-bit tree per point.
    pub fn pareto_front(&self) -> ExactFront<T> {
        let mut sorted: Vec<&(TreeGenotype, ObjectivePair<T>)> = self.entries.iter().collect();
        sorted.sort_by(|a, b| cmp_pair(&a.1, &b.1).then(a.0.cmp(&b.0)));
        let mut entries: Vec<FrontEntry<T>> = Vec::new();
        let mut best_f2 = T::infinity();
        for (tree, obj) in sorted {
            if obj.f2 < best_f2 {
                best_f2 = obj.f2;
                entries.push(FrontEntry {
                    tree: tree.clone(),
                    objectives: *obj,
                    ties: Vec::new(),
                });
            }
        }
        ExactFront { entries }
    }

    pub fn epsilon_constraint(
        &self,
        primary: Primary,
        eps: T,
    ) -> Result<(TreeGenotype, ObjectivePair<T>)> {
        self.entries
            .iter()
            .filter(|(_, o)| primary.split(o).1 <= eps)
            .fold(
                None::<&(TreeGenotype, ObjectivePair<T>)>,
                |best, cand| match best {
                    Some(b) if !better(primary, (&cand.1, &cand.0), (&b.1, &b.0)) => Some(b),
                    _ => Some(cand),
                },
            )
            .cloned()
            .ok_or(Error::InfeasibleEpsilon(eps.to_f64_lossy()))
    }

    /// Epsilon-constraint solutions at every distinct attained value of the
    /// constrained objective, in increasing order of that value.
    pub fn epsilon_trace(&self, primary: Primary) -> Vec<(T, TreeGenotype, ObjectivePair<T>)> {
        let mut order: Vec<&(TreeGenotype, ObjectivePair<T>)> = self.entries.iter().collect();
        order.sort_by(|a, b| {
            let (ka, kb) = (primary.split(&a.1).1, primary.split(&b.1).1);
            ka.partial_cmp(&kb).unwrap_or(Ordering::Equal)
        });
        let mut out = Vec::new();
        let mut best: Option<&(TreeGenotype, ObjectivePair<T>)> = None;
        for (k, cand) in order.iter().enumerate() {
            if best.is_none_or(|b| better(primary, (&cand.1, &cand.0), (&b.1, &b.0))) {
                best = Some(cand);
            }
            let eps = primary.split(&cand.1).1;
            let last_of_level = order
                .get(k + 1)
                .is_none_or(|n| primary.split(&n.1).1 != eps);
            if last_of_level {
                let (t, o) = best.expect("set above");
                out.push((eps, t.clone(), *o));
            }
        }
        out
    }

    /// Distinct points of [`Self::epsilon_trace`], sorted by `f1`.
    pub fn epsilon_sweep(&self, primary: Primary) -> Vec<(TreeGenotype, ObjectivePair<T>)> {
        let mut out: Vec<(TreeGenotype, ObjectivePair<T>)> = Vec::new();
        for (_, t, o) in self.epsilon_trace(primary) {
            if !out.iter().any(|(_, p)| *p == o) {
                out.push((t, o));
            }
        }
        out.sort_by(|a, b| cmp_pair(&a.1, &b.1));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uncertainty::{ConfidenceLevels, RoughFuzzyWeight, TriangularFuzzy};

    fn unit() -> RoughFuzzyWeight<f64> {
        RoughFuzzyWeight::new(
            TriangularFuzzy::new(1.0, 2.0, 3.0).unwrap(),
            0.0,
            1.0,
            -1.0,
            2.0,
        )
        .unwrap()
    }

    fn complete(n: usize) -> Instance<f64> {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b, unit())))
            .collect();
        Instance::new(n, edges, vec![]).unwrap()
    }

    #[test]
    fn small_counts() {
        let k4 = complete(4);
        assert_eq!(kirchhoff_count(&k4), 16);
        assert_eq!(enumerate_spanning_trees(&k4).unwrap().len(), 16);
        assert_eq!(kirchhoff_count(&complete(3)), 3);
        let path = Instance::new(5, (0..4).map(|i| (i, i + 1, unit())).collect(), vec![]).unwrap();
        assert_eq!(kirchhoff_count(&path), 1);
        assert_eq!(enumerate_spanning_trees(&path).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_yields_distinct_trees() {
        let k5 = complete(5);
        let trees = enumerate_spanning_trees(&k5).unwrap();
        assert_eq!(trees.len(), 125);
        let mut sorted = trees.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 125);
        assert!(trees
            .iter()
            .all(|t| crate::qmst::is_spanning_tree(&k5, t.bits())));
    }

    #[test]
    fn guard_trips() {
        let k12 = complete(12);
        assert!(matches!(
            enumerate_spanning_trees(&k12),
            Err(Error::BudgetExceeded { count, .. }) if count == 12u128.pow(10)
        ));
    }

    #[test]
    fn symmetric_instance_has_single_point() {
        let k4 = complete(4);
        let ctx = EvalContext::new(&k4, ConfidenceLevels::uniform(0.5, 0.5).unwrap());
        let front = exact_pareto_front_with_ties(&ctx).unwrap();
        assert_eq!(front.len(), 1);
        assert_eq!(front.entries[0].ties.len(), 15);
        assert!(front.entries[0]
            .ties
            .iter()
            .all(|t| *t > front.entries[0].tree));
    }

    #[test]
    fn infeasible_epsilon() {
        let k4 = complete(4);
        let ctx = EvalContext::new(&k4, ConfidenceLevels::uniform(0.5, 0.5).unwrap());
        assert!(matches!(
            epsilon_constraint_solve(&ctx, Primary::F1, -1.0),
            Err(Error::InfeasibleEpsilon(_))
        ));
        assert!(epsilon_constraint_solve(&ctx, Primary::F1, f64::INFINITY).is_ok());
    }
}
