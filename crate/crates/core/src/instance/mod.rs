//! Graph instances with rough-fuzzy linear and quadratic weights.

mod format;
mod paper;
mod random;

use std::collections::{BTreeMap, HashSet};

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::uncertainty::RoughFuzzyWeight;

pub use format::{parse_instance, serialize_instance};
pub use paper::{paper_instance, PAPER_EDGE_LABELS};
pub use random::generate_random;

/// An undirected edge. `endpoints` are 0-based vertex ids with `.0 < .1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeSpec<T> {
    pub id: usize,
    pub endpoints: (usize, usize),
    pub weight: RoughFuzzyWeight<T>,
}

impl<T> EdgeSpec<T> {
    /// `e<u><v>` with 1-based vertices, e.g. `e12`; an underscore separates
    /// the ids once either exceeds 9.
    pub fn label(&self) -> String {
        let (a, b) = (self.endpoints.0 + 1, self.endpoints.1 + 1);
        if b <= 9 {
            format!("e{a}{b}")
        } else {
            format!("e{a}_{b}")
        }
    }
}

/// Interaction weight on an unordered pair of edge ids `pair.0 < pair.1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec<T> {
    pub pair: (usize, usize),
    pub weight: RoughFuzzyWeight<T>,
}

/// Connected simple graph with rough-fuzzy weights. Pairs missing from
/// `quads` have zero interaction cost.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<T> {
    vertex_count: usize,
    edges: Vec<EdgeSpec<T>>,
    quads: BTreeMap<(usize, usize), RoughFuzzyWeight<T>>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn check_weight<T: Scalar>(w: &RoughFuzzyWeight<T>) -> Result<()> {
    RoughFuzzyWeight::new(w.base, w.a1, w.a2, w.a3, w.a4).map(|_| ())
}

impl<T: Scalar> Instance<T> {
    /// Validates and builds an instance.
    ///
    /// `edges` are `(u, v, weight)` with 0-based vertices; edge ids follow
    /// slice order. `quads` are `(edge_i, edge_j, weight)` in any orientation.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize, RoughFuzzyWeight<T>)>,
        quads: Vec<(usize, usize, RoughFuzzyWeight<T>)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParams(
                "instance needs at least one vertex".into(),
            ));
        }
        let mut seen = HashSet::new();
        let mut edge_specs = Vec::with_capacity(edges.len());
        for (id, (a, b, weight)) in edges.into_iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidParams(format!(
                    "edge {id} references vertex outside 1..={vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::SelfLoop(a + 1));
            }
            let endpoints = ordered(a, b);
            if !seen.insert(endpoints) {
                return Err(Error::DuplicateEdge(endpoints.0 + 1, endpoints.1 + 1));
            }
            check_weight(&weight)?;
            edge_specs.push(EdgeSpec {
                id,
                endpoints,
                weight,
            });
        }
        let m = edge_specs.len();
        let mut quad_map = BTreeMap::new();
        for (i, j, weight) in quads {
            if i == j || i >= m || j >= m {
                return Err(Error::InvalidPair(i, j));
            }
            let pair = ordered(i, j);
            check_weight(&weight)?;
            if quad_map.insert(pair, weight).is_some() {
                return Err(Error::DuplicatePair(pair.0, pair.1));
            }
        }
        let inst = Self {
            vertex_count,
            edges: edge_specs,
            quads: quad_map,
        };
        let components = inst.component_count();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(inst)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeSpec<T>] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &EdgeSpec<T> {
        &self.edges[id]
    }

    pub fn quad_count(&self) -> usize {
        self.quads.len()
    }

    /// Quadratic weight of an unordered edge pair, if nonzero.
    pub fn quad(&self, i: usize, j: usize) -> Option<&RoughFuzzyWeight<T>> {
        self.quads.get(&ordered(i, j))
    }

    /// All quadratic weights, keyed by `(i, j)` with `i < j`.
    pub fn quads(&self) -> impl Iterator<Item = QuadSpec<T>> + '_ {
        self.quads
            .iter()
            .map(|(&pair, &weight)| QuadSpec { pair, weight })
    }

    /// Edge id joining two 0-based vertices.
    pub fn find_edge(&self, a: usize, b: usize) -> Option<usize> {
        let key = ordered(a, b);
        self.edges.iter().position(|e| e.endpoints == key)
    }

    /// Edge id by label, e.g. `e12`.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label() == label)
    }

    fn component_count(&self) -> usize {
        let mut dsu = DisjointSet::new(self.vertex_count);
        let mut components = self.vertex_count;
        for e in &self.edges {
            if dsu.union(e.endpoints.0, e.endpoints.1) {
                components -= 1;
            }
        }
        components
    }

    /// Every weight component (fuzzy base and offsets) multiplied by `k > 0`.
    pub fn scaled(&self, k: T) -> Self {
        Self {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    weight: e.weight.scale(k),
                    ..*e
                })
                .collect(),
            quads: self.quads.iter().map(|(&p, w)| (p, w.scale(k))).collect(),
        }
    }

    /// Converts every weight to another scalar type.
    pub fn cast<U: Scalar>(&self) -> Instance<U> {
        Instance {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    id: e.id,
                    endpoints: e.endpoints,
                    weight: e.weight.cast(),
                })
                .collect(),
            quads: self.quads.iter().map(|(&p, w)| (p, w.cast())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uncertainty::TriangularFuzzy;

    fn w(c: f64) -> RoughFuzzyWeight<f64> {
        RoughFuzzyWeight::new(TriangularFuzzy::crisp(c), 0.0, 1.0, -1.0, 2.0).unwrap()
    }

    #[test]
    fn rejects_structural_violations() {
        assert_eq!(
            Instance::new(3, vec![(0, 1, w(1.0))], vec![]).unwrap_err(),
            Error::Disconnected { components: 2 }
        );
        assert_eq!(
            Instance::new(2, vec![(0, 1, w(1.0)), (1, 0, w(1.0))], vec![]).unwrap_err(),
            Error::DuplicateEdge(1, 2)
        );
        assert_eq!(
            Instance::new(2, vec![(1, 1, w(1.0))], vec![]).unwrap_err(),
            Error::SelfLoop(2)
        );
        let tri = vec![(0, 1, w(1.0)), (1, 2, w(1.0)), (0, 2, w(1.0))];
        assert_eq!(
            Instance::new(3, tri.clone(), vec![(0, 1, w(1.0)), (1, 0, w(2.0))]).unwrap_err(),
            Error::DuplicatePair(0, 1)
        );
        assert_eq!(
            Instance::new(3, tri.clone(), vec![(2, 2, w(1.0))]).unwrap_err(),
            Error::InvalidPair(2, 2)
        );
        assert_eq!(
            Instance::new(3, tri, vec![(0, 3, w(1.0))]).unwrap_err(),
            Error::InvalidPair(0, 3)
        );
    }

    #[test]
    fn quads_are_unordered() {
        let tri = vec![(0, 1, w(1.0)), (1, 2, w(1.0)), (0, 2, w(1.0))];
        let inst = Instance::new(3, tri, vec![(2, 0, w(5.0))]).unwrap();
        assert_eq!(inst.quad(0, 2), inst.quad(2, 0));
        assert!(inst.quad(0, 1).is_none());
        assert_eq!(inst.quads().next().unwrap().pair, (0, 2));
    }

    #[test]
    fn labels() {
        let inst = Instance::new(2, vec![(1, 0, w(1.0))], vec![]).unwrap();
        assert_eq!(inst.edge(0).label(), "e12");
        assert_eq!(inst.find_label("e12"), Some(0));
        assert_eq!(inst.find_edge(1, 0), Some(0));
    }
}
