//! The nine-vertex, eighteen-edge reference graph with its rough-fuzzy
//! linear and quadratic weights.
//!
//! Two source rows needed adjustment to form a valid instance:
//! - the pair `e39 e58` is listed twice, with bases `(9, 11, 13)` and
//!   `(10.5, 11.5, 12.9)`; only the first is kept.
//! - the pair `e17 e48` is listed as `[z, z + 1.2][z - 1.1, z + 1.1]`, whose
//!   lower approximation is not inside the upper one. `a2` is clamped to
//!   `1.1`; `a2` does not enter either objective.

use crate::scalar::Scalar;
use crate::uncertainty::{RoughFuzzyWeight, TriangularFuzzy};

use super::Instance;

/// Canonical edge order of the reference graph.
pub const PAPER_EDGE_LABELS: [&str; 18] = [
    "e12", "e15", "e16", "e23", "e26", "e34", "e36", "e45", "e46", "e56", "e17", "e18", "e27",
    "e39", "e58", "e79", "e48", "e49",
];

type Row = ([f64; 3], [f64; 4]);

const LINEAR: [Row; 18] = [
    ([9.0, 11.5, 12.7], [0.0, 2.0, -1.0, 3.0]),
    ([11.0, 13.0, 15.0], [0.0, 1.0, -1.0, 2.0]),
    ([9.2, 10.5, 12.4], [0.0, 1.5, -0.7, 1.9]),
    ([10.6, 14.1, 17.2], [0.0, 2.0, -2.0, 3.0]),
    ([8.3, 10.0, 12.4], [0.0, 1.0, -2.0, 2.0]),
    ([9.8, 11.7, 14.0], [0.0, 2.0, -2.0, 2.5]),
    ([11.0, 14.0, 15.0], [0.0, 1.5, -0.5, 2.0]),
    ([12.0, 14.7, 17.1], [0.0, 1.0, -0.5, 1.8]),
    ([10.0, 12.0, 14.0], [0.0, 2.5, -1.5, 2.7]),
    ([9.4, 11.6, 12.8], [0.0, 0.5, -0.7, 0.9]),
    ([11.5, 12.9, 13.8], [0.0, 0.9, -1.2, 1.8]),
    ([8.9, 10.2, 12.0], [0.0, 0.5, -0.6, 0.95]),
    ([10.0, 12.0, 13.5], [0.0, 1.0, -1.1, 1.5]),
    ([9.8, 11.2, 12.4], [0.0, 0.4, -0.5, 0.8]),
    ([11.9, 12.8, 14.5], [0.0, 1.2, -1.2, 1.4]),
    ([11.5, 12.0, 13.5], [0.0, 1.1, -0.9, 1.3]),
    ([9.0, 10.2, 12.9], [0.0, 0.6, -0.4, 0.67]),
    ([10.2, 11.6, 12.4], [0.0, 0.78, -0.8, 0.8]),
];

const QUADRATIC: [(&str, &str, Row); 35] = [
    ("e12", "e15", ([9.0, 11.0, 13.0], [0.0, 0.7, -0.2, 1.0])),
    ("e12", "e16", ([8.5, 10.2, 11.5], [0.0, 1.2, -0.5, 1.4])),
    ("e15", "e16", ([9.5, 10.7, 11.6], [0.0, 0.4, -0.2, 0.8])),
    ("e15", "e56", ([9.8, 10.8, 11.5], [0.0, 1.0, -0.8, 1.2])),
    ("e26", "e36", ([10.2, 12.2, 13.4], [0.0, 1.2, -0.3, 1.5])),
    ("e23", "e26", ([10.4, 11.7, 12.9], [0.0, 0.9, -0.5, 1.6])),
    ("e12", "e26", ([8.6, 9.2, 9.8], [0.0, 1.2, -0.2, 1.5])),
    ("e26", "e46", ([8.1, 9.8, 10.9], [0.0, 0.9, -0.3, 1.2])),
    ("e23", "e34", ([10.8, 12.9, 14.2], [0.0, 2.0, -0.9, 2.6])),
    ("e23", "e46", ([11.0, 13.0, 14.0], [0.0, 2.1, -0.2, 2.4])),
    ("e23", "e56", ([10.7, 11.7, 12.6], [0.0, 1.0, -1.2, 1.5])),
    ("e34", "e56", ([8.0, 10.0, 12.0], [0.0, 1.0, -1.0, 2.0])),
    ("e16", "e34", ([7.8, 11.0, 12.0], [0.0, 0.9, -1.0, 1.9])),
    ("e34", "e46", ([9.0, 11.0, 13.0], [0.0, 1.0, -1.0, 2.0])),
    ("e48", "e79", ([9.8, 11.2, 12.4], [0.0, 1.5, -1.2, 1.9])),
    ("e45", "e36", ([12.0, 14.0, 15.0], [0.0, 2.0, -1.0, 3.0])),
    ("e45", "e46", ([11.6, 12.7, 13.8], [0.0, 0.7, -0.5, 0.9])),
    ("e16", "e56", ([9.5, 10.5, 11.8], [0.0, 1.4, -0.1, 1.5])),
    ("e56", "e36", ([10.0, 12.5, 14.0], [0.0, 0.9, -0.7, 1.2])),
    ("e12", "e56", ([9.0, 11.0, 13.0], [0.0, 0.7, -0.5, 1.0])),
    ("e15", "e58", ([10.9, 11.5, 12.1], [0.0, 0.5, -0.5, 0.9])),
    ("e46", "e48", ([10.8, 12.2, 13.5], [0.0, 0.9, -0.4, 1.2])),
    ("e15", "e49", ([11.2, 12.0, 13.9], [0.0, 0.7, -0.3, 0.8])),
    ("e17", "e48", ([10.0, 11.5, 12.5], [0.0, 1.1, -1.1, 1.1])),
    ("e17", "e18", ([8.0, 10.0, 12.0], [0.0, 0.7, -0.6, 0.8])),
    ("e18", "e79", ([8.9, 10.0, 11.2], [0.0, 1.5, -1.3, 1.7])),
    ("e27", "e39", ([11.2, 12.3, 13.4], [0.0, 1.2, -1.2, 1.4])),
    ("e27", "e58", ([10.0, 12.2, 14.0], [0.0, 1.6, -1.5, 1.7])),
    ("e39", "e58", ([9.0, 11.0, 13.0], [0.0, 1.0, -1.0, 1.2])),
    ("e27", "e56", ([12.1, 12.6, 12.9], [0.0, 0.2, -0.8, 1.0])),
    ("e27", "e46", ([10.0, 11.0, 12.0], [0.0, 2.0, -1.0, 3.0])),
    ("e26", "e39", ([11.0, 12.6, 13.5], [0.0, 1.2, -2.0, 2.4])),
    ("e46", "e58", ([12.0, 13.6, 14.5], [0.0, 1.8, -1.3, 2.9])),
    ("e49", "e56", ([8.9, 10.9, 12.5], [0.0, 1.0, -1.4, 1.9])),
    ("e45", "e56", ([10.8, 11.8, 12.9], [0.0, 0.5, -0.4, 0.6])),
];

fn weight<T: Scalar>((base, off): Row) -> RoughFuzzyWeight<T> {
    let base = TriangularFuzzy::new(T::lit(base[0]), T::lit(base[1]), T::lit(base[2]))
        .expect("embedded table is ordered");
    RoughFuzzyWeight::new(
        base,
        T::lit(off[0]),
        T::lit(off[1]),
        T::lit(off[2]),
        T::lit(off[3]),
    )
    .expect("embedded table is ordered")
}

fn label_id(label: &str) -> usize {
    PAPER_EDGE_LABELS
        .iter()
        .position(|l| *l == label)
        .expect("known label")
}

fn endpoints(label: &str) -> (usize, usize) {
    let b = label.as_bytes();
    ((b[1] - b'1') as usize, (b[2] - b'1') as usize)
}

/// The embedded reference instance.
pub fn paper_instance<T: Scalar>() -> Instance<T> {
    let edges = PAPER_EDGE_LABELS
        .iter()
        .zip(LINEAR)
        .map(|(label, row)| {
            let (a, b) = endpoints(label);
            (a, b, weight(row))
        })
        .collect();
    let quads = QUADRATIC
        .iter()
        .map(|&(x, y, row)| (label_id(x), label_id(y), weight(row)))
        .collect();
    Instance::new(9, edges, quads).expect("embedded instance is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        let inst = paper_instance::<f64>();
        assert_eq!(inst.vertex_count(), 9);
        assert_eq!(inst.edge_count(), 18);
        assert_eq!(inst.quad_count(), 35);
        for (e, label) in inst.edges().iter().zip(PAPER_EDGE_LABELS) {
            assert_eq!(e.label(), label);
        }
    }

    #[test]
    fn table_entries() {
        let inst = paper_instance::<f64>();
        let e12 = inst.edge(0).weight;
        assert_eq!((e12.base.u, e12.base.v, e12.base.w), (9.0, 11.5, 12.7));
        assert_eq!((e12.a1, e12.a2, e12.a3, e12.a4), (0.0, 2.0, -1.0, 3.0));
        let q = inst.quad(label_id("e12"), label_id("e26")).unwrap();
        assert_eq!((q.base.u, q.base.v, q.base.w), (8.6, 9.2, 9.8));
        assert_eq!((q.a1, q.a2, q.a3, q.a4), (0.0, 1.2, -0.2, 1.5));
        assert!(inst.quad(label_id("e15"), label_id("e34")).is_none());
        // first of the two e39 e58 rows
        let dup = inst.quad(label_id("e58"), label_id("e39")).unwrap();
        assert_eq!(dup.base.u, 9.0);
    }
}
