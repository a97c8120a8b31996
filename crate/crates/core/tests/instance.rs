//! Instance text format, generator and embedded graph.

use proptest::prelude::*;
use rfqmst::exact::kirchhoff_count;
use rfqmst::instance::PAPER_EDGE_LABELS;
use rfqmst::{generate_random, paper_instance, parse_instance, serialize_instance, Error};

#[test]
fn embedded_instance_round_trips() {
    let inst = paper_instance::<f64>();
    let text = serialize_instance(&inst);
    let back = parse_instance::<f64>(&text).unwrap();
    assert_eq!(back, inst);
    assert_eq!(serialize_instance(&back), text);
}

#[test]
fn embedded_instance_shape() {
    let inst = paper_instance::<f64>();
    assert_eq!(
        (inst.vertex_count(), inst.edge_count(), inst.quad_count()),
        (9, 18, 35)
    );
    let labels: Vec<String> = inst.edges().iter().map(|e| e.label()).collect();
    assert_eq!(labels, PAPER_EDGE_LABELS);
}

#[test]
fn comments_and_blank_lines_ignored() {
    let text = "# header\nqmst 1\n\nvertices 2  # two\nedges 1\nedge 1 2 1 2 3 0 1 -1 2\nquads 0\n";
    let inst = parse_instance::<f64>(text).unwrap();
    assert_eq!(inst.edge_count(), 1);
}

const TRIANGLE: &str = "qmst 1\nvertices 3\nedges 3\n\
edge 1 2 1 2 3 0 1 -1 2\nedge 2 3 1 2 3 0 1 -1 2\nedge 1 3 1 2 3 0 1 -1 2\n";

#[test]
fn duplicate_pair_rejected() {
    let text = format!("{TRIANGLE}quads 2\nquad 0 1 1 2 3 0 1 -1 2\nquad 1 0 1 2 3 0 1 -1 2\n");
    assert!(matches!(
        parse_instance::<f64>(&text),
        Err(Error::DuplicatePair(_, _))
    ));
}

#[test]
fn invalid_inputs_rejected() {
    let bad_offsets = "qmst 1\nvertices 2\nedges 1\nedge 1 2 1 2 3 0 1 0.5 2\nquads 0\n";
    assert!(matches!(
        parse_instance::<f64>(bad_offsets),
        Err(Error::OffsetOrder { .. })
    ));
    let bad_tfv = "qmst 1\nvertices 2\nedges 1\nedge 1 2 3 2 1 0 1 -1 2\nquads 0\n";
    assert!(matches!(
        parse_instance::<f64>(bad_tfv),
        Err(Error::FuzzyOrder { .. })
    ));
    let disconnected = "qmst 1\nvertices 3\nedges 1\nedge 1 2 1 2 3 0 1 -1 2\nquads 0\n";
    assert!(matches!(
        parse_instance::<f64>(disconnected),
        Err(Error::Disconnected { .. })
    ));
    let truncated = "qmst 1\nvertices 3\nedges 3\nedge 1 2 1 2 3 0 1 -1 2\n";
    assert!(matches!(
        parse_instance::<f64>(truncated),
        Err(Error::Syntax { .. })
    ));
    let dup_edge =
        "qmst 1\nvertices 2\nedges 2\nedge 1 2 1 2 3 0 1 -1 2\nedge 2 1 1 2 3 0 1 -1 2\nquads 0\n";
    assert!(matches!(
        parse_instance::<f64>(dup_edge),
        Err(Error::DuplicateEdge(_, _))
    ));
}

#[test]
fn syntax_errors_report_line() {
    let text = "qmst 1\nvertices 2\nedges 1\nedge 1 2 1 x 3 0 1 -1 2\nquads 0\n";
    match parse_instance::<f64>(text) {
        Err(Error::Syntax { line, .. }) => assert_eq!(line, 4),
        other => panic!("unexpected {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_instances_round_trip_and_connect(
        n in 2usize..14,
        extra in 0usize..20,
        seed in any::<u64>(),
    ) {
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        let inst = generate_random::<f64>(n, m, seed).unwrap();
        prop_assert_eq!(inst.edge_count(), m);
        prop_assert_eq!(inst.quad_count(), m * (m - 1) / 2);
        prop_assert!(kirchhoff_count(&inst) >= 1);
        let text = serialize_instance(&inst);
        let back = parse_instance::<f64>(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(serialize_instance(&back), text);
        prop_assert_eq!(generate_random::<f64>(n, m, seed).unwrap(), inst);
    }
}
