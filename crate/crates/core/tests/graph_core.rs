use pushlab::io::{builtin, parse_arc_list, resolve_graph, write_arc_list, BUILTIN_NAMES};
use pushlab::mad::{densest_subgraph, mad, mad_brute_force, set_vertices};
use pushlab::{Error, OrientedGraph, PushSet, Rational};

#[test]
fn every_builtin_round_trips_through_text() {
    for name in BUILTIN_NAMES {
        let g = builtin(name).unwrap();
        assert_eq!(parse_arc_list(&write_arc_list(&g)).unwrap(), g, "{name}");
        assert_eq!(resolve_graph(&format!("@{name}")).unwrap(), g);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let cases = [
        ("2 1\n0 0\n", 2),
        ("2 2\n0 1\n1 0\n", 3),
        ("# c\n\n3 1\n0 5\n", 4),
        ("3 1\n0 1\n1 2\n", 3),
        ("three 1\n", 1),
    ];
    for (text, line) in cases {
        match parse_arc_list(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?} gave {other:?}"),
        }
    }
}

#[test]
fn unknown_files_are_io_errors() {
    assert!(matches!(resolve_graph("/nonexistent/graph.txt"), Err(Error::Io { .. })));
}

#[test]
fn pushing_a_whole_component_changes_nothing() {
    let g = builtin("t4").unwrap();
    assert_eq!(g.push(&PushSet::from_mask(g.vertex_mask())).unwrap(), g);
    assert_eq!(g.push_class().unwrap().len(), 1 << 7);
}

#[test]
fn push_rejects_out_of_range_sets() {
    let g = builtin("c3").unwrap();
    assert!(g.push(&PushSet::from_mask(1 << 5)).is_err());
}

#[test]
fn mad_of_small_families() {
    let cycle = |n: usize| OrientedGraph::from_arcs(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap();
    for n in 3..10 {
        assert_eq!(mad(&cycle(n)), Rational::integer(2));
    }
    assert_eq!(mad(&builtin("fig2i").unwrap()), Rational::integer(3));
    assert_eq!(mad(&builtin("pal7").unwrap()), Rational::integer(6));
    assert_eq!(mad(&OrientedGraph::empty(4).unwrap()), Rational::ZERO);
}

#[test]
fn densest_set_attains_the_density() {
    // A triangle with a pendant path: the triangle is densest.
    let g = OrientedGraph::from_arcs(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
    let (d, set) = densest_subgraph(&g);
    assert_eq!(d, Rational::integer(1));
    assert_eq!(mad(&g), mad_brute_force(&g).unwrap());
    assert!(set_vertices(set).len() >= 3);
}
