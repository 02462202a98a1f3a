use pushlab::hom::{
    anti_twin, chi_o, chi_o_with, chi_p, chi_p_with, completion, exists_pushable_hom, find_hom, is_hom, sandwich_check,
    Strategy,
};
use pushlab::io::builtin;
use pushlab::tournament::{enumerate_tournaments, paley};
use pushlab::{Error, Exec, OrientedGraph};

#[test]
fn figure_graphs_have_the_stated_chromatic_numbers() {
    assert_eq!(chi_p(&builtin("fig2i").unwrap()).unwrap(), 6);
    assert_eq!(chi_p(&builtin("fig2ii").unwrap()).unwrap(), 5);
    assert_eq!(chi_o(&builtin("single-arc").unwrap()).unwrap(), 2);
    assert_eq!(chi_o(&builtin("c3").unwrap()).unwrap(), 3);
    assert_eq!(chi_p(&builtin("c3").unwrap()).unwrap(), 3);
}

#[test]
fn witnesses_verify_under_both_policies() {
    for name in ["fig2i", "fig2ii", "t3", "k4"] {
        let g = builtin(name).unwrap();
        let a = chi_p_with(&g, Exec::Sequential, Strategy::AntiTwin).unwrap();
        let b = chi_p_with(&g, Exec::Parallel, Strategy::AntiTwin).unwrap();
        assert_eq!(a, b, "{name}");
        assert!(a.hom.verify(&g, a.target.graph()));
        let o = chi_o_with(&g, Exec::Parallel).unwrap();
        assert!(o.hom.push.is_empty() && is_hom(&g, o.target.graph(), &o.hom.map));
        assert!(sandwich_check(&g).unwrap().ok());
    }
}

#[test]
fn cube_and_prism_map_pushably_into_pal7() {
    let pal = paley(7).unwrap();
    for name in ["t3", "t4", "k4", "fig2i"] {
        let g = builtin(name).unwrap();
        let w = exists_pushable_hom(&g, pal.graph(), Strategy::AntiTwin)
            .unwrap()
            .unwrap();
        assert!(w.verify(&g, pal.graph()), "{name}");
    }
}

#[test]
fn anti_twin_target_shape() {
    let pal = paley(7).unwrap();
    let at = anti_twin(pal.graph()).unwrap();
    assert_eq!(at.n(), 14);
    assert!(!at.is_tournament());
    for u in 0..7 {
        assert!(!at.adjacent(u, u + 7));
        assert_eq!(at.degree(u), 12);
    }
}

#[test]
fn completion_contains_the_graph() {
    let g = builtin("fig2ii").unwrap();
    let t = completion(&g);
    assert!(is_hom(&g, t.graph(), &(0..6).collect::<Vec<_>>()));
}

#[test]
fn transitive_targets_reject_cycles() {
    let c3 = builtin("c3").unwrap();
    let tt3 = enumerate_tournaments(3, false)
        .unwrap()
        .iter()
        .find(|t| (0..3).any(|v| t.score(v) == 2))
        .unwrap();
    assert!(find_hom(&c3, tt3.graph()).is_none());
}

#[test]
fn large_inputs_exceed_the_range() {
    let n = 9;
    let arcs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let g = OrientedGraph::from_arcs(n, &arcs).unwrap();
    assert_eq!(chi_o(&g), Err(Error::ExceedsEnumerationRange { max_order: 7 }));
}
