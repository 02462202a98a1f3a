use proptest::prelude::*;

use pushlab::graph::forward_arcs;
use pushlab::hom::{chi_p_with, exists_pushable_hom, Strategy as Search};
use pushlab::io::{parse_arc_list, write_arc_list};
use pushlab::mad::{mad, mad_brute_force};
use pushlab::reducibility::exhaustive_sweep;
use pushlab::tournament::{canonical_code, has_property, paley};
use pushlab::{Exec, OrientedGraph, PropertySpec, PushSet, Tournament};

/// Oriented graph on `n` vertices from one trit per pair: 0 absent,
/// 1 forward, 2 backward.
fn graph_from(n: usize, trits: &[u8]) -> OrientedGraph {
    let mut arcs = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            match trits[k] % 3 {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
            k += 1;
        }
    }
    OrientedGraph::from_arcs(n, &arcs).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |t| graph_from(n, &t)))
}

fn tournaments(max_n: usize) -> impl Strategy<Value = Tournament> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1u8..3, n * (n - 1) / 2)
            .prop_map(move |t| Tournament::new(graph_from(n, &t)).unwrap())
    })
}

fn with_set<S: Strategy>(s: S) -> impl Strategy<Value = (S::Value, u64)>
where
    S::Value: HasOrder + Clone + std::fmt::Debug,
{
    s.prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0u64..(1u64 << n))
    })
}

trait HasOrder {
    fn order(&self) -> usize;
}

impl HasOrder for OrientedGraph {
    fn order(&self) -> usize {
        self.n()
    }
}

fn perms(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn push_by_complement_is_the_same_push((g, s) in with_set(graphs(10))) {
        let a = g.push(&PushSet::from_mask(s)).unwrap();
        let b = g.push(&PushSet::from_mask(s).complement(&g)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn push_is_an_involution((g, s) in with_set(graphs(10))) {
        let s = PushSet::from_mask(s);
        prop_assert_eq!(g.push(&s).unwrap().push(&s).unwrap(), g);
    }

    #[test]
    fn push_keeps_the_underlying_graph((g, s) in with_set(graphs(10))) {
        let h = g.push(&PushSet::from_mask(s)).unwrap();
        prop_assert_eq!(h.underlying(), g.underlying());
        prop_assert_eq!(h.arc_count(), g.arc_count());
    }

    #[test]
    fn push_keeps_forward_arc_parity_on_triangles((g, s) in with_set(graphs(8))) {
        let h = g.push(&PushSet::from_mask(s)).unwrap();
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                for c in b + 1..g.n() {
                    if g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c) {
                        let cyc = [a, b, c];
                        prop_assert_eq!(forward_arcs(&g, &cyc) % 2, forward_arcs(&h, &cyc) % 2);
                    }
                }
            }
        }
    }

    #[test]
    fn mad_flow_matches_brute_force(g in graphs(8)) {
        prop_assert_eq!(Some(mad(&g)), mad_brute_force(&g));
    }

    #[test]
    fn arc_list_round_trip(g in graphs(12)) {
        let text = write_arc_list(&g);
        let back = parse_arc_list(&text).unwrap();
        prop_assert_eq!(write_arc_list(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn property_is_monotone_in_k(t in tournaments(7).prop_filter("j < n", |t| t.order() > 2), j in 1usize..=2, k in 2usize..=6) {
        let hi = has_property(&t, PropertySpec::new(j, k)).unwrap();
        let lo = has_property(&t, PropertySpec::new(j, k - 1)).unwrap();
        prop_assert!(!hi || lo);
    }

    #[test]
    fn canonical_code_ignores_labels((t, p) in tournaments(7).prop_flat_map(|t| {
        let n = t.order();
        (Just(t), perms(n))
    })) {
        let relabelled = Tournament::new(t.graph().relabel(&p).unwrap()).unwrap();
        prop_assert_eq!(canonical_code(&relabelled), canonical_code(&t));
    }

    #[test]
    fn pushable_witnesses_verify_and_strategies_agree(g in graphs(6), h in tournaments(5)) {
        let naive = exists_pushable_hom(&g, h.graph(), Search::Naive).unwrap();
        let twin = exists_pushable_hom(&g, h.graph(), Search::AntiTwin).unwrap();
        prop_assert_eq!(naive.is_some(), twin.is_some());
        for w in naive.iter().chain(twin.iter()) {
            prop_assert!(w.verify(&g, h.graph()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn chi_p_is_push_invariant((g, s) in with_set(graphs(6))) {
        let h = g.push(&PushSet::from_mask(s)).unwrap();
        let a = chi_p_with(&g, Exec::Sequential, Search::AntiTwin).unwrap().value;
        let b = chi_p_with(&h, Exec::Sequential, Search::AntiTwin).unwrap().value;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sweep_counts_ignore_labels((g, p) in graphs(6).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), perms(n))
    })) {
        let pal = paley(7).unwrap();
        let a = exhaustive_sweep(&g, &pal, Exec::Sequential).unwrap();
        let b = exhaustive_sweep(&g.relabel(&p).unwrap(), &pal, Exec::Sequential).unwrap();
        prop_assert_eq!(a.orientations, b.orientations);
        prop_assert_eq!(a.pushable, b.pushable);
        prop_assert_eq!(a.failures.len(), b.failures.len());
    }
}

impl HasOrder for Tournament {
    fn order(&self) -> usize {
        Tournament::order(self)
    }
}

#[test]
fn paley_tournaments_are_self_converse_under_negation() {
    for q in [3usize, 7, 11, 19, 23, 31, 43] {
        let t = paley(q).unwrap();
        let neg: Vec<usize> = (0..q).map(|x| (q - x) % q).collect();
        let image = t.graph().relabel(&neg).unwrap();
        assert_eq!(image, t.graph().converse(), "q = {q}");
    }
}
