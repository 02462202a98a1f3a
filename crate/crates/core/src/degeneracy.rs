//! Degeneracy orderings.

use crate::bits::{bit, bits};
use crate::graph::OrientedGraph;

/// An ordering in which every vertex has at most `d` neighbours earlier in
/// the order, or `None` if `g` is not `d`-degenerate.
///
/// Vertices are removed by minimum remaining degree (lowest index on ties);
/// the order is the reverse of the removal sequence.
pub fn degeneracy_order(g: &OrientedGraph, d: usize) -> Option<Vec<usize>> {
    degeneracy_order_with_last(g, d, &[])
}

/// Like [`degeneracy_order`] but `last` is removed first, so those vertices
/// end the order (in reverse of the given sequence).
pub fn degeneracy_order_with_last(g: &OrientedGraph, d: usize, last: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut alive = g.vertex_mask();
    let mut removal = Vec::with_capacity(n);
    let remaining_degree = |v: usize, alive: u64| (g.nbrs(v) & alive).count_ones() as usize;
    for &v in last {
        if alive & bit(v) == 0 || remaining_degree(v, alive) > d {
            return None;
        }
        alive &= !bit(v);
        removal.push(v);
    }
    while alive != 0 {
        let v = bits(alive).min_by_key(|&v| remaining_degree(v, alive))?;
        if remaining_degree(v, alive) > d {
            return None;
        }
        alive &= !bit(v);
        removal.push(v);
    }
    removal.reverse();
    Some(removal)
}

/// Checks that `order` is a permutation in which each vertex has at most `d`
/// earlier neighbours.
pub fn is_degeneracy_order(g: &OrientedGraph, order: &[usize], d: usize) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut before = 0u64;
    for &v in order {
        if v >= g.n() || before & bit(v) != 0 {
            return false;
        }
        if (g.nbrs(v) & before).count_ones() as usize > d {
            return false;
        }
        before |= bit(v);
    }
    true
}

/// Smallest `d` for which `g` is `d`-degenerate.
pub fn degeneracy(g: &OrientedGraph) -> usize {
    (0..=g.max_degree())
        .find(|&d| degeneracy_order(g, d).is_some())
        .unwrap_or(g.max_degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin;

    #[test]
    fn tree_is_one_degenerate() {
        let g = OrientedGraph::from_arcs(5, &[(0, 1), (2, 1), (1, 3), (3, 4)]).unwrap();
        let order = degeneracy_order(&g, 1).unwrap();
        assert!(is_degeneracy_order(&g, &order, 1));
    }

    #[test]
    fn k4_is_not_two_degenerate() {
        let k4 = builtin("k4").unwrap();
        assert!(degeneracy_order(&k4, 2).is_none());
        assert_eq!(degeneracy(&k4), 3);
    }

    #[test]
    fn cubic_minus_edge_is_two_degenerate() {
        let g = builtin("fig2i").unwrap();
        assert!(degeneracy_order(&g, 2).is_none());
        let h = g.without_edge(2, 5);
        let order = degeneracy_order(&h, 2).unwrap();
        assert!(is_degeneracy_order(&h, &order, 2));
        let forced = degeneracy_order_with_last(&h, 2, &[2, 5]).unwrap();
        assert_eq!(&forced[4..], &[5, 2]);
        assert!(is_degeneracy_order(&h, &forced, 2));
    }
}
