//! Exact maximum average degree.
//!
//! The densest subgraph is found with Dinkelbach iteration over a min-cut
//! oracle: for a density `p/q`, the closure network (source -> edge node with
//! capacity `q`, edge node -> endpoints uncapped, vertex -> sink with capacity
//! `p`) has a cut of value below `q*|E|` iff some vertex set `S` satisfies
//! `q*|E(S)| - p*|S| > 0`. All capacities are integers.

use crate::bits::{bit, bits, full};
use crate::graph::OrientedGraph;
use crate::rational::Rational;

/// `max 2|E(H)|/|V(H)|` over nonempty subgraphs `H`, exactly.
pub fn mad(g: &OrientedGraph) -> Rational {
    densest_subgraph(g).0 * Rational::integer(2)
}

/// Maximum edge density `|E(S)|/|S|` together with a vertex set attaining it.
pub fn densest_subgraph(g: &OrientedGraph) -> (Rational, u64) {
    let edges = g.edges();
    if edges.is_empty() {
        return (Rational::ZERO, 1);
    }
    let mut best_set = g.vertex_mask();
    let mut density = Rational::new(edges.len() as i64, g.n() as i64);
    loop {
        let (gain, set) = max_closure(g.n(), &edges, density.num(), density.den());
        if gain <= 0 {
            return (density, best_set);
        }
        let e = induced_edges(&edges, set);
        let d = Rational::new(e as i64, set.count_ones() as i64);
        debug_assert!(d > density);
        density = d;
        best_set = set;
    }
}

/// Exhaustive oracle over all vertex subsets, for `n <= 20`.
pub fn mad_brute_force(g: &OrientedGraph) -> Option<Rational> {
    if g.n() > 20 {
        return None;
    }
    let edges = g.edges();
    let mut best = Rational::ZERO;
    for s in 1..=full(g.n()) {
        let e = induced_edges(&edges, s) as i64;
        let d = Rational::new(2 * e, s.count_ones() as i64);
        if d > best {
            best = d;
        }
    }
    Some(best)
}

fn induced_edges(edges: &[(usize, usize)], set: u64) -> usize {
    edges
        .iter()
        .filter(|&&(u, v)| set & bit(u) != 0 && set & bit(v) != 0)
        .count()
}

/// Returns `max_S q|E(S)| - p|S|` and the maximising vertex set.
fn max_closure(n: usize, edges: &[(usize, usize)], p: i64, q: i64) -> (i64, u64) {
    let m = edges.len();
    let source = 0;
    let sink = 1;
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + m + v;
    let mut net = FlowNetwork::new(2 + m + n);
    let inf = q * m as i64 + p * n as i64 + 1;
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_edge(source, edge_node(i), q);
        net.add_edge(edge_node(i), vertex_node(u), inf);
        net.add_edge(edge_node(i), vertex_node(v), inf);
    }
    for v in 0..n {
        net.add_edge(vertex_node(v), sink, p);
    }
    let flow = net.max_flow(source, sink);
    let reach = net.residual_reachable(source);
    let set = (0..n).filter(|&v| reach[vertex_node(v)]).fold(0u64, |s, v| s | bit(v));
    (q * m as i64 - flow, set)
}

/// Dinic's algorithm on a small dense-ish network.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, a: usize, b: usize, c: i64) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn levels(&self, s: usize) -> Vec<i32> {
        let mut level = vec![-1; self.head.len()];
        let mut queue = std::collections::VecDeque::from([s]);
        level[s] = 0;
        while let Some(a) = queue.pop_front() {
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && level[b] < 0 {
                    level[b] = level[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        level
    }

    fn augment(&mut self, a: usize, t: usize, f: i64, level: &[i32], it: &mut [usize]) -> i64 {
        if a == t {
            return f;
        }
        while it[a] < self.head[a].len() {
            let e = self.head[a][it[a]];
            let b = self.to[e];
            if self.cap[e] > 0 && level[b] == level[a] + 1 {
                let d = self.augment(b, t, f.min(self.cap[e]), level, it);
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            it[a] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t] < 0 {
                return total;
            }
            let mut it = vec![0; self.head.len()];
            loop {
                let f = self.augment(s, t, i64::MAX, &level, &mut it);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s).into_iter().map(|l| l >= 0).collect()
    }
}

/// Average degree `2|E|/|V|` of the whole graph.
pub fn average_degree(g: &OrientedGraph) -> Rational {
    Rational::new(2 * g.edges().len() as i64, g.n() as i64)
}

/// Vertex set as a list, for reports.
pub fn set_vertices(set: u64) -> Vec<usize> {
    bits(set).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin;

    #[test]
    fn complete_graph_on_four() {
        let k4 = builtin("k4").unwrap();
        assert_eq!(mad(&k4), Rational::integer(3));
        assert_eq!(mad_brute_force(&k4), Some(Rational::integer(3)));
    }

    #[test]
    fn single_vertex_and_edgeless() {
        let g = OrientedGraph::empty(1).unwrap();
        assert_eq!(mad(&g), Rational::ZERO);
        let g = OrientedGraph::empty(5).unwrap();
        assert_eq!(mad(&g), Rational::ZERO);
    }

    #[test]
    fn figure_two_ii_has_mad_eight_thirds() {
        let g = builtin("fig2ii").unwrap();
        assert_eq!(mad_brute_force(&g), Some(Rational::new(8, 3)));
        assert_eq!(mad(&g), Rational::new(8, 3));
    }

    #[test]
    fn dense_part_dominates_pendant_path() {
        // K4 on 0..4 plus a long tail: the K4 is the densest part.
        let mut arcs = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for v in 3..9 {
            arcs.push((v, v + 1));
        }
        let g = OrientedGraph::from_arcs(10, &arcs).unwrap();
        let (d, set) = densest_subgraph(&g);
        assert_eq!(d, Rational::new(3, 2));
        assert_eq!(set, 0b1111);
        assert_eq!(mad(&g), mad_brute_force(&g).unwrap());
    }
}
