//! Oriented graphs on at most 64 vertices and the push operation.
//!
//! Adjacency is stored as one `u64` per vertex, so every neighbourhood query
//! is a word operation. Values are immutable once built; the mutating helpers
//! (`with_arc`, `without_edge`, ...) return fresh graphs.

use std::fmt;

use crate::bits::{bit, bits, full, subsets};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Loopless antisymmetric digraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl OrientedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Self {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        })
    }

    /// Builds a graph from an arc list; repeated arcs are tolerated.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in arcs {
            g.insert_arc(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex out-neighbour masks.
    pub fn from_out_masks(out: Vec<u64>) -> Result<Self> {
        let n = out.len();
        let mut g = Self::empty(n)?;
        for (u, &m) in out.iter().enumerate() {
            if m & !full(n) != 0 {
                let v = (m & !full(n)).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            for v in bits(m) {
                g.insert_arc(u, v)?;
            }
        }
        Ok(g)
    }

    fn insert_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.out[v] & bit(u) != 0 {
            return Err(Error::OppositeArcs(u, v));
        }
        self.out[u] |= bit(v);
        self.inn[v] |= bit(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full(self.n)
    }

    #[inline]
    pub fn out_nbrs(&self, v: usize) -> u64 {
        self.out[v]
    }

    #[inline]
    pub fn in_nbrs(&self, v: usize) -> u64 {
        self.inn[v]
    }

    #[inline]
    pub fn nbrs(&self, v: usize) -> u64 {
        self.out[v] | self.inn[v]
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] & bit(v) != 0
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.nbrs(u) & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs(v).count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.out[u]).map(move |v| (u, v)))
            .collect()
    }

    /// Underlying edges `(min, max)` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.nbrs(u) & !full(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    /// Undirected adjacency masks (forgets the orientation).
    pub fn underlying(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.nbrs(v)).collect()
    }

    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|v| self.nbrs(v) == full(self.n) & !bit(v))
    }

    /// Connected components of the underlying graph, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.nbrs(v);
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut out = vec![0u64; vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
            }
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_arc(u, v) {
                    out[i] |= bit(j);
                }
            }
        }
        Self::from_out_masks(out)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let arcs: Vec<_> = self.arcs().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::from_arcs(self.n, &arcs)
    }

    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_arc(u, v)?;
        Ok(g)
    }

    /// Removes the edge between `u` and `v` whatever its direction.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.out[u] &= !bit(v);
        g.out[v] &= !bit(u);
        g.inn[u] &= !bit(v);
        g.inn[v] &= !bit(u);
        g
    }

    /// Reverses every arc (the converse graph).
    pub fn converse(&self) -> Self {
        Self {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Reverses every arc with exactly one endpoint in `s`.
    pub fn push(&self, s: &PushSet) -> Result<Self> {
        if s.members & !self.vertex_mask() != 0 {
            let v = (s.members & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.push_mask(s.members))
    }

    pub(crate) fn push_mask(&self, s: u64) -> Self {
        let mut out = vec![0u64; self.n];
        let mut inn = vec![0u64; self.n];
        for u in 0..self.n {
            if s & bit(u) != 0 {
                // arcs to outside are reversed, arcs inside stay
                out[u] = (self.out[u] & s) | (self.inn[u] & !s);
                inn[u] = (self.inn[u] & s) | (self.out[u] & !s);
            } else {
                out[u] = (self.out[u] & !s) | (self.inn[u] & s);
                inn[u] = (self.inn[u] & !s) | (self.out[u] & s);
            }
        }
        Self { n: self.n, out, inn }
    }

    /// Every orientation push-equivalent to `self`, one per canonical push set.
    pub fn push_class(&self) -> Result<Vec<Self>> {
        const LIMIT: usize = 24;
        if self.n > LIMIT {
            return Err(Error::TooLarge {
                what: "push class materialisation",
                limit: LIMIT,
                n: self.n,
            });
        }
        Ok(PushSet::canonical_sets(self)
            .map(|s| self.push_mask(s.members))
            .collect())
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

/// A vertex subset naming one member of a push class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PushSet {
    pub members: u64,
}

impl PushSet {
    pub const EMPTY: PushSet = PushSet { members: 0 };

    pub fn new(g: &OrientedGraph, vertices: &[usize]) -> Result<Self> {
        let mut members = 0;
        for &v in vertices {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            members |= bit(v);
        }
        Ok(Self { members })
    }

    pub fn from_mask(members: u64) -> Self {
        Self { members }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.members & bit(v) != 0
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn vertices(&self) -> Vec<usize> {
        bits(self.members).collect()
    }

    pub fn complement(&self, g: &OrientedGraph) -> Self {
        Self {
            members: !self.members & g.vertex_mask(),
        }
    }

    /// Complements the set on every component whose lowest vertex it contains.
    /// Pushing a whole component changes nothing, so the result names the same
    /// orientation.
    pub fn canonical(&self, g: &OrientedGraph) -> Self {
        let mut m = self.members;
        for c in g.components() {
            let root = c.trailing_zeros();
            if m & (1u64 << root) != 0 {
                m ^= c;
            }
        }
        Self { members: m }
    }

    /// All canonical push sets of `g` in increasing numeric order.
    pub fn canonical_sets(g: &OrientedGraph) -> impl Iterator<Item = PushSet> {
        let roots = g
            .components()
            .iter()
            .fold(0u64, |m, c| m | (1u64 << c.trailing_zeros()));
        let free = g.vertex_mask() & !roots;
        subsets(free).map(PushSet::from_mask)
    }
}

impl fmt::Display for PushSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = bits(self.members).map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// Number of arcs traversed forwards along the closed walk `cycle`
/// (`cycle[i] -> cycle[i+1]`, wrapping). Panics if consecutive vertices are
/// non-adjacent.
pub fn forward_arcs(g: &OrientedGraph, cycle: &[usize]) -> usize {
    let k = cycle.len();
    (0..k)
        .filter(|&i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            assert!(g.adjacent(a, b), "{a} and {b} are not adjacent");
            g.has_arc(a, b)
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> OrientedGraph {
        OrientedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(OrientedGraph::empty(0), Err(Error::VertexCount(0)));
        assert_eq!(OrientedGraph::empty(65), Err(Error::VertexCount(65)));
        assert_eq!(OrientedGraph::from_arcs(2, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            OrientedGraph::from_arcs(2, &[(0, 1), (1, 0)]),
            Err(Error::OppositeArcs(1, 0))
        );
        assert!(matches!(
            OrientedGraph::from_arcs(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(OrientedGraph::empty(64).is_ok());
    }

    #[test]
    fn in_and_out_sets_agree() {
        let g = c3();
        for u in 0..3 {
            for v in bits(g.out_nbrs(u)) {
                assert!(g.in_nbrs(v) & bit(u) != 0);
            }
        }
    }

    #[test]
    fn push_identity_cases() {
        let g = c3();
        assert_eq!(g.push(&PushSet::EMPTY).unwrap(), g);
        let all = PushSet::from_mask(0b111);
        assert_eq!(g.push(&all).unwrap(), g);
        let s = PushSet::from_mask(0b010);
        assert_eq!(g.push(&s).unwrap().push(&s).unwrap(), g);
        assert!(g.push(&PushSet::from_mask(0b1000)).is_err());
    }

    #[test]
    fn single_arc_push_class() {
        let g = OrientedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        let class = g.push_class().unwrap();
        assert_eq!(class.len(), 2);
        assert!(class.contains(&OrientedGraph::from_arcs(2, &[(1, 0)]).unwrap()));
    }

    #[test]
    fn directed_triangle_class_by_brute_force() {
        // Oracle: close the directed triangle under single-vertex pushes.
        let g = c3();
        let mut seen = vec![g.clone()];
        let mut i = 0;
        while i < seen.len() {
            for v in 0..3 {
                let h = seen[i].push_mask(bit(v));
                if !seen.contains(&h) {
                    seen.push(h);
                }
            }
            i += 1;
        }
        assert_eq!(seen.len(), 4);
        let mut class = g.push_class().unwrap();
        class.sort();
        seen.sort();
        assert_eq!(class, seen);
        // pushes keep the forward-arc parity odd, so of the two directed
        // triangles only the original is in the class
        let cyclic = seen
            .iter()
            .filter(|h| forward_arcs(h, &[0, 1, 2]).is_multiple_of(3))
            .count();
        assert_eq!(cyclic, 1);
    }

    #[test]
    fn canonical_push_set_avoids_component_roots() {
        let g = OrientedGraph::from_arcs(4, &[(0, 1), (2, 3)]).unwrap();
        let s = PushSet::from_mask(0b0111).canonical(&g);
        assert_eq!(s.members, 0b1000);
        assert_eq!(g.push(&s).unwrap(), g.push_mask(0b0111));
        assert_eq!(PushSet::canonical_sets(&g).count(), 4);
    }

    #[test]
    fn components_and_edges() {
        let g = OrientedGraph::from_arcs(5, &[(1, 0), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b00100, 0b11000]);
        assert_eq!(g.edges(), vec![(0, 1), (3, 4)]);
        assert_eq!(g.arcs(), vec![(1, 0), (3, 4)]);
        assert!(!g.is_connected());
    }
}
