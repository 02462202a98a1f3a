//! Homomorphism search, pushable homomorphisms and exact chromatic numbers.

use std::fmt;

use crate::bits::{bit, bits};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, PushSet};
use crate::par::Exec;
use crate::tournament::{enumerate_tournaments, Tournament};

/// Partial vertex assignment `G -> H`, with optional push flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialMap {
    pub image: Vec<Option<usize>>,
    pub pushed: Vec<Option<bool>>,
}

impl PartialMap {
    pub fn new(n: usize) -> Self {
        Self {
            image: vec![None; n],
            pushed: vec![None; n],
        }
    }

    pub fn total(images: &[usize]) -> Self {
        Self {
            image: images.iter().map(|&x| Some(x)).collect(),
            pushed: vec![Some(false); images.len()],
        }
    }

    pub fn is_total(&self) -> bool {
        self.image.iter().all(Option::is_some)
    }

    /// Every arc of `g` (pushed at flagged vertices) whose endpoints are both
    /// assigned maps onto an arc of `h`.
    pub fn is_consistent(&self, g: &OrientedGraph, h: &OrientedGraph) -> bool {
        g.arcs().into_iter().all(|(u, v)| match (self.image[u], self.image[v]) {
            (Some(x), Some(y)) => {
                let flip = self.pushed[u].unwrap_or(false) != self.pushed[v].unwrap_or(false);
                if flip {
                    h.has_arc(y, x)
                } else {
                    h.has_arc(x, y)
                }
            }
            _ => true,
        })
    }
}

/// Checks that `map` is a homomorphism `g -> h`.
pub fn is_hom(g: &OrientedGraph, h: &OrientedGraph, map: &[usize]) -> bool {
    map.len() == g.n() && map.iter().all(|&x| x < h.n()) && g.arcs().into_iter().all(|(u, v)| h.has_arc(map[u], map[v]))
}

/// Search order: lowest unvisited vertex, then repeatedly the lowest vertex
/// adjacent to the visited set.
pub fn search_order(g: &OrientedGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut done = 0u64;
    let all = g.vertex_mask();
    while done != all {
        let frontier = order.iter().fold(0u64, |m, &v| m | g.nbrs(v)) & !done;
        let next = if frontier != 0 { frontier } else { all & !done };
        let v = next.trailing_zeros() as usize;
        order.push(v);
        done |= bit(v);
    }
    order
}

/// Backtracking homomorphism search with forward checking on candidate sets.
pub struct HomSearch<'a> {
    g: &'a OrientedGraph,
    h: &'a OrientedGraph,
    order: Vec<usize>,
    domains: Vec<u64>,
}

impl<'a> HomSearch<'a> {
    pub fn new(g: &'a OrientedGraph, h: &'a OrientedGraph) -> Self {
        Self {
            g,
            h,
            order: search_order(g),
            domains: vec![h.vertex_mask(); g.n()],
        }
    }

    /// Restricts the images allowed for `v`.
    pub fn restrict(mut self, v: usize, allowed: u64) -> Self {
        self.domains[v] &= allowed;
        self
    }

    /// First homomorphism in the deterministic search order.
    pub fn first(&self) -> Option<Vec<usize>> {
        let mut found = None;
        self.run(&mut |m| {
            found = Some(m.to_vec());
            false
        });
        found
    }

    /// Calls `f` on each homomorphism until it returns false. Returns false
    /// if stopped early.
    pub fn run(&self, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.n();
        if self.domains.contains(&0) {
            return true;
        }
        let mut map = vec![usize::MAX; n];
        let mut doms = self.domains.clone();
        self.rec(0, &mut doms, &mut map, f)
    }

    fn rec(&self, depth: usize, doms: &mut Vec<u64>, map: &mut [usize], f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return f(map);
        }
        let v = self.order[depth];
        let assigned = self.order[..depth].iter().fold(0u64, |m, &u| m | bit(u));
        let open = self.g.nbrs(v) & !assigned;
        for x in bits(doms[v]) {
            let saved: Vec<(usize, u64)> = bits(open).map(|w| (w, doms[w])).collect();
            let mut dead = false;
            for w in bits(open) {
                let allowed = if self.g.has_arc(v, w) {
                    self.h.out_nbrs(x)
                } else {
                    self.h.in_nbrs(x)
                };
                doms[w] &= allowed;
                if doms[w] == 0 {
                    dead = true;
                    break;
                }
            }
            if !dead {
                map[v] = x;
                if !self.rec(depth + 1, doms, map, f) {
                    return false;
                }
            }
            for (w, d) in saved {
                doms[w] = d;
            }
        }
        map[v] = usize::MAX;
        true
    }
}

/// A homomorphism `g -> h`, if any.
pub fn find_hom(g: &OrientedGraph, h: &OrientedGraph) -> Option<Vec<usize>> {
    HomSearch::new(g, h).first()
}

/// The anti-twin target: vertex `(u, layer)` is `u + layer * n`. Same-layer
/// arcs copy `h`, cross-layer arcs are reversed.
pub fn anti_twin(h: &OrientedGraph) -> Result<OrientedGraph> {
    let n = h.n();
    if 2 * n > 64 {
        return Err(Error::TooLarge {
            what: "anti-twin target",
            limit: 32,
            n,
        });
    }
    let mut out = vec![0u64; 2 * n];
    for u in 0..n {
        out[u] = h.out_nbrs(u) | (h.in_nbrs(u) << n);
        out[u + n] = (h.out_nbrs(u) << n) | h.in_nbrs(u);
    }
    OrientedGraph::from_out_masks(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Naive,
    #[default]
    AntiTwin,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Naive => "naive",
            Strategy::AntiTwin => "anti-twin",
        })
    }
}

/// A push set of the source and a homomorphism from the pushed graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PushableHom {
    pub push: PushSet,
    pub map: Vec<usize>,
}

impl PushableHom {
    pub fn verify(&self, g: &OrientedGraph, h: &OrientedGraph) -> bool {
        match g.push(&self.push) {
            Ok(pushed) => is_hom(&pushed, h, &self.map),
            Err(_) => false,
        }
    }

    pub fn as_partial_map(&self) -> PartialMap {
        PartialMap {
            image: self.map.iter().map(|&x| Some(x)).collect(),
            pushed: (0..self.map.len()).map(|v| Some(self.push.contains(v))).collect(),
        }
    }
}

pub const NAIVE_LIMIT: usize = 24;

/// Decides whether some member of `[g]` maps to `h`; the witness is verified
/// before it is returned.
pub fn exists_pushable_hom(g: &OrientedGraph, h: &OrientedGraph, strategy: Strategy) -> Result<Option<PushableHom>> {
    let w = match strategy {
        Strategy::Naive => {
            if g.n() > NAIVE_LIMIT {
                return Err(Error::TooLarge {
                    what: "naive pushable search",
                    limit: NAIVE_LIMIT,
                    n: g.n(),
                });
            }
            PushSet::canonical_sets(g).find_map(|s| {
                let pushed = g.push_mask(s.members);
                find_hom(&pushed, h).map(|map| PushableHom { push: s, map })
            })
        }
        Strategy::AntiTwin => {
            let at = anti_twin(h)?;
            find_hom(g, &at).map(|m| anti_twin_witness(g, h.n(), &m))
        }
    };
    if let Some(w) = &w {
        if !w.verify(g, h) {
            return Err(Error::Certificate(format!(
                "{strategy} search returned an invalid witness"
            )));
        }
    }
    Ok(w)
}

/// Decodes a homomorphism into the anti-twin target of an `n`-vertex graph.
pub fn anti_twin_witness(g: &OrientedGraph, n: usize, m: &[usize]) -> PushableHom {
    let members = (0..g.n()).filter(|&v| m[v] >= n).fold(0u64, |s, v| s | bit(v));
    PushableHom {
        push: PushSet::from_mask(members),
        map: m.iter().map(|&x| x % n).collect(),
    }
}

/// Tournament on the same vertices with each non-adjacent pair `i < j`
/// completed as `i -> j`; the identity maps `g` into it.
pub fn completion(g: &OrientedGraph) -> Tournament {
    let mut arcs = g.arcs();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if !g.adjacent(i, j) {
                arcs.push((i, j));
            }
        }
    }
    Tournament::new(OrientedGraph::from_arcs(g.n(), &arcs).expect("completion is oriented")).expect("complete")
}

/// Where a chromatic number was attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiWitness {
    pub value: usize,
    /// Index into `enumerate_tournaments(value)`, or `None` when the target
    /// is the completion of the input itself.
    pub class_index: Option<usize>,
    pub target: Tournament,
    pub hom: PushableHom,
}

/// Largest tournament order searched by the chromatic number routines.
pub const MAX_TARGET_ORDER: usize = 7;

fn chi_search(
    g: &OrientedGraph,
    exec: Exec,
    test: impl Fn(&Tournament) -> Result<Option<PushableHom>> + Sync + Send,
) -> Result<ChiWitness> {
    let top = g.n().min(MAX_TARGET_ORDER);
    for k in 1..=top {
        let classes = enumerate_tournaments(k, false)?;
        let hit = exec.find_first(classes.len(), |i| match test(&classes[i]) {
            Ok(Some(w)) => Some(Ok((i, w))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        });
        if let Some(r) = hit {
            let (i, hom) = r?;
            return Ok(ChiWitness {
                value: k,
                class_index: Some(i),
                target: classes[i].clone(),
                hom,
            });
        }
    }
    if g.n() == MAX_TARGET_ORDER + 1 {
        return Ok(ChiWitness {
            value: g.n(),
            class_index: None,
            target: completion(g),
            hom: PushableHom {
                push: PushSet::EMPTY,
                map: (0..g.n()).collect(),
            },
        });
    }
    Err(Error::ExceedsEnumerationRange {
        max_order: MAX_TARGET_ORDER,
    })
}

/// Oriented chromatic number, with the target and homomorphism attaining it.
pub fn chi_o_with(g: &OrientedGraph, exec: Exec) -> Result<ChiWitness> {
    chi_search(g, exec, |t| {
        Ok(find_hom(g, t.graph()).map(|map| PushableHom {
            push: PushSet::EMPTY,
            map,
        }))
    })
}

/// Pushable chromatic number, with the target and pushable homomorphism.
pub fn chi_p_with(g: &OrientedGraph, exec: Exec, strategy: Strategy) -> Result<ChiWitness> {
    chi_search(g, exec, |t| exists_pushable_hom(g, t.graph(), strategy))
}

pub fn chi_o(g: &OrientedGraph) -> Result<usize> {
    Ok(chi_o_with(g, Exec::default())?.value)
}

pub fn chi_p(g: &OrientedGraph) -> Result<usize> {
    Ok(chi_p_with(g, Exec::default(), Strategy::AntiTwin)?.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sandwich {
    pub chi_p: usize,
    pub chi_o: usize,
}

impl Sandwich {
    pub fn ok(&self) -> bool {
        self.chi_p <= self.chi_o && self.chi_o <= 2 * self.chi_p
    }
}

pub fn sandwich_check_with(g: &OrientedGraph, exec: Exec) -> Result<Sandwich> {
    Ok(Sandwich {
        chi_p: chi_p_with(g, exec, Strategy::AntiTwin)?.value,
        chi_o: chi_o_with(g, exec)?.value,
    })
}

pub fn sandwich_check(g: &OrientedGraph) -> Result<Sandwich> {
    sandwich_check_with(g, Exec::default())
}

/// The orientation of `edges` selected by `code`: bit `i` set reverses edge
/// `i` relative to `(min, max)`.
pub fn orientation(n: usize, edges: &[(usize, usize)], code: u64) -> OrientedGraph {
    let arcs: Vec<_> = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if code & bit(i) == 0 { (u, v) } else { (v, u) })
        .collect();
    OrientedGraph::from_arcs(n, &arcs).expect("edges of a simple graph")
}

/// Number of orientations `2^|E|`, for up to 63 edges.
pub fn orientation_count(edges: &[(usize, usize)]) -> u64 {
    1u64 << edges.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin;
    use crate::tournament::paley;

    fn path(n: usize) -> OrientedGraph {
        let arcs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        OrientedGraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn triangle_into_paley() {
        let c3 = builtin("c3").unwrap();
        let pal = paley(7).unwrap();
        let m = find_hom(&c3, pal.graph()).unwrap();
        assert!(is_hom(&c3, pal.graph(), &m));
        assert_eq!(find_hom(&c3, &c3), Some(vec![0, 1, 2]));
    }

    #[test]
    fn no_hom_to_a_single_vertex() {
        let one = OrientedGraph::empty(1).unwrap();
        assert!(find_hom(&path(3), &one).is_none());
    }

    #[test]
    fn anti_twin_shape() {
        let one = OrientedGraph::empty(1).unwrap();
        let at = anti_twin(&one).unwrap();
        assert_eq!((at.n(), at.arc_count()), (2, 0));
        let pal = builtin("pal7").unwrap();
        let at = anti_twin(&pal).unwrap();
        assert_eq!(at.n(), 14);
        assert!(at.has_arc(0, 1) && at.has_arc(7, 8) && at.has_arc(1, 7));
        assert!(!at.adjacent(3, 10));
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chi_o(&path(2)).unwrap(), 2);
        assert_eq!(chi_o(&builtin("c3").unwrap()).unwrap(), 3);
        assert_eq!(chi_p(&builtin("c3").unwrap()).unwrap(), 3);
        assert_eq!(chi_p(&path(5)).unwrap(), 2);
        let one = OrientedGraph::empty(1).unwrap();
        let s = sandwich_check(&one).unwrap();
        assert_eq!((s.chi_p, s.chi_o, s.ok()), (1, 1, true));
    }

    #[test]
    fn strategies_agree_on_named_graphs() {
        for name in ["fig2i", "fig2ii", "t3", "k4", "c3"] {
            let g = builtin(name).unwrap();
            for k in 1..=4 {
                for t in enumerate_tournaments(k, false).unwrap() {
                    let a = exists_pushable_hom(&g, t.graph(), Strategy::Naive).unwrap();
                    let b = exists_pushable_hom(&g, t.graph(), Strategy::AntiTwin).unwrap();
                    assert_eq!(a.is_some(), b.is_some(), "{name} vs {t:?}");
                }
            }
        }
    }

    #[test]
    fn order_eight_uses_the_completion() {
        // transitive tournament on 8 vertices needs 8 colours
        let arcs: Vec<_> = (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).collect();
        let g = OrientedGraph::from_arcs(8, &arcs).unwrap();
        let w = chi_o_with(&g, Exec::Sequential).unwrap();
        assert_eq!((w.value, w.class_index), (8, None));
    }
}
