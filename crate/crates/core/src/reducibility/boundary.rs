//! The generic boundary extension test.
//!
//! A configuration passes for a target `t` when, for every orientation of its
//! edges and every assignment of target vertices to the white vertices that
//! respects white-white arcs, the black vertices can be given images and push
//! flags so that every edge maps to an arc. White vertices are never pushed:
//! their push state is already absorbed by ranging over all orientations.
//!
//! Orientations are taken modulo pushes of black vertices, since the extender
//! may push those anyway. Two routes decide the inner `forall/exists`:
//! a homomorphism search into the anti-twin target per white assignment, and
//! a bottom-up pass over the black forest that avoids enumerating white
//! assignments when every white vertex hangs off a single black vertex.

use std::fmt;

use crate::bits::{bit, bits, subsets};
use crate::error::{Error, Result};
use crate::hom::{anti_twin, orientation, HomSearch};
use crate::par::Exec;
use crate::tournament::Tournament;

use super::data::Configuration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// The forest pass when it applies, otherwise the search.
    #[default]
    Auto,
    Brute,
    Forest,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Auto => "auto",
            Route::Brute => "search",
            Route::Forest => "forest",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub config: String,
    pub holds: bool,
    pub route: Route,
    pub orientations: u64,
    /// Orientations left after quotienting by black pushes.
    pub representatives: u64,
    /// A failing orientation code and, from the search route, the white
    /// images that cannot be extended.
    pub counterexample: Option<(u64, Option<Vec<usize>>)>,
}

struct Setup {
    n: usize,
    whites: usize,
    edges: Vec<(usize, usize)>,
    black: u64,
    reps: Vec<u64>,
}

fn setup(c: &Configuration, t: &Tournament) -> Result<Setup> {
    if c.black.is_empty() {
        return Err(Error::Configuration(format!("{} has no black vertex", c.name)));
    }
    if t.order() > 8 {
        return Err(Error::TooLarge {
            what: "boundary extension target",
            limit: 8,
            n: t.order(),
        });
    }
    let edges = c.edge_indices()?;
    for (i, e) in edges.iter().enumerate() {
        if edges[..i].contains(e) {
            return Err(Error::Configuration(format!("{}: repeated edge", c.name)));
        }
    }
    if edges.len() > 24 {
        return Err(Error::TooLarge {
            what: "boundary extension configuration (edges)",
            limit: 24,
            n: edges.len(),
        });
    }
    let black = c.black_mask();
    let incident = |v: usize| {
        edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .fold(0u64, |m, (i, _)| m | bit(i))
    };
    let flips: Vec<u64> = subsets(black)
        .skip(1)
        .map(|s| bits(s).fold(0, |m, v| m ^ incident(v)))
        .collect();
    let reps = (0..1u64 << edges.len())
        .filter(|&code| flips.iter().all(|&f| code ^ f >= code))
        .collect();
    Ok(Setup {
        n: c.n(),
        whites: c.white.len(),
        edges,
        black,
        reps,
    })
}

fn forest_applies(s: &Setup) -> bool {
    let is_black = |v: usize| s.black & bit(v) != 0;
    if s.edges.iter().any(|&(a, b)| !is_black(a) && !is_black(b)) {
        return false;
    }
    if (0..s.whites).any(|w| s.edges.iter().filter(|&&(a, b)| a == w || b == w).count() != 1) {
        return false;
    }
    // black edges form a forest iff union-find never closes a cycle
    let mut parent: Vec<usize> = (0..s.n).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for &(a, b) in &s.edges {
        if is_black(a) && is_black(b) {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
    }
    true
}

/// Options of a black vertex: `2 * image + pushed`.
fn option_compatible(t: &Tournament, tail_opt: usize, head_opt: usize) -> bool {
    let (x, px) = (tail_opt / 2, tail_opt % 2 == 1);
    let (y, py) = (head_opt / 2, head_opt % 2 == 1);
    if px != py {
        t.has_arc(y, x)
    } else {
        t.has_arc(x, y)
    }
}

fn minimise(mut family: Vec<u64>) -> Vec<u64> {
    family.sort_unstable_by_key(|m| (m.count_ones(), *m));
    family.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for m in family {
        if kept.iter().all(|&k| k & m != k) {
            kept.push(m);
        }
    }
    kept
}

/// Forest pass for one orientation. For each black vertex, the family of
/// inclusion-minimal option sets that survive some white assignment of its
/// subtree; the orientation fails iff some family member is empty.
fn forest_holds(s: &Setup, t: &Tournament, code: u64) -> bool {
    let order = t.order();
    let opts = 2 * order;
    let arcs: Vec<(usize, usize)> = s
        .edges
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| if code & bit(i) == 0 { (a, b) } else { (b, a) })
        .collect();
    let is_black = |v: usize| s.black & bit(v) != 0;
    // masks[o] over partner options compatible with option o across an arc
    let out_compat: Vec<u64> = (0..opts)
        .map(|o| {
            (0..opts)
                .filter(|&p| option_compatible(t, o, p))
                .fold(0, |m, p| m | bit(p))
        })
        .collect();
    let in_compat: Vec<u64> = (0..opts)
        .map(|o| {
            (0..opts)
                .filter(|&p| option_compatible(t, p, o))
                .fold(0, |m, p| m | bit(p))
        })
        .collect();
    // options of a black vertex allowed by a white neighbour fixed at x
    let white_mask = |white_is_tail: bool, x: usize| -> u64 {
        (0..opts)
            .filter(|&o| {
                let (y, pushed) = (o / 2, o % 2 == 1);
                let forward = white_is_tail != pushed;
                if forward {
                    t.has_arc(x, y)
                } else {
                    t.has_arc(y, x)
                }
            })
            .fold(0, |m, o| m | bit(o))
    };

    let mut done = 0u64;
    for r in bits(s.black) {
        if done & bit(r) != 0 {
            continue;
        }
        // DFS order from r over black edges
        let mut order_v = vec![(r, usize::MAX)];
        let mut stack = vec![r];
        done |= bit(r);
        while let Some(v) = stack.pop() {
            for &(a, b) in &arcs {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if is_black(w) && done & bit(w) == 0 {
                    done |= bit(w);
                    order_v.push((w, v));
                    stack.push(w);
                }
            }
        }
        let mut fam: Vec<Option<Vec<u64>>> = vec![None; s.n];
        for &(v, _) in order_v.iter().rev() {
            let mut f = vec![(1u64 << opts) - 1];
            for &(a, b) in &arcs {
                let white_is_tail = if b == v && !is_black(a) {
                    true
                } else if a == v && !is_black(b) {
                    false
                } else {
                    continue;
                };
                let choices: Vec<u64> = (0..order).map(|x| white_mask(white_is_tail, x)).collect();
                f = minimise(f.iter().flat_map(|&m| choices.iter().map(move |&c| m & c)).collect());
            }
            for &(a, b) in &arcs {
                let (child, child_is_tail) = if a == v && is_black(b) {
                    (b, false)
                } else if b == v && is_black(a) {
                    (a, true)
                } else {
                    continue;
                };
                let Some(cf) = fam[child].take() else { continue };
                let compat = if child_is_tail { &in_compat } else { &out_compat };
                let supports: Vec<u64> = cf
                    .iter()
                    .map(|&rc| (0..opts).filter(|&o| compat[o] & rc != 0).fold(0, |m, o| m | bit(o)))
                    .collect();
                f = minimise(f.iter().flat_map(|&m| supports.iter().map(move |&sp| m & sp)).collect());
            }
            if f.first() == Some(&0) {
                return false;
            }
            fam[v] = Some(f);
        }
    }
    true
}

/// Search route for one orientation: the first white assignment with no
/// extension, if any.
fn brute_counterexample(
    s: &Setup,
    c_at: &crate::graph::OrientedGraph,
    t: &Tournament,
    code: u64,
) -> Option<Vec<usize>> {
    let g = orientation(s.n, &s.edges, code);
    let order = t.order();
    let mut assign = vec![0usize; s.whites];
    let total = order.pow(s.whites as u32);
    for idx in 0..total {
        let mut k = idx;
        for a in assign.iter_mut() {
            *a = k % order;
            k /= order;
        }
        let consistent = g
            .arcs()
            .iter()
            .all(|&(u, v)| u >= s.whites || v >= s.whites || t.has_arc(assign[u], assign[v]));
        if !consistent {
            continue;
        }
        let search = (0..s.whites).fold(HomSearch::new(&g, c_at), |h, w| h.restrict(w, bit(assign[w])));
        if search.first().is_none() {
            return Some(assign);
        }
    }
    None
}

pub fn boundary_extension_report(
    c: &Configuration,
    t: &Tournament,
    route: Route,
    exec: Exec,
) -> Result<BoundaryReport> {
    let s = setup(c, t)?;
    let route = match route {
        Route::Auto if forest_applies(&s) => Route::Forest,
        Route::Auto => Route::Brute,
        Route::Forest if !forest_applies(&s) => {
            return Err(Error::Configuration(format!(
                "{}: the forest route needs a black forest with one black neighbour per white vertex",
                c.name
            )))
        }
        r => r,
    };
    let at = anti_twin(t.graph())?;
    let counterexample = exec.find_first(s.reps.len(), |i| {
        let code = s.reps[i];
        match route {
            Route::Forest => (!forest_holds(&s, t, code)).then_some((code, None)),
            _ => brute_counterexample(&s, &at, t, code).map(|a| (code, Some(a))),
        }
    });
    Ok(BoundaryReport {
        config: c.name.clone(),
        holds: counterexample.is_none(),
        route,
        orientations: 1 << s.edges.len(),
        representatives: s.reps.len() as u64,
        counterexample,
    })
}

/// True iff every orientation and white assignment extends (see the module
/// notes for the exact, conservative notion).
pub fn boundary_extension_check(c: &Configuration, t: &Tournament) -> Result<bool> {
    boundary_extension_report(c, t, Route::Auto, Exec::default()).map(|r| r.holds)
}
