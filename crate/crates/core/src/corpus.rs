//! Seeded random corpora and the property runners behind them.
//!
//! Instance `i` of a corpus draws from `ChaCha8Rng::seed_from_u64(seed)` on
//! stream `i`, so every instance is reproducible on its own and results do
//! not depend on how work is split between threads.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{greedy_push_hom, regular_patch};
use crate::configs::find_configuration;
use crate::discharge::discharge_run;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::hom::{exists_pushable_hom, sandwich_check_with, Strategy};
use crate::io::{builtin, write_arc_list, BUILTIN_NAMES};
use crate::mad::mad;
use crate::par::Exec;
use crate::rational::Rational;
use crate::tournament::{enumerate_tournaments, paley};

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn orient(rng: &mut impl Rng, n: usize, edges: &[(usize, usize)]) -> OrientedGraph {
    let arcs: Vec<_> = edges
        .iter()
        .map(|&(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
        .collect();
    OrientedGraph::from_arcs(n, &arcs).expect("simple edge list")
}

/// A random spanning tree plus each remaining pair with probability `p`,
/// randomly oriented.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> OrientedGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    orient(rng, n, &edges)
}

/// Each pair independently with probability `p`; may be disconnected.
pub fn random_oriented(rng: &mut impl Rng, n: usize, p: f64) -> OrientedGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    orient(rng, n, &edges)
}

/// Connected, maximum degree 3, 2-degenerate: each new vertex attaches to
/// one or two earlier vertices of degree below 3.
pub fn random_subcubic_2_degenerate(rng: &mut impl Rng, n: usize) -> OrientedGraph {
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let mut open: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
        open.shuffle(rng);
        let want = if open.len() >= 2 && rng.gen_bool(0.6) { 2 } else { 1 };
        for &u in open.iter().take(want) {
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    orient(rng, n, &edges)
}

/// A connected cubic graph on `n` vertices (`n` even, at least 4), by
/// rejection sampling random stub pairings.
pub fn random_cubic(rng: &mut impl Rng, n: usize) -> OrientedGraph {
    assert!(
        n >= 4 && n.is_multiple_of(2),
        "cubic graphs need an even order of at least 4"
    );
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        let simple = edges.iter().all(|&(u, v)| u != v) && {
            edges.sort_unstable();
            edges.windows(2).all(|w| w[0] != w[1])
        };
        if !simple {
            continue;
        }
        let g = orient(rng, n, &edges);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random graph with `mad < 3`, by rejection over sparse random graphs.
pub fn random_sparse_mad_below_3(rng: &mut impl Rng) -> OrientedGraph {
    loop {
        let n = rng.gen_range(1..=14);
        let m = rng.gen_range(0..=(3 * n) / 2);
        let mut edges = Vec::new();
        for _ in 0..m {
            if n < 2 {
                break;
            }
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let e = (u.min(v), u.max(v));
            if u != v && !edges.contains(&e) {
                edges.push(e);
            }
        }
        let g = orient(rng, n, &edges);
        if mad(&g) < Rational::integer(3) {
            return g;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CorpusKind {
    Sandwich,
    StrategyAgreement,
    Greedy,
    CubicPatch,
    MadCover,
    CubicPal7,
}

impl CorpusKind {
    pub const ALL: [CorpusKind; 6] = [
        CorpusKind::Sandwich,
        CorpusKind::StrategyAgreement,
        CorpusKind::Greedy,
        CorpusKind::CubicPatch,
        CorpusKind::MadCover,
        CorpusKind::CubicPal7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorpusKind::Sandwich => "sandwich",
            CorpusKind::StrategyAgreement => "strategy-agreement",
            CorpusKind::Greedy => "greedy",
            CorpusKind::CubicPatch => "cubic-patch",
            CorpusKind::MadCover => "mad-cover",
            CorpusKind::CubicPal7 => "cubic-pal7",
        }
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorpusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CorpusKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown corpus kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub detail: String,
    /// The offending input in arc-list form.
    pub dump: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusReport {
    pub kind: CorpusKind,
    pub count: usize,
    pub seed: u64,
    pub violations: Vec<Violation>,
}

impl CorpusReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Generates the instance and checks it; `Some(detail, graph)` on violation.
fn run_one(kind: CorpusKind, seed: u64, index: usize) -> Option<(String, OrientedGraph)> {
    let mut rng = instance_rng(seed, index as u64);
    let pal = paley(7).expect("Pal7");
    let fail = |msg: String, g: &OrientedGraph| Some((msg, g.clone()));
    match kind {
        CorpusKind::Sandwich => {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.9);
            let g = random_connected(&mut rng, n, p);
            match sandwich_check_with(&g, Exec::Sequential) {
                Ok(s) if s.ok() => None,
                Ok(s) => fail(format!("chi_p = {}, chi_o = {}", s.chi_p, s.chi_o), &g),
                Err(e) => fail(e.to_string(), &g),
            }
        }
        CorpusKind::StrategyAgreement => {
            let (ng, nh) = (rng.gen_range(1..=7), rng.gen_range(1..=5));
            let (pg, ph) = (rng.gen_range(0.2..0.9), rng.gen_range(0.3..1.0));
            let g = random_oriented(&mut rng, ng, pg);
            let h = random_oriented(&mut rng, nh, ph);
            let a = exists_pushable_hom(&g, &h, Strategy::Naive).map(|w| w.is_some());
            let b = exists_pushable_hom(&g, &h, Strategy::AntiTwin).map(|w| w.is_some());
            match (a, b) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => fail(
                    format!("naive {a:?}, anti-twin {b:?}; target:\n{}", write_arc_list(&h)),
                    &g,
                ),
            }
        }
        CorpusKind::Greedy => {
            let n = rng.gen_range(2..=14);
            let g = random_subcubic_2_degenerate(&mut rng, n);
            match greedy_push_hom(&g, &pal, 3) {
                Ok(r) if r.witness.verify(&g, pal.graph()) => None,
                Ok(_) => fail("witness does not verify".into(), &g),
                Err(e) => fail(e.to_string(), &g),
            }
        }
        CorpusKind::CubicPatch => {
            let n = 2 * rng.gen_range(2..=6);
            let g = random_cubic(&mut rng, n);
            match regular_patch(&g, &pal, 3) {
                Ok(r) if r.target.n() == 9 && r.witness.verify(&g, &r.target) => None,
                Ok(_) => fail("patched witness does not verify".into(), &g),
                Err(e) => fail(e.to_string(), &g),
            }
        }
        CorpusKind::MadCover => {
            let g = random_sparse_mad_below_3(&mut rng);
            if !discharge_run(&g).conserved() {
                return fail("discharging changed the total charge".into(), &g);
            }
            match find_configuration(&g) {
                Some(_) => None,
                None => fail(format!("mad = {} but no configuration found", mad(&g)), &g),
            }
        }
        CorpusKind::CubicPal7 => {
            let n = 2 * rng.gen_range(2..=6);
            let g = random_cubic(&mut rng, n);
            match exists_pushable_hom(&g, pal.graph(), Strategy::AntiTwin) {
                Ok(Some(w)) if w.verify(&g, pal.graph()) => None,
                Ok(_) => fail("no pushable homomorphism to Pal7".into(), &g),
                Err(e) => fail(e.to_string(), &g),
            }
        }
    }
}

pub fn run_corpus(kind: CorpusKind, count: usize, seed: u64, exec: Exec) -> Result<CorpusReport> {
    if count == 0 {
        return Err(Error::InvalidArgument("corpus count must be at least 1".into()));
    }
    let results = exec.map_range(count, |i| run_one(kind, seed, i));
    let violations = results
        .into_iter()
        .enumerate()
        .filter_map(|(index, r)| {
            r.map(|(detail, g)| Violation {
                index,
                detail,
                dump: write_arc_list(&g),
            })
        })
        .collect();
    Ok(CorpusReport {
        kind,
        count,
        seed,
        violations,
    })
}

/// Graph name, target order and target class index of a disagreement.
pub type Disagreement = (String, usize, usize);

/// Naive and anti-twin deciders on every builtin graph against every
/// tournament of order at most 5. Returns the number of pairs and the
/// disagreements.
pub fn named_strategy_agreement(exec: Exec) -> Result<(usize, Vec<Disagreement>)> {
    let mut pairs = Vec::new();
    for name in BUILTIN_NAMES {
        for order in 1..=5 {
            for i in 0..enumerate_tournaments(order, false)?.len() {
                pairs.push((*name, order, i));
            }
        }
    }
    let results = exec.map_slice(&pairs, |&(name, order, i)| -> Result<bool> {
        let g = builtin(name)?;
        let t = &enumerate_tournaments(order, false)?[i];
        let a = exists_pushable_hom(&g, t.graph(), Strategy::Naive)?.is_some();
        let b = exists_pushable_hom(&g, t.graph(), Strategy::AntiTwin)?.is_some();
        Ok(a == b)
    });
    let mut bad = Vec::new();
    for (&(name, order, i), r) in pairs.iter().zip(results) {
        if !r? {
            bad.push((name.to_string(), order, i));
        }
    }
    Ok((pairs.len(), bad))
}
