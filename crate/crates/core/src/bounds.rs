//! The large-degree bound machinery at desk scale: the probabilistic
//! threshold, the greedy degeneracy-order algorithm and the regular patch.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::bits::{bit, bits};
use crate::degeneracy::{degeneracy_order, degeneracy_order_with_last, is_degeneracy_order};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, PushSet};
use crate::hom::PushableHom;
use crate::tournament::{ft, has_property, PropertySpec, Tournament};

/// Per-factor log margin below which the sign of the bound is not trusted.
pub const LOG_MARGIN: f64 = 1e-4;

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub t: u64,
    /// `2 ln(t-3) + 2 ln(t-1) + 2(t-1) ln 2 - 2(t-3)`.
    pub log_per_factor: f64,
    /// Natural log of the final bound on the bad-event probability.
    pub log_bad_event_bound: f64,
    /// `(t-3)(t-1) 2^(t-1)`.
    pub order_c: BigUint,
    pub feasible: bool,
    /// Whether `|log_per_factor|` clears [`LOG_MARGIN`].
    pub margin_ok: bool,
}

pub fn order_c(t: u64) -> BigUint {
    BigUint::from((t - 3) * (t - 1)) << (t - 1)
}

/// Evaluates the final form of the bound in log space.
pub fn eval_bound(t: u64) -> Result<BoundReport> {
    if t < 5 {
        return Err(Error::InvalidArgument(format!("the bound needs t >= 5, got {t}")));
    }
    let tf = t as f64;
    let per = 2.0 * (tf - 3.0).ln() + 2.0 * (tf - 1.0).ln() + 2.0 * (tf - 1.0) * 2f64.ln() - 2.0 * (tf - 3.0);
    let log = (tf - 1.0) * per;
    Ok(BoundReport {
        t,
        log_per_factor: per,
        log_bad_event_bound: log,
        order_c: order_c(t),
        feasible: log < 0.0,
        margin_ok: per.abs() > LOG_MARGIN,
    })
}

/// First `t` in the range where feasibility is lost again, if any.
pub fn monotonicity_violation(range: std::ops::RangeInclusive<u64>) -> Result<Option<u64>> {
    let mut prev: Option<BoundReport> = None;
    for t in range {
        let r = eval_bound(t)?;
        if let Some(p) = &prev {
            if p.feasible && (!r.feasible || r.log_bad_event_bound > p.log_bad_event_bound) {
                return Ok(Some(t));
            }
        }
        prev = Some(r);
    }
    Ok(None)
}

fn ln_fact(k: u64) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

fn ln_binom(n: f64, k: u64) -> f64 {
    (0..k).map(|i| (n - i as f64).ln() - ((i + 1) as f64).ln()).sum()
}

fn log_sum_exp(xs: impl Iterator<Item = f64>) -> f64 {
    let xs: Vec<f64> = xs.collect();
    let m = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    m + xs.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Less,
    LessOrEqual,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    pub t: u64,
    /// Each stage with its natural log.
    pub stages: Vec<(&'static str, f64)>,
    /// Relation between consecutive stages, as used in the chain.
    pub relations: Vec<Relation>,
    pub failures: Vec<String>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates every stage of the single-event and union bounds in log space
/// and checks that consecutive stages are ordered as claimed. Only for
/// `5 <= t <= 20`, where the sums are small enough to evaluate term by term.
pub fn check_bound_chain(t: u64) -> Result<ChainReport> {
    if !(5..=20).contains(&t) {
        return Err(Error::InvalidArgument(format!(
            "the chain check covers 5..=20, got {t}"
        )));
    }
    let tf = t as f64;
    let ln2 = 2f64.ln();
    let c = ((t - 3) * (t - 1)) as f64 * 2f64.powi(t as i32 - 1);
    let lc = c.ln();
    let q = 2f64.powi(-(t as i32 - 2));
    let l1m = (-q).ln_1p();
    let big = 2f64.powi(t as i32 - 2);
    let lbig_m1 = (big - 1.0).ln();
    let e = -c * q;
    let is = || 0..=t - 2;

    let s1 = log_sum_exp(is().map(|i| {
        let fi = i as f64;
        ln_binom(c - (tf - 1.0), i) - fi * (tf - 2.0) * ln2 + (c - fi - (tf - 1.0)) * l1m
    }));
    let s2 = c * l1m
        + log_sum_exp(is().map(|i| {
            let fi = i as f64;
            fi * lc - ln_fact(i) - fi * (tf - 2.0) * ln2 + (fi + tf - 1.0) * (big.ln() - lbig_m1)
        }));
    let s3 = e + log_sum_exp(is().map(|i| {
        let fi = i as f64;
        fi * lc + (tf - 2.0) * (tf - 1.0) * ln2 - (fi + tf - 1.0) * lbig_m1
    }));
    let s4 = e + (tf - 2.0) * (tf - 1.0) * ln2 - (tf - 1.0) * lbig_m1 + log_sum_exp(is().map(|i| i as f64 * lc));
    let s5 = ln2 + e + (tf - 1.0) * lc + (-(-(tf - 1.0) * lc).exp()).ln_1p() - (c - 1.0).ln();
    let s6 = e + (tf - 1.0) * lc;
    let b1 = ln_binom(c, t - 1) + (tf - 2.0) * ln2 + s6;
    let b2 = (tf - 1.0) * lc - ln_fact(t - 1) + (tf - 2.0) * ln2 + s6;
    let b3 = (tf - 2.0) * ln2 - ln_fact(t - 1) + e + 2.0 * (tf - 1.0) * lc;
    let b4 = e + 2.0 * (tf - 1.0) * lc;
    let b5 = eval_bound(t)?.log_bad_event_bound;

    use Relation::*;
    let stages = vec![
        ("single: exact sum", s1),
        ("single: factored", s2),
        ("single: exponential", s3),
        ("single: geometric", s4),
        ("single: closed form", s5),
        ("single: c^(t-1)", s6),
        ("union: binomial", b1),
        ("union: power", b2),
        ("union: merged", b3),
        ("union: dropped factorial", b4),
        ("union: final form", b5),
    ];
    // the union bound starts afresh from the single-event result
    let relations = vec![
        LessOrEqual,
        Less,
        LessOrEqual,
        Less,
        LessOrEqual,
        LessOrEqual,
        Less,
        LessOrEqual,
        Less,
        LessOrEqual,
    ];
    let mut failures = Vec::new();
    for (k, rel) in relations.iter().enumerate() {
        if k == 5 {
            continue;
        }
        let (na, a) = stages[k];
        let (nb, b) = stages[k + 1];
        let tol = 1e-9 * b.abs().max(1.0);
        let ok = match rel {
            Less => a < b,
            LessOrEqual => a <= b + tol,
        };
        if !ok {
            failures.push(format!("t={t}: {na} ({a:.6}) vs {nb} ({b:.6})"));
        }
    }
    Ok(ChainReport {
        t,
        stages,
        relations,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub vertex: usize,
    pub earlier: usize,
    pub later: usize,
    pub candidates: usize,
    pub blocked: usize,
    pub image: usize,
    pub pushed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyRun {
    pub order: Vec<usize>,
    pub steps: Vec<GreedyStep>,
    pub witness: PushableHom,
}

fn greedy_preconditions(g: &OrientedGraph, t: &Tournament, delta: usize) -> Result<()> {
    if delta < 2 {
        return Err(Error::Precondition(format!("delta must be at least 2, got {delta}")));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("the graph is not connected".into()));
    }
    if g.max_degree() > delta {
        return Err(Error::Precondition(format!(
            "maximum degree {} exceeds delta {delta}",
            g.max_degree()
        )));
    }
    let f0 = ft(delta as u64, 0)? as usize;
    if t.order() < f0 {
        return Err(Error::Precondition(format!(
            "the target has {} vertices, fewer than f(0) = {f0}",
            t.order()
        )));
    }
    for j in 1..delta {
        let k = ft(delta as u64, j as u64)? as usize;
        let p = PropertySpec::new(j, k);
        if j >= t.order() || !has_property(t, p)? {
            return Err(Error::Precondition(format!("the target lacks {p}")));
        }
    }
    Ok(())
}

/// Runs the greedy extension along a `(delta-1)`-degeneracy order, after
/// checking every precondition against `t`.
pub fn greedy_push_hom(g: &OrientedGraph, t: &Tournament, delta: usize) -> Result<GreedyRun> {
    greedy_preconditions(g, t, delta)?;
    let order = degeneracy_order(g, delta - 1)
        .ok_or_else(|| Error::Precondition(format!("the graph is not {}-degenerate", delta - 1)))?;
    greedy_along(g, t, delta, order)
}

fn greedy_along(g: &OrientedGraph, t: &Tournament, delta: usize, order: Vec<usize>) -> Result<GreedyRun> {
    let n = g.n();
    let h = t.graph();
    let mut image = vec![usize::MAX; n];
    let mut pushed = vec![false; n];
    let mut placed = 0u64;
    let mut steps = Vec::with_capacity(n);
    for (l, &v) in order.iter().enumerate() {
        let earlier = g.nbrs(v) & placed;
        let later = g.nbrs(v) & !placed & !bit(v);
        // candidates with v unpushed / pushed
        let mut d0 = h.vertex_mask();
        let mut d1 = h.vertex_mask();
        for w in bits(earlier) {
            let y = image[w];
            let v_to_w = g.has_arc(v, w) != pushed[w];
            let (fwd, back) = (h.in_nbrs(y), h.out_nbrs(y));
            if v_to_w {
                d0 &= fwd;
                d1 &= back;
            } else {
                d0 &= back;
                d1 &= fwd;
            }
        }
        let d = d0 | d1;
        let blockers = bits(placed).filter(|&b| g.nbrs(b) & later != 0);
        let blocked_images = blockers.clone().fold(0u64, |m, b| m | bit(image[b]));
        let b_size = blockers.count();
        let (a_prime, a) = (earlier.count_ones() as u64, later.count_ones() as u64);
        let f = ft(delta as u64, a_prime)?;
        assert!(
            d.count_ones() as u64 >= f,
            "candidate count below f(|A'|) at vertex {v}"
        );
        assert!(
            f > (delta as u64 - 2) * a,
            "f(|A'|) does not exceed (delta-2)|A| at vertex {v}"
        );
        assert!(
            (delta as u64 - 2) * a >= b_size as u64,
            "|B| exceeds (delta-2)|A| at vertex {v}"
        );
        let free = d & !blocked_images;
        if free == 0 {
            return Err(Error::GreedyStuck { vertex: v });
        }
        let x = free.trailing_zeros() as usize;
        image[v] = x;
        pushed[v] = d0 & bit(x) == 0;
        placed |= bit(v);
        for &u in &order[l + 1..] {
            let mut seen = 0u64;
            for w in bits(g.nbrs(u) & placed) {
                assert!(
                    seen & bit(image[w]) == 0,
                    "neighbours of {u} share image {} after step {l}",
                    image[w]
                );
                seen |= bit(image[w]);
            }
        }
        steps.push(GreedyStep {
            vertex: v,
            earlier: a_prime as usize,
            later: a as usize,
            candidates: d.count_ones() as usize,
            blocked: b_size,
            image: x,
            pushed: pushed[v],
        });
    }
    let witness = PushableHom {
        push: PushSet::from_mask((0..n).filter(|&v| pushed[v]).fold(0, |m, v| m | bit(v))),
        map: image,
    };
    if !witness.verify(g, h) {
        return Err(Error::Certificate(
            "greedy produced an invalid pushable homomorphism".into(),
        ));
    }
    Ok(GreedyRun { order, steps, witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchRun {
    /// The deleted arc, as oriented in the input.
    pub deleted: (usize, usize),
    pub greedy: GreedyRun,
    /// `t` plus two vertices `x = |t|` and `y = |t| + 1`.
    pub target: OrientedGraph,
    pub witness: PushableHom,
}

/// Maps a connected `delta`-regular graph into `t` plus two vertices: the
/// smallest arc whose removal keeps the graph connected is deleted, the rest
/// is mapped greedily with its endpoints placed last, and the endpoints are
/// then moved to the new vertices.
pub fn regular_patch(g: &OrientedGraph, t: &Tournament, delta: usize) -> Result<PatchRun> {
    if !g.is_connected() {
        return Err(Error::Precondition("the graph is not connected".into()));
    }
    if (0..g.n()).any(|v| g.degree(v) != delta) {
        return Err(Error::Precondition(format!("the graph is not {delta}-regular")));
    }
    let (u, v) = g
        .arcs()
        .into_iter()
        .find(|&(a, b)| g.without_edge(a, b).is_connected())
        .ok_or_else(|| Error::Precondition("every arc is a bridge".into()))?;
    let rest = g.without_edge(u, v);
    greedy_preconditions(&rest, t, delta)?;
    let order = degeneracy_order_with_last(&rest, delta - 1, &[u, v])
        .ok_or_else(|| Error::Precondition(format!("the remainder is not {}-degenerate", delta - 1)))?;
    debug_assert!(is_degeneracy_order(&rest, &order, delta - 1));
    let greedy = greedy_along(&rest, t, delta, order)?;

    let m = t.order();
    let (x, y) = (m, m + 1);
    let pushed = g.push(&greedy.witness.push)?;
    let mut map = greedy.witness.map.clone();
    map[u] = x;
    map[v] = y;
    let mut arcs: BTreeSet<(usize, usize)> = t.graph().arcs().into_iter().collect();
    for (a, b) in pushed.arcs() {
        if a == u || a == v || b == u || b == v {
            arcs.insert((map[a], map[b]));
        }
    }
    if let Some(&(a, b)) = arcs.iter().find(|&&(a, b)| arcs.contains(&(b, a))) {
        return Err(Error::Certificate(format!(
            "patched target needs both {a}>{b} and {b}>{a}"
        )));
    }
    let target = OrientedGraph::from_arcs(m + 2, &arcs.into_iter().collect::<Vec<_>>())?;
    let witness = PushableHom {
        push: greedy.witness.push,
        map,
    };
    if !witness.verify(g, &target) {
        return Err(Error::Certificate("patched witness does not validate".into()));
    }
    Ok(PatchRun {
        deleted: (u, v),
        greedy,
        target,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub delta: u64,
    /// `2^(delta/2 - 1)`, rounded up when `delta` is odd.
    pub chi_p_lower: BigUint,
    pub chi_p_upper: BigUint,
    /// `2^(delta/2)`, rounded up when `delta` is odd.
    pub chi_o_lower: BigUint,
    pub chi_o_upper: BigUint,
    /// True when the lower bounds are ceilings of irrational values.
    pub lower_rounded: bool,
}

/// `ceil(2^(e/2))`.
fn ceil_pow2_half(e: u64) -> BigUint {
    if e.is_multiple_of(2) {
        BigUint::from(1u32) << (e / 2)
    } else {
        (BigUint::from(1u32) << e).sqrt() + 1u32
    }
}

pub fn degree_bounds(delta: u64) -> Result<DegreeBounds> {
    if delta < 29 {
        return Err(Error::InvalidArgument(format!(
            "the bounds hold for delta >= 29, got {delta}"
        )));
    }
    let base = BigUint::from((delta - 3) * (delta - 1));
    Ok(DegreeBounds {
        delta,
        chi_p_lower: ceil_pow2_half(delta - 2),
        chi_p_upper: (base.clone() << (delta - 1)) + 2u32,
        chi_o_lower: ceil_pow2_half(delta),
        chi_o_upper: (base << delta) + 2u32,
        lower_rounded: delta % 2 == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin;
    use crate::tournament::paley;

    #[test]
    fn threshold_sits_at_29() {
        let r28 = eval_bound(28).unwrap();
        let r29 = eval_bound(29).unwrap();
        assert!(!r28.feasible && r29.feasible);
        assert!(r28.margin_ok && r29.margin_ok);
        assert!((r28.log_per_factor - 0.459).abs() < 0.01);
        assert!((r29.log_per_factor + 0.0032).abs() < 0.001);
        assert_eq!(r29.order_c, BigUint::from(195_421_011_968u64));
        assert!(eval_bound(4).is_err());
    }

    #[test]
    fn feasibility_is_monotone_from_29() {
        assert_eq!(monotonicity_violation(29..=200).unwrap(), None);
    }

    #[test]
    fn chain_directions_hold_for_small_t() {
        for t in 5..=20 {
            let r = check_bound_chain(t).unwrap();
            assert!(r.holds(), "{:?}", r.failures);
        }
    }

    #[test]
    fn single_arc_greedy() {
        let g = builtin("single-arc").unwrap();
        let r = greedy_push_hom(&g, &paley(7).unwrap(), 3).unwrap();
        assert!(r.witness.verify(&g, paley(7).unwrap().graph()));
    }

    #[test]
    fn three_cycle_target_fails_preconditions() {
        let g = builtin("single-arc").unwrap();
        assert!(matches!(
            greedy_push_hom(&g, &paley(3).unwrap(), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn patch_fig2i() {
        let g = builtin("fig2i").unwrap();
        let r = regular_patch(&g, &paley(7).unwrap(), 3).unwrap();
        assert_eq!(r.target.n(), 9);
        assert!(r.witness.verify(&g, &r.target));
        assert!(regular_patch(&builtin("fig2ii").unwrap(), &paley(7).unwrap(), 3).is_err());
    }

    #[test]
    fn degree_bound_values() {
        let b = degree_bounds(29).unwrap();
        assert_eq!(b.chi_p_upper, BigUint::from(26u64 * 28 * (1 << 28) + 2));
        assert_eq!(b.chi_o_upper, (b.chi_p_upper.clone() - 2u32) * 2u32 + 2u32);
        assert!(b.lower_rounded);
        // 2^13.5 = 11585.2...
        assert_eq!(b.chi_p_lower, BigUint::from(11586u32));
        assert_eq!(degree_bounds(30).unwrap().chi_p_lower, BigUint::from(16384u32));
        assert!(degree_bounds(28).is_err());
    }
}
