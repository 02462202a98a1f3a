//! Drawn case tables and exhaustive orientation sweeps.

use std::collections::BTreeSet;

use crate::bits::{bit, full};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, PushSet};
use crate::hom::{exists_pushable_hom, orientation, Strategy};
use crate::io::builtin;
use crate::par::Exec;
use crate::tournament::{canonical_code, paley, Tournament};

use super::data::{load_figures, Arc, Sweep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSweepReport {
    pub name: String,
    pub cases: usize,
    /// Case index and reason, for every drawn case that is not a valid map.
    pub invalid: Vec<(usize, String)>,
    /// Inner orientations that no drawn case shows.
    pub missing: Vec<u64>,
    /// Inner orientations drawn more than once.
    pub repeated: Vec<u64>,
    pub orientations: u64,
    /// Inner orientations extendable inside the allowed value sets.
    pub extendable: u64,
}

impl CaseSweepReport {
    pub fn ok(&self) -> bool {
        self.invalid.is_empty() && self.missing.is_empty() && self.extendable == self.orientations
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustiveReport {
    pub orientations: u64,
    pub pushable: u64,
    /// Orientation codes with no pushable homomorphism.
    pub failures: Vec<u64>,
}

impl ExhaustiveReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub cases: Vec<CaseSweepReport>,
    pub exhaustive: ExhaustiveReport,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.cases.iter().all(CaseSweepReport::ok) && self.exhaustive.ok()
    }
}

struct Layout {
    names: Vec<String>,
}

impl Layout {
    fn of(s: &Sweep) -> Self {
        let mut names: Vec<String> = Vec::new();
        let mut add = |v: &String| {
            if !names.contains(v) {
                names.push(v.clone());
            }
        };
        s.fixed.iter().for_each(|(v, _)| add(v));
        s.allowed.iter().for_each(|(v, _)| add(v));
        s.arcs.iter().chain(&s.inner).for_each(|(a, b)| {
            add(a);
            add(b);
        });
        s.cases.iter().for_each(|c| c.values.iter().for_each(|(v, _)| add(v)));
        Layout { names }
    }

    fn idx(&self, v: &str) -> usize {
        self.names
            .iter()
            .position(|x| x == v)
            .expect("vertex collected by Layout::of")
    }

    fn arcs(&self, arcs: &[Arc]) -> Vec<(usize, usize)> {
        arcs.iter().map(|(a, b)| (self.idx(a), self.idx(b))).collect()
    }
}

fn maps_arcs(t: &Tournament, f: &[usize], arcs: &[(usize, usize)]) -> Option<(usize, usize)> {
    arcs.iter().copied().find(|&(a, b)| !t.has_arc(f[a], f[b]))
}

/// Bit `k` set when inner edge `k` is drawn against its listed direction.
fn inner_code(s: &Sweep, arcs: &[Arc]) -> std::result::Result<u64, String> {
    let mut code = 0;
    for (k, (a, b)) in s.inner.iter().enumerate() {
        let fwd = arcs.iter().filter(|(x, y)| x == a && y == b).count();
        let back = arcs.iter().filter(|(x, y)| x == b && y == a).count();
        match (fwd, back) {
            (1, 0) => {}
            (0, 1) => code |= bit(k),
            _ => return Err(format!("inner edge {a}-{b} is not oriented exactly once")),
        }
    }
    if arcs.len() != s.inner.len() {
        return Err("case lists arcs outside the inner edges".into());
    }
    Ok(code)
}

fn inner_arcs(s: &Sweep, code: u64) -> Vec<Arc> {
    s.inner
        .iter()
        .enumerate()
        .map(|(k, (a, b))| {
            if code & bit(k) == 0 {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            }
        })
        .collect()
}

/// Checks a drawn case table verbatim: each case must be a homomorphism with
/// values in the allowed sets, and the cases must show every inner
/// orientation. Independently, every inner orientation is searched for an
/// extension inside the allowed sets.
pub fn validate_sweep(s: &Sweep, t: &Tournament) -> Result<CaseSweepReport> {
    let layout = Layout::of(s);
    let n = layout.names.len();
    let order = t.order();
    let mut allowed = vec![full(order); n];
    for (v, x) in &s.fixed {
        if *x >= order {
            return Err(Error::Configuration(format!(
                "{}: value {x} outside the target",
                s.name
            )));
        }
        allowed[layout.idx(v)] = bit(*x);
    }
    for (v, xs) in &s.allowed {
        allowed[layout.idx(v)] = xs.iter().filter(|&&x| x < order).fold(0, |m, &x| m | bit(x));
    }
    let common = layout.arcs(&s.arcs);

    let mut invalid = Vec::new();
    let mut seen = BTreeSet::new();
    let mut repeated = BTreeSet::new();
    for (ci, case) in s.cases.iter().enumerate() {
        let mut f = vec![usize::MAX; n];
        for (v, x) in &s.fixed {
            f[layout.idx(v)] = *x;
        }
        for (v, x) in &case.values {
            f[layout.idx(v)] = *x;
        }
        let reason = if let Some(v) = (0..n).find(|&v| f[v] == usize::MAX) {
            Some(format!("{} has no value", layout.names[v]))
        } else if let Some(v) = (0..n).find(|&v| allowed[v] & bit(f[v]) == 0) {
            Some(format!("{}={} is not an allowed value", layout.names[v], f[v]))
        } else {
            let arcs: Vec<_> = common.iter().copied().chain(layout.arcs(&case.arcs)).collect();
            maps_arcs(t, &f, &arcs).map(|(a, b)| {
                format!(
                    "{}>{} maps to {}>{}, not an arc",
                    layout.names[a], layout.names[b], f[a], f[b]
                )
            })
        };
        match inner_code(s, &case.arcs) {
            Ok(code) => {
                if !seen.insert(code) {
                    repeated.insert(code);
                }
            }
            Err(e) => invalid.push((ci, e)),
        }
        if let Some(r) = reason {
            invalid.push((ci, r));
        }
    }

    let orientations = 1u64 << s.inner.len();
    let missing: Vec<u64> = (0..orientations).filter(|c| !seen.contains(c)).collect();
    let mut extendable = 0;
    for code in 0..orientations {
        let arcs: Vec<_> = common
            .iter()
            .copied()
            .chain(layout.arcs(&inner_arcs(s, code)))
            .collect();
        let g = OrientedGraph::from_arcs(n, &arcs)?;
        let search = (0..n).fold(crate::hom::HomSearch::new(&g, t.graph()), |h, v| {
            h.restrict(v, allowed[v])
        });
        if search.first().is_some() {
            extendable += 1;
        }
    }
    Ok(CaseSweepReport {
        name: s.name.clone(),
        cases: s.cases.len(),
        invalid,
        missing,
        repeated: repeated.into_iter().collect(),
        orientations,
        extendable,
    })
}

/// Every orientation of `g`'s underlying graph, tested for a pushable
/// homomorphism to `t`. Witnesses are verified by the search itself.
pub fn exhaustive_sweep(g: &OrientedGraph, t: &Tournament, exec: Exec) -> Result<ExhaustiveReport> {
    let edges = g.edges();
    if edges.len() > 30 {
        return Err(Error::TooLarge {
            what: "exhaustive orientation sweep (edges)",
            limit: 30,
            n: edges.len(),
        });
    }
    let count = 1u64 << edges.len();
    let results = exec.map_range(count as usize, |code| {
        let o = orientation(g.n(), &edges, code as u64);
        exists_pushable_hom(&o, t.graph(), Strategy::AntiTwin).map(|w| w.is_some())
    });
    let mut failures = Vec::new();
    for (code, r) in results.into_iter().enumerate() {
        if !r? {
            failures.push(code as u64);
        }
    }
    Ok(ExhaustiveReport {
        orientations: count,
        pushable: count - failures.len() as u64,
        failures,
    })
}

fn named_sweep(name: &str) -> Result<Sweep> {
    load_figures()?
        .sweep(name)
        .cloned()
        .ok_or_else(|| Error::Configuration(format!("sweep {name} missing from the figure data")))
}

/// The drawn T3 cases plus all 512 orientations of T3.
pub fn sweep_t3(t: &Tournament, exec: Exec) -> Result<SweepReport> {
    Ok(SweepReport {
        cases: vec![validate_sweep(&named_sweep("t3")?, t)?],
        exhaustive: exhaustive_sweep(&builtin("t3")?, t, exec)?,
    })
}

/// The drawn T4 cases (odd and even outer cycle) plus all 4096 orientations of T4.
pub fn sweep_t4(t: &Tournament, exec: Exec) -> Result<SweepReport> {
    Ok(SweepReport {
        cases: vec![
            validate_sweep(&named_sweep("t4")?, t)?,
            validate_sweep(&named_sweep("t4-even")?, t)?,
        ],
        exhaustive: exhaustive_sweep(&builtin("t4")?, t, exec)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4Report {
    pub orientations: usize,
    /// One key per push-then-isomorphism class, ascending.
    pub class_keys: Vec<u64>,
    /// Keys of `Pal7[{0,1,2,4}]` and `Pal7[{1,2,3,4}]`.
    pub representative_keys: [u64; 2],
    pub pushable: usize,
}

impl K4Report {
    pub fn ok(&self) -> bool {
        let reps: BTreeSet<u64> = self.representative_keys.iter().copied().collect();
        self.class_keys.len() == 2
            && reps.len() == 2
            && reps.iter().all(|k| self.class_keys.contains(k))
            && self.pushable == self.orientations
    }
}

/// Smallest canonical code over the push class of a tournament.
fn push_class_key(g: &OrientedGraph) -> Result<u64> {
    PushSet::canonical_sets(g)
        .map(|s| Tournament::new(g.push(&s)?).map(|t| canonical_code(&t)))
        .try_fold(u64::MAX, |m, k| k.map(|k| m.min(k)))
}

/// Groups the 64 orientations of K4 up to pushing and isomorphism, and
/// checks that each maps pushably to `t`.
pub fn check_k4_push_classes(t: &Tournament) -> Result<K4Report> {
    let edges: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    let mut keys = BTreeSet::new();
    let mut pushable = 0;
    for code in 0..1u64 << edges.len() {
        let o = orientation(4, &edges, code);
        keys.insert(push_class_key(&o)?);
        if exists_pushable_hom(&o, t.graph(), Strategy::AntiTwin)?.is_some() {
            pushable += 1;
        }
    }
    let pal = paley(7)?;
    let rep = |vs: &[usize]| -> Result<u64> { push_class_key(pal.induced(vs)?.graph()) };
    Ok(K4Report {
        orientations: 1 << edges.len(),
        class_keys: keys.into_iter().collect(),
        representative_keys: [rep(&[0, 1, 2, 4])?, rep(&[1, 2, 3, 4])?],
        pushable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pal7() -> Tournament {
        paley(7).unwrap()
    }

    #[test]
    fn k4_has_two_classes() {
        let r = check_k4_push_classes(&pal7()).unwrap();
        assert_eq!(r.class_keys.len(), 2);
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn t4_cases_validate() {
        let r = sweep_t4(&pal7(), Exec::default()).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.exhaustive.orientations, 4096);
    }

    #[test]
    fn t3_drawn_case_two_is_misdrawn() {
        let r = sweep_t3(&pal7(), Exec::default()).unwrap();
        let c = &r.cases[0];
        assert_eq!(c.invalid.iter().map(|(i, _)| *i).collect::<Vec<_>>(), vec![1]);
        assert_eq!(c.missing.len(), 1);
        assert_eq!(c.repeated.len(), 1);
        assert_eq!(c.extendable, 8);
        assert!(r.exhaustive.ok());
        assert_eq!(r.exhaustive.pushable, 512);
    }

    #[test]
    fn three_cycle_target_fails_t3() {
        let r = exhaustive_sweep(&builtin("t3").unwrap(), &paley(3).unwrap(), Exec::Sequential).unwrap();
        assert!(!r.ok());
    }
}
