//! Tournaments: Paley construction, Property P(j,k), automorphisms,
//! canonical forms and enumeration up to isomorphism.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::bits::{bit, bits, full};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// An oriented graph in which every pair of vertices is joined by one arc.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament(OrientedGraph);

impl Tournament {
    pub fn new(g: OrientedGraph) -> Result<Self> {
        for u in 0..g.n() {
            let missing = full(g.n()) & !bit(u) & !g.nbrs(u);
            if missing != 0 {
                return Err(Error::NotTournament(u, missing.trailing_zeros() as usize));
            }
        }
        Ok(Self(g))
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.0
    }

    pub fn into_graph(self) -> OrientedGraph {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.n()
    }

    pub fn out_nbrs(&self, v: usize) -> u64 {
        self.0.out_nbrs(v)
    }

    pub fn in_nbrs(&self, v: usize) -> u64 {
        self.0.in_nbrs(v)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.0.has_arc(u, v)
    }

    pub fn score(&self, v: usize) -> usize {
        self.0.out_nbrs(v).count_ones() as usize
    }

    /// Sub-tournament on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut seen = 0u64;
        for &v in vertices {
            if v < 64 && seen & bit(v) != 0 {
                return Err(Error::RepeatedVertex(v));
            }
            if v < 64 {
                seen |= bit(v);
            }
        }
        Ok(Self(self.0.induced(vertices)?))
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({:?})", self.0)
    }
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Paley tournament on `Z/qZ`: `i -> j` iff `j - i` is a nonzero square.
pub fn paley(q: usize) -> Result<Tournament> {
    if !is_prime(q) || q % 4 != 3 || q > 61 {
        return Err(Error::BadPaleyOrder { q });
    }
    let residues: u64 = (1..q).fold(0, |m, x| m | bit(x * x % q));
    let out = (0..q)
        .map(|i| bits(residues).fold(0u64, |m, r| m | bit((i + r) % q)))
        .collect();
    Tournament::new(OrientedGraph::from_out_masks(out)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `N^s(v)`: out-neighbours for `+`, in-neighbours for `-`.
#[inline]
pub fn signed_nbrs(g: &OrientedGraph, v: usize, s: Sign) -> u64 {
    match s {
        Sign::Plus => g.out_nbrs(v),
        Sign::Minus => g.in_nbrs(v),
    }
}

/// `N^s(X)`: union of `N^s(x)` over `x` in the set.
pub fn signed_nbrs_of_set(g: &OrientedGraph, set: u64, s: Sign) -> u64 {
    bits(set).fold(0, |m, x| m | signed_nbrs(g, x, s))
}

/// Vertices agreeing with the pattern on every vertex of `J`, where bit `i`
/// of `pattern` set means `-` at `J[i]`.
#[inline]
fn pattern_set(g: &OrientedGraph, j: &[usize], pattern: u64) -> u64 {
    j.iter().enumerate().fold(g.vertex_mask(), |m, (i, &v)| {
        m & if pattern & bit(i) == 0 {
            g.out_nbrs(v)
        } else {
            g.in_nbrs(v)
        }
    })
}

/// `N^a(J)` together with its complement pattern: vertices matching `a` on
/// all of `J`, or matching the negation of `a` on all of `J`.
pub fn nbr_vector_set(t: &Tournament, j: &[usize], a: &[Sign]) -> Result<u64> {
    if j.len() != a.len() {
        return Err(Error::LengthMismatch {
            vertices: j.len(),
            signs: a.len(),
        });
    }
    let mut seen = 0u64;
    for &v in j {
        if v >= t.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: t.order(),
            });
        }
        if seen & bit(v) != 0 {
            return Err(Error::RepeatedVertex(v));
        }
        seen |= bit(v);
    }
    let pattern = a
        .iter()
        .enumerate()
        .fold(0u64, |m, (i, &s)| if s == Sign::Minus { m | bit(i) } else { m });
    let g = t.graph();
    Ok(pattern_set(g, j, pattern) | pattern_set(g, j, pattern ^ full(j.len())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PropertySpec {
    pub j: usize,
    pub k: usize,
}

impl PropertySpec {
    pub fn new(j: usize, k: usize) -> Self {
        Self { j, k }
    }
}

impl fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{})", self.j, self.k)
    }
}

/// Calls `f` on every `j`-subset of `0..n` as a sorted vertex list; stops
/// early when `f` returns false.
fn for_each_subset(n: usize, j: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, j: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == j {
            return f(cur);
        }
        for v in start..n {
            if n - v < j - cur.len() {
                break;
            }
            cur.push(v);
            let go = rec(v + 1, n, j, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    rec(0, n, j, &mut Vec::with_capacity(j), f)
}

/// Smallest `|N^a(J)|` over all `j`-sets `J` and `j`-vectors `a`, together
/// with a minimising `(J, a)`. Only vectors starting with `+` are visited.
pub fn min_pattern_count(t: &Tournament, j: usize) -> Result<(usize, Vec<usize>, Vec<Sign>)> {
    if j == 0 || j >= t.order() {
        return Err(Error::InvalidArgument(format!(
            "property size j={j} must lie in 1..{}",
            t.order()
        )));
    }
    let g = t.graph();
    let mut best: Option<(usize, Vec<usize>, u64)> = None;
    for_each_subset(t.order(), j, &mut |set| {
        for half in 0..(1u64 << (j - 1)) {
            let pattern = half << 1;
            let c = (pattern_set(g, set, pattern) | pattern_set(g, set, pattern ^ full(j))).count_ones() as usize;
            if best.as_ref().is_none_or(|b| c < b.0) {
                best = Some((c, set.to_vec(), pattern));
            }
        }
        true
    });
    let (c, set, pattern) = best.expect("at least one j-set");
    let signs = (0..j)
        .map(|i| if pattern & bit(i) == 0 { Sign::Plus } else { Sign::Minus })
        .collect();
    Ok((c, set, signs))
}

/// Property `P(j,k)`: every `j`-set and `j`-vector has at least `k` pattern
/// neighbours.
pub fn has_property(t: &Tournament, p: PropertySpec) -> Result<bool> {
    Ok(min_pattern_count(t, p.j)?.0 >= p.k)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub eq1_checked: usize,
    /// `(i, alpha, beta)` instances where the two-step neighbourhood is wrong.
    pub eq1_violations: Vec<(usize, Sign, Sign)>,
    pub eq2_checked: usize,
    pub eq2_violations: Vec<(usize, Sign, Sign, Sign)>,
}

impl ClosureReport {
    pub fn eq1_holds(&self) -> bool {
        self.eq1_violations.is_empty()
    }

    pub fn eq2_holds(&self) -> bool {
        self.eq2_violations.is_empty()
    }
}

/// Checks `N^a(N^b(i)) = V - {i}` for `a = b`, `= V` for `a != b`, and
/// `N^a(N^b(N^c(i))) = V`, for every vertex and sign choice.
pub fn check_closure_equations(t: &Tournament) -> ClosureReport {
    let g = t.graph();
    let all = g.vertex_mask();
    let signs = [Sign::Plus, Sign::Minus];
    let mut r = ClosureReport::default();
    for i in 0..t.order() {
        for a in signs {
            for b in signs {
                let two = signed_nbrs_of_set(g, signed_nbrs(g, i, b), a);
                let want = if a == b { all & !bit(i) } else { all };
                r.eq1_checked += 1;
                if two != want {
                    r.eq1_violations.push((i, a, b));
                }
                for c in signs {
                    let three = signed_nbrs_of_set(g, signed_nbrs_of_set(g, signed_nbrs(g, i, c), b), a);
                    r.eq2_checked += 1;
                    if three != all {
                        r.eq2_violations.push((i, a, b, c));
                    }
                }
            }
        }
    }
    r
}

/// All automorphisms of `g` as permutations `perm[v]`, found by
/// backtracking with in/out-degree pruning.
pub fn automorphisms(g: &OrientedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let sig: Vec<(u32, u32)> = (0..n)
        .map(|v| (g.out_nbrs(v).count_ones(), g.in_nbrs(v).count_ones()))
        .collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    fn rec(
        g: &OrientedGraph,
        sig: &[(u32, u32)],
        v: usize,
        perm: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = g.n();
        if v == n {
            out.push(perm.clone());
            return;
        }
        for w in 0..n {
            if used & bit(w) != 0 || sig[w] != sig[v] {
                continue;
            }
            let ok =
                (0..v).all(|u| g.has_arc(u, v) == g.has_arc(perm[u], w) && g.has_arc(v, u) == g.has_arc(w, perm[u]));
            if ok {
                perm[v] = w;
                rec(g, sig, v + 1, perm, used | bit(w), out);
            }
        }
        perm[v] = usize::MAX;
    }
    rec(g, &sig, 0, &mut perm, 0, &mut out);
    out
}

/// `(vertex_transitive, arc_transitive)`; limited to order 12.
pub fn check_transitivity(t: &Tournament) -> Result<(bool, bool)> {
    if t.order() > 12 {
        return Err(Error::TooLarge {
            what: "automorphism search",
            limit: 12,
            n: t.order(),
        });
    }
    let g = t.graph();
    let auts = automorphisms(g);
    let orbit0 = auts.iter().fold(0u64, |m, p| m | bit(p[0]));
    let vertex = orbit0 == g.vertex_mask();
    let arcs = g.arcs();
    let arc = match arcs.first() {
        None => true,
        Some(&(a, b)) => {
            let images: BTreeSet<(usize, usize)> = auts.iter().map(|p| (p[a], p[b])).collect();
            images.len() == arcs.len()
        }
    };
    Ok((vertex, arc))
}

/// Largest order for which canonical codes fit in a `u64`.
pub const MAX_CANON_ORDER: usize = 11;

/// Canonical code of a tournament: the smallest adjacency bit-string over
/// all relabellings that list vertices by non-decreasing score. Pairs are
/// read column by column, `(0,1), (0,2), (1,2), (0,3), ...`, first pair most
/// significant; a bit is set when the lower position beats the higher one.
pub fn canonical_code(t: &Tournament) -> u64 {
    canonical_labelling(t).0
}

/// Canonical code and a permutation `order` (position -> vertex) attaining it.
pub fn canonical_labelling(t: &Tournament) -> (u64, Vec<usize>) {
    let n = t.order();
    assert!(
        n <= MAX_CANON_ORDER,
        "canonical form supports order <= {MAX_CANON_ORDER}"
    );
    let g = t.graph();
    let mut scores: Vec<usize> = (0..n).map(|v| t.score(v)).collect();
    let by_vertex = scores.clone();
    scores.sort_unstable();

    struct Search<'a> {
        g: &'a OrientedGraph,
        by_vertex: Vec<usize>,
        sorted: Vec<usize>,
        order: Vec<usize>,
        cols: Vec<u64>,
        best_cols: Option<Vec<u64>>,
        best_order: Vec<usize>,
    }

    impl Search<'_> {
        fn column(&self, k: usize, w: usize) -> u64 {
            (0..k).fold(0u64, |c, i| (c << 1) | self.g.has_arc(self.order[i], w) as u64)
        }

        fn rec(&mut self, k: usize, used: u64) {
            let n = self.g.n();
            if k == n {
                let better = self.best_cols.as_ref().is_none_or(|b| self.cols < *b);
                if better {
                    self.best_cols = Some(self.cols.clone());
                    self.best_order = self.order.clone();
                }
                return;
            }
            for w in 0..n {
                if used & bit(w) != 0 || self.by_vertex[w] != self.sorted[k] {
                    continue;
                }
                let col = self.column(k, w);
                self.cols.push(col);
                // prefixes are compared against the current best, which may
                // have improved since the parent was entered
                let prune = self.best_cols.as_ref().is_some_and(|b| self.cols.as_slice() > &b[..=k]);
                if !prune {
                    self.order.push(w);
                    self.rec(k + 1, used | bit(w));
                    self.order.pop();
                }
                self.cols.pop();
            }
        }
    }

    let mut s = Search {
        g,
        by_vertex,
        sorted: scores,
        order: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best_cols: None,
        best_order: Vec::new(),
    };
    s.rec(0, 0);
    let cols = s.best_cols.expect("some labelling");
    let code = cols.iter().enumerate().fold(0u64, |c, (k, &col)| (c << k) | col);
    (code, s.best_order)
}

/// Tournament on `n` vertices with the given canonical code.
pub fn from_code(n: usize, code: u64) -> Tournament {
    let pairs = n * (n - 1) / 2;
    let mut arcs = Vec::with_capacity(pairs);
    let mut idx = 0;
    for k in 1..n {
        for i in 0..k {
            let b = (code >> (pairs - 1 - idx)) & 1;
            arcs.push(if b == 1 { (i, k) } else { (k, i) });
            idx += 1;
        }
    }
    Tournament::new(OrientedGraph::from_arcs(n, &arcs).expect("valid arcs")).expect("complete")
}

fn extend_level(prev: &[Tournament], n: usize) -> Vec<Tournament> {
    let mut codes = BTreeSet::new();
    for t in prev {
        for mask in 0..(1u64 << (n - 1)) {
            let mut out: Vec<u64> = (0..n - 1)
                .map(|v| {
                    let base = t.out_nbrs(v);
                    if mask & bit(v) == 0 {
                        base | bit(n - 1)
                    } else {
                        base
                    }
                })
                .collect();
            out.push(mask);
            let g = OrientedGraph::from_out_masks(out).expect("valid extension");
            codes.insert(canonical_code(&Tournament(g)));
        }
    }
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

static LEVELS: OnceLock<Vec<Vec<Tournament>>> = OnceLock::new();
static LEVEL_EIGHT: OnceLock<Vec<Tournament>> = OnceLock::new();

fn levels() -> &'static Vec<Vec<Tournament>> {
    LEVELS.get_or_init(|| {
        let one = Tournament::new(OrientedGraph::empty(1).expect("one vertex")).expect("trivial");
        let mut levels = vec![vec![one]];
        for n in 2..=7 {
            let next = extend_level(&levels[n - 2], n);
            levels.push(next);
        }
        levels
    })
}

/// One representative per isomorphism class of tournaments of order `n`,
/// sorted by canonical code. Orders 1..=7 are cached; order 8 requires `long`.
pub fn enumerate_tournaments(n: usize, long: bool) -> Result<&'static [Tournament]> {
    match n {
        1..=7 => Ok(&levels()[n - 1]),
        8 if long => Ok(LEVEL_EIGHT.get_or_init(|| extend_level(&levels()[6], 8))),
        _ => Err(Error::EnumerationRange(n)),
    }
}

/// `f_t(j) = (t - j)(t - 2) + 1`.
pub fn ft(t: u64, j: u64) -> Result<u64> {
    if t == 0 || j > t - 1 {
        return Err(Error::InvalidArgument(format!(
            "f_t(j) needs 0 <= j <= t-1, got t={t}, j={j}"
        )));
    }
    Ok((t - j) * (t.saturating_sub(2)) + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecursionCheck {
    /// `P(j,k)` holds.
    pub premise: bool,
    /// `P(j-1,2k)` holds.
    pub conclusion: bool,
}

impl RecursionCheck {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }

    pub fn non_vacuous(&self) -> bool {
        self.premise && self.conclusion
    }
}

/// Checks on `t` that `P(j,k)` implies `P(j-1, 2k)`.
pub fn check_property_recursion(t: &Tournament, j: usize, k: usize) -> Result<RecursionCheck> {
    if j < 2 || j >= t.order() {
        return Err(Error::InvalidArgument(format!(
            "recursion check needs 2 <= j < {}, got {j}",
            t.order()
        )));
    }
    let premise = has_property(t, PropertySpec::new(j, k))?;
    let conclusion = has_property(t, PropertySpec::new(j - 1, 2 * k))?;
    Ok(RecursionCheck { premise, conclusion })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pal7() -> Tournament {
        paley(7).unwrap()
    }

    #[test]
    fn paley_seven_neighbourhoods() {
        let t = pal7();
        assert_eq!(t.out_nbrs(0), 0b001_0110);
        assert_eq!(t.in_nbrs(0), 0b110_1000);
        let t3 = paley(3).unwrap();
        assert_eq!(t3.graph().arcs(), vec![(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(paley(5), Err(Error::BadPaleyOrder { q: 5 })));
        assert!(matches!(paley(9), Err(Error::BadPaleyOrder { q: 9 })));
        assert!(paley(59).is_ok());
    }

    #[test]
    fn pattern_neighbourhoods() {
        let t = pal7();
        use Sign::*;
        assert_eq!(nbr_vector_set(&t, &[0], &[Plus]).unwrap(), 0b111_1110);
        assert_eq!(nbr_vector_set(&t, &[0, 1], &[Plus, Plus]).unwrap(), bit(2) | bit(6));
        assert_eq!(
            nbr_vector_set(&t, &[0, 1], &[Minus, Minus]).unwrap(),
            nbr_vector_set(&t, &[0, 1], &[Plus, Plus]).unwrap()
        );
        assert!(matches!(
            nbr_vector_set(&t, &[0, 1], &[Plus]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            nbr_vector_set(&t, &[1, 1], &[Plus, Plus]),
            Err(Error::RepeatedVertex(1))
        ));
    }

    #[test]
    fn paley_seven_properties() {
        let t = pal7();
        assert!(has_property(&t, PropertySpec::new(1, 6)).unwrap());
        assert!(has_property(&t, PropertySpec::new(2, 2)).unwrap());
        assert!(!has_property(&t, PropertySpec::new(1, 7)).unwrap());
        assert!(!has_property(&t, PropertySpec::new(2, 3)).unwrap());
        assert!(has_property(&t, PropertySpec::new(7, 1)).is_err());
    }

    #[test]
    fn closure_equations() {
        let r = check_closure_equations(&pal7());
        assert_eq!((r.eq1_checked, r.eq2_checked), (28, 56));
        assert!(r.eq1_holds() && r.eq2_holds());
        let r = check_closure_equations(&paley(3).unwrap());
        assert!(r.eq1_violations.contains(&(0, Sign::Plus, Sign::Plus)));
    }

    #[test]
    fn transitivity() {
        assert_eq!(check_transitivity(&pal7()).unwrap(), (true, true));
        assert_eq!(automorphisms(pal7().graph()).len(), 21);
        let tt3 = Tournament::new(OrientedGraph::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()).unwrap();
        assert_eq!(check_transitivity(&tt3).unwrap(), (false, false));
        assert_eq!(check_transitivity(&paley(3).unwrap()).unwrap(), (true, true));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_tournaments(n, false).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 12, 56, 456]);
        assert!(enumerate_tournaments(8, false).is_err());
        assert!(enumerate_tournaments(0, true).is_err());
    }

    #[test]
    fn canonical_code_round_trips() {
        for n in 1..=6 {
            for t in enumerate_tournaments(n, false).unwrap() {
                let c = canonical_code(t);
                assert_eq!(canonical_code(&from_code(n, c)), c);
                assert_eq!(&from_code(n, c), t);
            }
        }
    }

    #[test]
    fn ft_values() {
        assert_eq!(ft(3, 2).unwrap(), 2);
        assert_eq!(ft(3, 1).unwrap(), 3);
        assert!(ft(3, 3).is_err());
        for t in 2..=40u64 {
            for j in 1..t {
                assert!(ft(t, j - 1).unwrap() <= 2 * ft(t, j).unwrap());
            }
        }
    }

    #[test]
    fn recursion_on_paley_seven() {
        let r = check_property_recursion(&pal7(), 2, 2).unwrap();
        assert!(r.premise && r.conclusion);
        let r = check_property_recursion(&pal7(), 2, 3).unwrap();
        assert!(!r.premise && r.holds());
    }
}
