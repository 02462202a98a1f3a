//! Arc-list text format and the builtin graphs.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, arc u -> v, 0-indexed)
//! ```
//!
//! Blank lines are ignored on input. [`write_arc_list`] emits arcs in
//! lexicographic order with LF endings, so write-parse-write is a fixpoint.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_ascii_whitespace();
    let a = it.next().ok_or_else(|| parse_err(line, "expected two integers"))?;
    let b = it.next().ok_or_else(|| parse_err(line, "expected two integers"))?;
    if it.next().is_some() {
        return Err(parse_err(line, "trailing tokens"));
    }
    let a = a
        .parse()
        .map_err(|_| parse_err(line, format!("`{a}` is not a non-negative integer")))?;
    let b = b
        .parse()
        .map_err(|_| parse_err(line, format!("`{b}` is not a non-negative integer")))?;
    Ok((a, b))
}

pub fn parse_arc_list(text: &str) -> Result<OrientedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = OrientedGraph::empty(n).map_err(|e| parse_err(hline, e.to_string()))?;
    let mut seen = 0;
    for (line, body) in lines {
        if seen == m {
            return Err(parse_err(line, format!("more than the declared {m} arcs")));
        }
        let (u, v) = parse_pair(line, body)?;
        if u < n && v < n && g.has_arc(u, v) {
            return Err(parse_err(line, format!("repeated arc {u} {v}")));
        }
        g = g.with_arc(u, v).map_err(|e| parse_err(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        let last = text.lines().count().max(1);
        return Err(parse_err(last, format!("declared {m} arcs, found {seen}")));
    }
    Ok(g)
}

pub fn write_arc_list(g: &OrientedGraph) -> String {
    let arcs = g.arcs();
    let mut s = format!("{} {}\n", g.n(), arcs.len());
    for (u, v) in arcs {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn read_graph_file(path: &Path) -> Result<OrientedGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_arc_list(&text)
}

pub const BUILTIN_NAMES: &[&str] = &["pal7", "fig2i", "fig2ii", "t3", "t4", "k4", "single-arc", "c3"];

/// Named graphs used throughout the tests and the CLI.
///
/// * `pal7`: Paley tournament on 7 vertices.
/// * `fig2i`, `fig2ii`: the cubic graph with pushable chromatic number 6 and
///   the same graph minus one edge (bottom row `0..3`, top row `3..6`).
/// * `t3`: triangular prism, outer `0,1,2`, inner `3,4,5`, spokes `i -> i+3`.
/// * `t4`: cube, outer `0..4`, inner `4..8`, spokes `i -> i+4`.
/// * `k4`: `Pal7[{0,1,2,4}]` relabelled `0..4`.
pub fn builtin(name: &str) -> Result<OrientedGraph> {
    let (n, arcs): (usize, Vec<(usize, usize)>) = match name {
        "pal7" => return crate::tournament::paley(7).map(|t| t.graph().clone()),
        "fig2i" => (
            6,
            vec![(3, 0), (0, 4), (0, 5), (1, 3), (4, 1), (1, 5), (2, 3), (2, 4), (5, 2)],
        ),
        "fig2ii" => (6, vec![(3, 0), (0, 4), (0, 5), (1, 3), (4, 1), (1, 5), (2, 3), (2, 4)]),
        "t3" => (
            6,
            vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (5, 3)],
        ),
        "t4" => (
            8,
            vec![
                (0, 1),
                (0, 3),
                (3, 2),
                (2, 1),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (4, 5),
                (5, 6),
                (4, 7),
                (7, 6),
            ],
        ),
        "k4" => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (3, 1), (2, 3)]),
        "single-arc" => (2, vec![(0, 1)]),
        "c3" => (3, vec![(0, 1), (1, 2), (2, 0)]),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    OrientedGraph::from_arcs(n, &arcs)
}

/// Resolves a CLI graph argument: builtins first, then files. A leading `@`
/// forces builtin lookup.
pub fn resolve_graph(spec: &str) -> Result<OrientedGraph> {
    if let Some(name) = spec.strip_prefix('@') {
        return builtin(name);
    }
    if BUILTIN_NAMES.contains(&spec) {
        return builtin(spec);
    }
    read_graph_file(Path::new(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        for name in BUILTIN_NAMES {
            let g = builtin(name).unwrap();
            let text = write_arc_list(&g);
            let h = parse_arc_list(&text).unwrap();
            assert_eq!(g, h);
            assert_eq!(write_arc_list(&h), text);
        }
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_arc_list("# a path\n3 2\n\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.arcs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_arc_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_arc_list("3 1\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_arc_list("# only\n3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }), "{e}");
        let e = parse_arc_list("2 1\n1 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_arc_list("2 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_arc_list("2 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(matches!(parse_arc_list(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn builtin_shapes() {
        let k4 = builtin("k4").unwrap();
        assert!(k4.is_tournament());
        let fig = builtin("fig2i").unwrap();
        assert_eq!(fig.edges().len(), 9);
        assert!((0..6).all(|v| fig.degree(v) == 3));
        assert_eq!(builtin("t4").unwrap().edges().len(), 12);
        assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
        assert!(resolve_graph("@c3").is_ok());
    }
}
