//! Text formats for certificates, sweeps and configurations.
//!
//! The formats are documented at the top of `data/certificates.txt` and
//! `data/figures.txt`. Parsing is line based; the writers emit a canonical
//! form that parses back to an equal value.

use std::fmt::Write as _;
use std::path::PathBuf;

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::tournament::Sign;

pub const DEFAULT_CERTIFICATES: &str = include_str!("../../data/certificates.txt");
pub const DEFAULT_FIGURES: &str = include_str!("../../data/figures.txt");

/// Environment variable naming a directory that replaces the bundled data.
pub const DATA_ENV: &str = "PUSHLAB_DATA";

pub type Arc = (String, String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Option<usize>>,
}

impl Matrix {
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.cells[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Option<usize>) {
        self.cells[i * self.cols + j] = v;
    }

    /// Distinct non-empty values as a bitmask.
    pub fn value_mask(&self) -> u64 {
        self.cells.iter().flatten().fold(0, |m, &v| m | bit(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variant {
    pub sign: Sign,
    /// Vertex name to matrix name.
    pub bind: Vec<(String, String)>,
    pub arcs: Vec<Arc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallS {
    pub value: usize,
    pub sign: Sign,
    pub set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    Cover {
        matrix: String,
        values: Vec<usize>,
    },
    Distinct {
        matrix: String,
        count: usize,
    },
    SmallS {
        v3: String,
        v4: String,
        threshold: usize,
        exceptions: Vec<SmallS>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCertificate {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub fixed: Vec<(String, usize)>,
    pub arcs: Vec<Arc>,
    pub push_rows: Vec<(String, usize)>,
    pub push_cols: Vec<(String, usize)>,
    pub matrices: Vec<(String, Matrix)>,
    pub variants: Vec<Variant>,
    pub claims: Vec<Claim>,
}

impl MatrixCertificate {
    pub fn matrix(&self, name: &str) -> Option<&Matrix> {
        self.matrices.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeRow {
    pub kind: usize,
    pub arcs: Vec<Arc>,
    /// Values of `b` stated unreachable under `h` (a1=0, a2=1).
    pub forbid_h: Option<Vec<usize>>,
    /// Values of `b` stated unreachable under `h*` (a1=a2=0).
    pub forbid_hstar: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CertificateFile {
    pub certificates: Vec<MatrixCertificate>,
    pub types: Vec<TypeRow>,
}

impl CertificateFile {
    pub fn get(&self, name: &str) -> Option<&MatrixCertificate> {
        self.certificates.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub values: Vec<(String, usize)>,
    pub arcs: Vec<Arc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub name: String,
    pub fixed: Vec<(String, usize)>,
    pub allowed: Vec<(String, Vec<usize>)>,
    pub arcs: Vec<Arc>,
    pub inner: Vec<Arc>,
    pub cases: Vec<Case>,
}

/// A configuration: white vertices first, then black, indexed in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub name: String,
    pub white: Vec<String>,
    pub black: Vec<String>,
    pub edges: Vec<Arc>,
}

impl Configuration {
    pub fn n(&self) -> usize {
        self.white.len() + self.black.len()
    }

    pub fn index(&self, v: &str) -> Option<usize> {
        self.white.iter().chain(&self.black).position(|x| x == v)
    }

    pub fn name_of(&self, i: usize) -> &str {
        if i < self.white.len() {
            &self.white[i]
        } else {
            &self.black[i - self.white.len()]
        }
    }

    pub fn black_mask(&self) -> u64 {
        (self.white.len()..self.n()).fold(0, |m, i| m | bit(i))
    }

    pub fn white_mask(&self) -> u64 {
        (0..self.white.len()).fold(0, |m, i| m | bit(i))
    }

    /// Edges as index pairs `(min, max)`, in file order.
    pub fn edge_indices(&self) -> Result<Vec<(usize, usize)>> {
        self.edges
            .iter()
            .map(|(a, b)| {
                let i = self
                    .index(a)
                    .ok_or_else(|| Error::Configuration(format!("{}: unknown vertex {a}", self.name)))?;
                let j = self
                    .index(b)
                    .ok_or_else(|| Error::Configuration(format!("{}: unknown vertex {b}", self.name)))?;
                if i == j {
                    return Err(Error::Configuration(format!("{}: loop at {a}", self.name)));
                }
                Ok((i.min(j), i.max(j)))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FigureFile {
    pub sweeps: Vec<Sweep>,
    pub configs: Vec<Configuration>,
}

impl FigureFile {
    pub fn sweep(&self, name: &str) -> Option<&Sweep> {
        self.sweeps.iter().find(|s| s.name == name)
    }

    pub fn config(&self, name: &str) -> Option<&Configuration> {
        self.configs.iter().find(|c| c.name == name)
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_value(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| err(line, format!("`{s}` is not a value")))
}

fn parse_list(line: usize, s: &str) -> Result<Vec<usize>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_value(line, x)).collect()
}

fn parse_arc(line: usize, s: &str, sep: char) -> Result<Arc> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| err(line, format!("`{s}` is not of the form A{sep}B")))?;
    if a.is_empty() || b.is_empty() {
        return Err(err(line, format!("`{s}` has an empty endpoint")));
    }
    Ok((a.to_string(), b.to_string()))
}

fn parse_assign(line: usize, s: &str) -> Result<(String, &str)> {
    let (a, b) = s
        .split_once('=')
        .ok_or_else(|| err(line, format!("`{s}` is not of the form V=x")))?;
    Ok((a.to_string(), b))
}

fn parse_sign_char(line: usize, c: char) -> Result<Sign> {
    Sign::from_char(c).ok_or_else(|| err(line, format!("`{c}` is not a sign")))
}

fn parse_sign(line: usize, s: &str) -> Result<Sign> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => parse_sign_char(line, c),
        _ => Err(err(line, format!("`{s}` is not a sign"))),
    }
}

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn split_bar(s: &str) -> (&str, &str) {
    match s.split_once('|') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), ""),
    }
}

pub fn parse_certificates(text: &str) -> Result<CertificateFile> {
    let mut file = CertificateFile::default();
    let mut lines = meaningful(text).peekable();
    while let Some((ln, l)) = lines.next() {
        let mut words = l.split_whitespace();
        match words.next() {
            Some("certificate") => {
                let name = words.next().ok_or_else(|| err(ln, "certificate needs a name"))?;
                file.certificates.push(parse_certificate_body(name, ln, &mut lines)?);
            }
            Some("typetable") => {
                file.types = parse_type_table(&mut lines, ln)?;
            }
            Some(w) => return Err(err(ln, format!("unexpected `{w}`"))),
            None => unreachable!(),
        }
    }
    Ok(file)
}

fn parse_certificate_body<'a>(
    name: &str,
    start: usize,
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
) -> Result<MatrixCertificate> {
    let mut c = MatrixCertificate {
        name: name.to_string(),
        rows: 0,
        cols: 0,
        fixed: Vec::new(),
        arcs: Vec::new(),
        push_rows: Vec::new(),
        push_cols: Vec::new(),
        matrices: Vec::new(),
        variants: Vec::new(),
        claims: Vec::new(),
    };
    loop {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| err(start, format!("certificate {name} is not closed")))?;
        let mut words = l.split_whitespace();
        let head = words.next().unwrap_or_default();
        let rest: Vec<&str> = words.collect();
        match head {
            "end" => break,
            "size" => {
                let spec = rest.first().ok_or_else(|| err(ln, "size needs ROWSxCOLS"))?;
                let (r, k) = spec.split_once('x').ok_or_else(|| err(ln, "size needs ROWSxCOLS"))?;
                c.rows = parse_value(ln, r)?;
                c.cols = parse_value(ln, k)?;
            }
            "fixed" => {
                for w in rest {
                    let (v, x) = parse_assign(ln, w)?;
                    c.fixed.push((v, parse_value(ln, x)?));
                }
            }
            "arcs" => {
                for w in rest {
                    c.arcs.push(parse_arc(ln, w, '>')?);
                }
            }
            "push-row" | "push-col" => {
                if rest.len() != 2 {
                    return Err(err(ln, format!("{head} needs a vertex and a threshold")));
                }
                let rule = (rest[0].to_string(), parse_value(ln, rest[1])?);
                if head == "push-row" {
                    c.push_rows.push(rule);
                } else {
                    c.push_cols.push(rule);
                }
            }
            "matrix" => {
                let mname = rest.first().ok_or_else(|| err(ln, "matrix needs a name"))?;
                if c.rows == 0 || c.cols == 0 {
                    return Err(err(ln, "size must precede matrices"));
                }
                let mut cells = Vec::with_capacity(c.rows * c.cols);
                for _ in 0..c.rows {
                    let (rl, row) = lines
                        .next()
                        .ok_or_else(|| err(ln, format!("matrix {mname} is truncated")))?;
                    let toks: Vec<&str> = row.split_whitespace().collect();
                    if toks.len() != c.cols {
                        return Err(err(rl, format!("expected {} entries, found {}", c.cols, toks.len())));
                    }
                    for t in toks {
                        cells.push(if t == "." { None } else { Some(parse_value(rl, t)?) });
                    }
                }
                c.matrices.push((
                    mname.to_string(),
                    Matrix {
                        rows: c.rows,
                        cols: c.cols,
                        cells,
                    },
                ));
            }
            "variant" => {
                let body = l["variant".len()..].trim();
                let (left, right) = split_bar(body);
                let mut w = left.split_whitespace();
                let sign = parse_sign(ln, w.next().ok_or_else(|| err(ln, "variant needs a sign"))?)?;
                let mut bind = Vec::new();
                for b in w {
                    let (v, m) = parse_assign(ln, b)?;
                    bind.push((v, m.to_string()));
                }
                let arcs = right
                    .split_whitespace()
                    .map(|a| parse_arc(ln, a, '>'))
                    .collect::<Result<_>>()?;
                c.variants.push(Variant { sign, bind, arcs });
            }
            "claim" => c.claims.push(parse_claim(ln, &rest, l)?),
            other => return Err(err(ln, format!("unknown directive `{other}`"))),
        }
    }
    for (mname, _) in &c.matrices {
        if c.matrices.iter().filter(|(n, _)| n == mname).count() > 1 {
            return Err(err(start, format!("matrix {mname} defined twice")));
        }
    }
    Ok(c)
}

fn parse_claim(ln: usize, rest: &[&str], line: &str) -> Result<Claim> {
    match rest.first().copied() {
        Some("cover") if rest.len() == 3 => Ok(Claim::Cover {
            matrix: rest[1].to_string(),
            values: parse_list(ln, rest[2])?,
        }),
        Some("distinct") if rest.len() == 3 => Ok(Claim::Distinct {
            matrix: rest[1].to_string(),
            count: parse_value(ln, rest[2])?,
        }),
        Some("small-s") => {
            let (left, right) = split_bar(line);
            let w: Vec<&str> = left.split_whitespace().collect();
            if w.len() != 5 {
                return Err(err(ln, "small-s needs M3 M4 k | exceptions"));
            }
            let mut exceptions = Vec::new();
            for part in right.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                let mut it = part.split_whitespace();
                let key = it.next().ok_or_else(|| err(ln, "empty exception"))?;
                let set = it
                    .next()
                    .ok_or_else(|| err(ln, format!("exception `{key}` needs a set")))?;
                let sign_char = key.chars().last().ok_or_else(|| err(ln, "empty exception key"))?;
                let value = parse_value(ln, &key[..key.len() - sign_char.len_utf8()])?;
                exceptions.push(SmallS {
                    value,
                    sign: parse_sign_char(ln, sign_char)?,
                    set: parse_list(ln, set)?,
                });
            }
            Ok(Claim::SmallS {
                v3: w[2].to_string(),
                v4: w[3].to_string(),
                threshold: parse_value(ln, w[4])?,
                exceptions,
            })
        }
        _ => Err(err(ln, "unrecognised claim")),
    }
}

fn parse_type_table<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, start: usize) -> Result<Vec<TypeRow>> {
    let mut rows: Vec<TypeRow> = Vec::new();
    loop {
        let (ln, l) = lines.next().ok_or_else(|| err(start, "typetable is not closed"))?;
        let w: Vec<&str> = l.split_whitespace().collect();
        match w[0] {
            "end" => return Ok(rows),
            "type" => {
                let kind = parse_value(ln, w.get(1).ok_or_else(|| err(ln, "type needs a number"))?)?;
                let arcs = w[2..].iter().map(|a| parse_arc(ln, a, '>')).collect::<Result<_>>()?;
                rows.push(TypeRow {
                    kind,
                    arcs,
                    forbid_h: None,
                    forbid_hstar: None,
                });
            }
            "forbid" => {
                let row = rows.last_mut().ok_or_else(|| err(ln, "forbid before any type"))?;
                if w.len() != 3 {
                    return Err(err(ln, "forbid needs h|h* and a list"));
                }
                let list = Some(parse_list(ln, w[2])?);
                match w[1] {
                    "h" => row.forbid_h = list,
                    "h*" => row.forbid_hstar = list,
                    other => return Err(err(ln, format!("unknown map `{other}`"))),
                }
            }
            other => return Err(err(ln, format!("unknown directive `{other}`"))),
        }
    }
}

pub fn parse_figures(text: &str) -> Result<FigureFile> {
    let mut file = FigureFile::default();
    let mut lines = meaningful(text);
    while let Some((ln, l)) = lines.next() {
        let w: Vec<&str> = l.split_whitespace().collect();
        let name = w.get(1).ok_or_else(|| err(ln, "block needs a name"))?.to_string();
        match w[0] {
            "sweep" => {
                let mut s = Sweep {
                    name,
                    fixed: Vec::new(),
                    allowed: Vec::new(),
                    arcs: Vec::new(),
                    inner: Vec::new(),
                    cases: Vec::new(),
                };
                loop {
                    let (ln, l) = lines.next().ok_or_else(|| err(ln, "sweep is not closed"))?;
                    let w: Vec<&str> = l.split_whitespace().collect();
                    match w[0] {
                        "end" => break,
                        "fixed" => {
                            for a in &w[1..] {
                                let (v, x) = parse_assign(ln, a)?;
                                s.fixed.push((v, parse_value(ln, x)?));
                            }
                        }
                        "allowed" => {
                            for a in &w[1..] {
                                let (v, x) = parse_assign(ln, a)?;
                                s.allowed.push((v, parse_list(ln, x)?));
                            }
                        }
                        "arcs" => {
                            for a in &w[1..] {
                                s.arcs.push(parse_arc(ln, a, '>')?);
                            }
                        }
                        "inner" => {
                            for a in &w[1..] {
                                s.inner.push(parse_arc(ln, a, '-')?);
                            }
                        }
                        "case" => {
                            let (left, right) = split_bar(&l["case".len()..]);
                            let mut values = Vec::new();
                            for a in left.split_whitespace() {
                                let (v, x) = parse_assign(ln, a)?;
                                values.push((v, parse_value(ln, x)?));
                            }
                            let arcs = right
                                .split_whitespace()
                                .map(|a| parse_arc(ln, a, '>'))
                                .collect::<Result<_>>()?;
                            s.cases.push(Case { values, arcs });
                        }
                        other => return Err(err(ln, format!("unknown directive `{other}`"))),
                    }
                }
                file.sweeps.push(s);
            }
            "config" => {
                let mut c = Configuration {
                    name,
                    white: Vec::new(),
                    black: Vec::new(),
                    edges: Vec::new(),
                };
                let mut edges_line = ln;
                loop {
                    let (ln, l) = lines.next().ok_or_else(|| err(ln, "config is not closed"))?;
                    let w: Vec<&str> = l.split_whitespace().collect();
                    match w[0] {
                        "end" => break,
                        "white" => c.white.extend(w[1..].iter().map(|s| s.to_string())),
                        "black" => c.black.extend(w[1..].iter().map(|s| s.to_string())),
                        "edges" => {
                            edges_line = ln;
                            for a in &w[1..] {
                                c.edges.push(parse_arc(ln, a, '-')?);
                            }
                        }
                        other => return Err(err(ln, format!("unknown directive `{other}`"))),
                    }
                }
                c.edge_indices().map_err(|e| err(edges_line, e.to_string()))?;
                file.configs.push(c);
            }
            other => return Err(err(ln, format!("unknown block `{other}`"))),
        }
    }
    Ok(file)
}

fn join_list(v: &[usize]) -> String {
    if v.is_empty() {
        "-".to_string()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn join_arcs(arcs: &[Arc], sep: char) -> String {
    arcs.iter()
        .map(|(a, b)| format!("{a}{sep}{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_assign(v: &[(String, usize)]) -> String {
    v.iter().map(|(a, x)| format!("{a}={x}")).collect::<Vec<_>>().join(" ")
}

pub fn write_certificates(file: &CertificateFile) -> String {
    let mut s = String::new();
    for c in &file.certificates {
        let _ = writeln!(s, "certificate {}", c.name);
        let _ = writeln!(s, "size {}x{}", c.rows, c.cols);
        if !c.fixed.is_empty() {
            let _ = writeln!(s, "fixed {}", join_assign(&c.fixed));
        }
        if !c.arcs.is_empty() {
            let _ = writeln!(s, "arcs {}", join_arcs(&c.arcs, '>'));
        }
        for (v, k) in &c.push_rows {
            let _ = writeln!(s, "push-row {v} {k}");
        }
        for (v, k) in &c.push_cols {
            let _ = writeln!(s, "push-col {v} {k}");
        }
        for (name, m) in &c.matrices {
            let _ = writeln!(s, "matrix {name}");
            for i in 0..m.rows {
                let row: Vec<String> = (0..m.cols)
                    .map(|j| m.get(i, j).map_or(".".to_string(), |v| v.to_string()))
                    .collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
        for v in &c.variants {
            let binds: Vec<String> = v.bind.iter().map(|(a, b)| format!("{a}={b}")).collect();
            let _ = writeln!(
                s,
                "variant {} {} | {}",
                v.sign,
                binds.join(" "),
                join_arcs(&v.arcs, '>')
            );
        }
        for claim in &c.claims {
            match claim {
                Claim::Cover { matrix, values } => {
                    let _ = writeln!(s, "claim cover {matrix} {}", join_list(values));
                }
                Claim::Distinct { matrix, count } => {
                    let _ = writeln!(s, "claim distinct {matrix} {count}");
                }
                Claim::SmallS {
                    v3,
                    v4,
                    threshold,
                    exceptions,
                } => {
                    let ex: Vec<String> = exceptions
                        .iter()
                        .map(|e| format!("{}{} {}", e.value, e.sign, join_list(&e.set)))
                        .collect();
                    let _ = writeln!(s, "claim small-s {v3} {v4} {threshold} | {}", ex.join(" ; "));
                }
            }
        }
        let _ = writeln!(s, "end");
    }
    if !file.types.is_empty() {
        let _ = writeln!(s, "typetable");
        for t in &file.types {
            let _ = writeln!(s, "type {} {}", t.kind, join_arcs(&t.arcs, '>'));
            if let Some(f) = &t.forbid_h {
                let _ = writeln!(s, "forbid h {}", join_list(f));
            }
            if let Some(f) = &t.forbid_hstar {
                let _ = writeln!(s, "forbid h* {}", join_list(f));
            }
        }
        let _ = writeln!(s, "end");
    }
    s
}

pub fn write_figures(file: &FigureFile) -> String {
    let mut s = String::new();
    for sw in &file.sweeps {
        let _ = writeln!(s, "sweep {}", sw.name);
        if !sw.fixed.is_empty() {
            let _ = writeln!(s, "fixed {}", join_assign(&sw.fixed));
        }
        if !sw.allowed.is_empty() {
            let a: Vec<String> = sw
                .allowed
                .iter()
                .map(|(v, l)| format!("{v}={}", join_list(l)))
                .collect();
            let _ = writeln!(s, "allowed {}", a.join(" "));
        }
        if !sw.arcs.is_empty() {
            let _ = writeln!(s, "arcs {}", join_arcs(&sw.arcs, '>'));
        }
        if !sw.inner.is_empty() {
            let _ = writeln!(s, "inner {}", join_arcs(&sw.inner, '-'));
        }
        for c in &sw.cases {
            let _ = writeln!(s, "case {} | {}", join_assign(&c.values), join_arcs(&c.arcs, '>'));
        }
        let _ = writeln!(s, "end");
    }
    for c in &file.configs {
        let _ = writeln!(s, "config {}", c.name);
        let _ = writeln!(s, "white {}", c.white.join(" "));
        let _ = writeln!(s, "black {}", c.black.join(" "));
        let _ = writeln!(s, "edges {}", join_arcs(&c.edges, '-'));
        let _ = writeln!(s, "end");
    }
    s
}

fn data_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_ENV).map(PathBuf::from)
}

fn read_override(file: &str) -> Result<Option<String>> {
    match data_dir() {
        None => Ok(None),
        Some(dir) => {
            let path = dir.join(file);
            std::fs::read_to_string(&path).map(Some).map_err(|e| Error::Io {
                path: path.display().to_string(),
                msg: e.to_string(),
            })
        }
    }
}

/// Certificates from `$PUSHLAB_DATA/certificates.txt`, or the bundled copy.
pub fn load_certificates() -> Result<CertificateFile> {
    match read_override("certificates.txt")? {
        Some(text) => parse_certificates(&text),
        None => parse_certificates(DEFAULT_CERTIFICATES),
    }
}

/// Sweeps and configurations from `$PUSHLAB_DATA/figures.txt`, or the bundled copy.
pub fn load_figures() -> Result<FigureFile> {
    match read_override("figures.txt")? {
        Some(text) => parse_figures(&text),
        None => parse_figures(DEFAULT_FIGURES),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_data_round_trips() {
        let c = parse_certificates(DEFAULT_CERTIFICATES).unwrap();
        assert_eq!(c.certificates.len(), 3);
        assert_eq!(c.types.len(), 4);
        let text = write_certificates(&c);
        assert_eq!(parse_certificates(&text).unwrap(), c);
        assert_eq!(write_certificates(&parse_certificates(&text).unwrap()), text);

        let f = parse_figures(DEFAULT_FIGURES).unwrap();
        assert_eq!(f.sweep("t3").unwrap().cases.len(), 8);
        assert_eq!(f.sweep("t4").unwrap().cases.len(), 16);
        assert_eq!(f.configs.len(), 9);
        let text = write_figures(&f);
        assert_eq!(parse_figures(&text).unwrap(), f);
    }

    #[test]
    fn matrices_keep_empty_cells() {
        let c = parse_certificates(DEFAULT_CERTIFICATES).unwrap();
        let m = c.get("config-iii").unwrap().matrix("X+_v3").unwrap();
        assert_eq!(m.get(1, 3), None);
        assert_eq!(m.get(0, 3), Some(0));
        assert_eq!(m.cells.iter().filter(|x| x.is_none()).count(), 6);
    }

    #[test]
    fn parse_errors_point_at_lines() {
        let bad = "certificate c\nsize 2x2\nmatrix A\n1 2\n3\nend\n";
        assert!(matches!(parse_certificates(bad), Err(Error::Parse { line: 5, .. })));
        let bad = "config c\nwhite a\nblack b\nedges a-z\nend\n";
        assert!(matches!(parse_figures(bad), Err(Error::Parse { line: 4, .. })));
        let bad = "certificate c\nsize 1x1\n";
        assert!(matches!(parse_certificates(bad), Err(Error::Parse { line: 1, .. })));
    }
}
