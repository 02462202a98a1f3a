//! Matrix certificates and the four-vertex type tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bits::{bit, bits, full, to_vec};
use crate::error::{Error, Result};
use crate::tournament::{signed_nbrs, Sign, Tournament};

use super::data::{Claim, Matrix, MatrixCertificate, TypeRow};

/// One failed arc check at one entry position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub variant: String,
    pub row: usize,
    pub col: usize,
    pub tail: String,
    pub head: String,
    /// Images of tail and head.
    pub values: (usize, usize),
    /// Whether exactly one endpoint is pushed at this position.
    pub reversed: bool,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "variant {} at ({},{}): {}>{} maps to {}>{}{}",
            self.variant,
            self.row,
            self.col,
            self.tail,
            self.head,
            self.values.0,
            self.values.1,
            if self.reversed { " (reversed by push)" } else { "" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub name: String,
    pub matrices: usize,
    /// Non-empty entries over all matrices.
    pub entries: usize,
    pub arc_checks: usize,
    pub violations: Vec<Violation>,
    pub claims: Vec<ClaimResult>,
}

impl CertificateReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.claims.iter().all(|c| c.holds)
    }
}

fn lookup<'a>(c: &'a MatrixCertificate, name: &str) -> Result<&'a Matrix> {
    c.matrix(name)
        .ok_or_else(|| Error::Certificate(format!("{}: unknown matrix {name}", c.name)))
}

fn check_value(t: &Tournament, c: &MatrixCertificate, v: usize) -> Result<usize> {
    if v < t.order() {
        Ok(v)
    } else {
        Err(Error::Certificate(format!("{}: value {v} outside the target", c.name)))
    }
}

fn validate_shape(c: &MatrixCertificate, t: &Tournament) -> Result<()> {
    for (name, m) in &c.matrices {
        if m.rows != c.rows || m.cols != c.cols || m.cells.len() != c.rows * c.cols {
            return Err(Error::Certificate(format!(
                "{}: matrix {name} is {}x{}, expected {}x{}",
                c.name, m.rows, m.cols, c.rows, c.cols
            )));
        }
        for v in m.cells.iter().flatten() {
            check_value(t, c, *v)?;
        }
    }
    for (_, v) in &c.fixed {
        check_value(t, c, *v)?;
    }
    for v in &c.variants {
        for (_, m) in &v.bind {
            lookup(c, m)?;
        }
    }
    Ok(())
}

/// Every arc check of every variant at every position. Checks touching an
/// empty entry are skipped.
fn violations(c: &MatrixCertificate, t: &Tournament) -> Result<(usize, Vec<Violation>)> {
    let mut checks = 0;
    let mut out = Vec::new();
    for variant in &c.variants {
        let label = variant.sign.to_string();
        let arcs: Vec<_> = c.arcs.iter().chain(&variant.arcs).collect();
        for i in 0..c.rows {
            for j in 0..c.cols {
                let value = |v: &str| -> Result<Option<usize>> {
                    if let Some((_, x)) = c.fixed.iter().find(|(n, _)| n == v) {
                        return Ok(Some(*x));
                    }
                    match variant.bind.iter().find(|(n, _)| n == v) {
                        Some((_, m)) => Ok(lookup(c, m)?.get(i, j)),
                        None => Err(Error::Certificate(format!("{}: vertex {v} has no value", c.name))),
                    }
                };
                let pushed = |v: &str| {
                    c.push_rows.iter().any(|(n, k)| n == v && i >= *k)
                        || c.push_cols.iter().any(|(n, k)| n == v && j >= *k)
                };
                for (a, b) in &arcs {
                    let (Some(x), Some(y)) = (value(a)?, value(b)?) else {
                        continue;
                    };
                    checks += 1;
                    let reversed = pushed(a) != pushed(b);
                    let ok = if reversed { t.has_arc(y, x) } else { t.has_arc(x, y) };
                    if !ok {
                        out.push(Violation {
                            variant: label.clone(),
                            row: i,
                            col: j,
                            tail: a.clone(),
                            head: b.clone(),
                            values: (x, y),
                            reversed,
                        });
                    }
                }
            }
        }
    }
    Ok((checks, out))
}

fn list(mask: u64) -> String {
    let v: Vec<String> = to_vec(mask).iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// `S(c, s) = {M3(i,j) : M4(i,j) in N^s(c)}` over positions where both are set.
fn small_s_set(t: &Tournament, m3: &Matrix, m4: &Matrix, c: usize, s: Sign) -> u64 {
    let nb = signed_nbrs(t.graph(), c, s);
    m3.cells
        .iter()
        .zip(&m4.cells)
        .filter_map(|(&a, &b)| match (a, b) {
            (Some(a), Some(b)) if nb & bit(b) != 0 => Some(bit(a)),
            _ => None,
        })
        .fold(0, |m, x| m | x)
}

fn check_claim(c: &MatrixCertificate, t: &Tournament, claim: &Claim) -> Result<ClaimResult> {
    Ok(match claim {
        Claim::Cover { matrix, values } => {
            let have = lookup(c, matrix)?.value_mask();
            let want = values.iter().fold(0, |m, &v| m | bit(v));
            ClaimResult {
                claim: format!("{matrix} contains {}", list(want)),
                holds: want & !have == 0,
                detail: format!("values {}", list(have)),
            }
        }
        Claim::Distinct { matrix, count } => {
            let have = lookup(c, matrix)?.value_mask();
            ClaimResult {
                claim: format!("{matrix} has {count} distinct values"),
                holds: have.count_ones() as usize == *count,
                detail: format!("values {}", list(have)),
            }
        }
        Claim::SmallS {
            v3,
            v4,
            threshold,
            exceptions,
        } => {
            let (m3, m4) = (lookup(c, v3)?, lookup(c, v4)?);
            let mut stated: BTreeMap<(usize, bool), u64> = BTreeMap::new();
            for e in exceptions {
                stated.insert(
                    (e.value, e.sign == Sign::Plus),
                    e.set.iter().fold(0, |m, &v| m | bit(v)),
                );
            }
            let mut mismatches = Vec::new();
            for value in 0..t.order() {
                for sign in [Sign::Plus, Sign::Minus] {
                    let s = small_s_set(t, m3, m4, value, sign);
                    let small = (s.count_ones() as usize) < *threshold;
                    match stated.get(&(value, sign == Sign::Plus)) {
                        Some(&want) if !small || want != s => {
                            mismatches.push(format!("S({value},{sign}) = {} but stated {}", list(s), list(want)))
                        }
                        None if small => mismatches.push(format!("S({value},{sign}) = {} is unlisted", list(s))),
                        _ => {}
                    }
                }
            }
            ClaimResult {
                claim: format!("S-sets of {v3} over {v4} below {threshold} are exactly the listed ones"),
                holds: mismatches.is_empty(),
                detail: if mismatches.is_empty() {
                    format!("{} exceptions confirmed", exceptions.len())
                } else {
                    mismatches.join("; ")
                },
            }
        }
    })
}

/// Checks every arc at every non-empty position of every variant, then
/// the certificate's claims.
pub fn verify_matrix_certificate(c: &MatrixCertificate, t: &Tournament) -> Result<CertificateReport> {
    validate_shape(c, t)?;
    let (arc_checks, violations) = violations(c, t)?;
    let claims = c
        .claims
        .iter()
        .map(|claim| check_claim(c, t, claim))
        .collect::<Result<_>>()?;
    Ok(CertificateReport {
        name: c.name.clone(),
        matrices: c.matrices.len(),
        entries: c.matrices.iter().map(|(_, m)| m.cells.iter().flatten().count()).sum(),
        arc_checks,
        violations,
        claims,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MutationReport {
    pub mutants: usize,
    pub detected: usize,
    /// Descriptions of mutants that produced no new violation.
    pub undetected: Vec<String>,
}

impl MutationReport {
    pub fn ok(&self) -> bool {
        self.undetected.is_empty()
    }
}

/// Single-point mutants: every non-empty entry raised by one (mod the target
/// order) and every listed arc reversed. A mutant counts as detected when its
/// report contains a violation absent from the unmutated report.
pub fn mutation_test(c: &MatrixCertificate, t: &Tournament) -> Result<MutationReport> {
    let base: BTreeSet<Violation> = violations(c, t)?.1.into_iter().collect();
    let mut report = MutationReport::default();
    let mut judge = |mutant: &MatrixCertificate, label: String| -> Result<()> {
        report.mutants += 1;
        let fresh = violations(mutant, t)?.1.into_iter().any(|v| !base.contains(&v));
        if fresh {
            report.detected += 1;
        } else {
            report.undetected.push(label);
        }
        Ok(())
    };
    for (mi, (name, m)) in c.matrices.iter().enumerate() {
        for i in 0..m.rows {
            for j in 0..m.cols {
                let Some(v) = m.get(i, j) else { continue };
                let mut mutant = c.clone();
                mutant.matrices[mi].1.set(i, j, Some((v + 1) % t.order()));
                judge(&mutant, format!("{name}({i},{j}) {v}->{}", (v + 1) % t.order()))?;
            }
        }
    }
    for k in 0..c.arcs.len() {
        let mut mutant = c.clone();
        let (a, b) = mutant.arcs[k].clone();
        mutant.arcs[k] = (b.clone(), a.clone());
        judge(&mutant, format!("arc {a}>{b} reversed"))?;
    }
    for vi in 0..c.variants.len() {
        for k in 0..c.variants[vi].arcs.len() {
            let mut mutant = c.clone();
            let (a, b) = mutant.variants[vi].arcs[k].clone();
            mutant.variants[vi].arcs[k] = (b.clone(), a.clone());
            judge(&mutant, format!("variant {} arc {a}>{b} reversed", c.variants[vi].sign))?;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeResult {
    pub kind: usize,
    /// `"h"` or `"h*"`.
    pub map: &'static str,
    pub achievable: u64,
    pub stated_forbidden: Option<u64>,
}

impl TypeResult {
    /// True when nothing is stated or the stated set is exactly the complement.
    pub fn matches(&self, order: usize) -> bool {
        self.stated_forbidden
            .is_none_or(|f| f == full(order) & !self.achievable)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTableReport {
    pub order: usize,
    pub results: Vec<TypeResult>,
}

impl TypeTableReport {
    pub fn ok(&self) -> bool {
        self.results.iter().all(|r| r.matches(self.order))
    }

    pub fn get(&self, kind: usize, map: &str) -> Option<&TypeResult> {
        self.results.iter().find(|r| r.kind == kind && r.map == map)
    }
}

/// Values of `b` reachable when `a1, a2` are fixed, over every image of `x`
/// with `x` pushed or not.
fn achievable_b(t: &Tournament, row: &TypeRow, a1: usize, a2: usize) -> Result<u64> {
    let n = t.order();
    let mut acc = 0u64;
    for b in 0..n {
        'ext: for x in 0..n {
            for push in [false, true] {
                let value = |v: &str| match v {
                    "a1" => Ok(a1),
                    "a2" => Ok(a2),
                    "b" => Ok(b),
                    "x" => Ok(x),
                    other => Err(Error::Certificate(format!("type {}: unknown vertex {other}", row.kind))),
                };
                let mut fits = true;
                for (p, q) in &row.arcs {
                    let (u, v) = (value(p)?, value(q)?);
                    let flip = push && ((p == "x") != (q == "x"));
                    fits &= if flip { t.has_arc(v, u) } else { t.has_arc(u, v) };
                }
                if fits {
                    acc |= bit(b);
                    break 'ext;
                }
            }
        }
    }
    Ok(acc)
}

/// Recomputes the achievable values of `b` for each type under `h`
/// (`a1=0, a2=1`) and `h*` (`a1=a2=0`), and compares with the stated sets.
pub fn check_type_tables(rows: &[TypeRow], t: &Tournament) -> Result<TypeTableReport> {
    let mask = |l: &Option<Vec<usize>>| l.as_ref().map(|v| v.iter().fold(0u64, |m, &x| m | bit(x)));
    let mut results = Vec::new();
    for row in rows {
        results.push(TypeResult {
            kind: row.kind,
            map: "h",
            achievable: achievable_b(t, row, 0, 1)?,
            stated_forbidden: mask(&row.forbid_h),
        });
        results.push(TypeResult {
            kind: row.kind,
            map: "h*",
            achievable: achievable_b(t, row, 0, 0)?,
            stated_forbidden: mask(&row.forbid_hstar),
        });
    }
    Ok(TypeTableReport {
        order: t.order(),
        results,
    })
}

/// Values of a mask, for reports.
pub fn value_list(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reducibility::data::{parse_certificates, DEFAULT_CERTIFICATES};
    use crate::tournament::paley;

    fn pal7() -> Tournament {
        paley(7).unwrap()
    }

    #[test]
    fn config_i_and_ii_validate() {
        let file = parse_certificates(DEFAULT_CERTIFICATES).unwrap();
        for name in ["config-i", "config-ii"] {
            let r = verify_matrix_certificate(file.get(name).unwrap(), &pal7()).unwrap();
            assert!(r.ok(), "{name}: {:?}", r);
        }
        let r = verify_matrix_certificate(file.get("config-i").unwrap(), &pal7()).unwrap();
        assert_eq!((r.matrices, r.entries), (5, 45));
    }

    #[test]
    fn config_iii_has_one_bad_entry() {
        let file = parse_certificates(DEFAULT_CERTIFICATES).unwrap();
        let r = verify_matrix_certificate(file.get("config-iii").unwrap(), &pal7()).unwrap();
        assert!(r.claims.iter().all(|c| c.holds), "{:?}", r.claims);
        let cells: BTreeSet<_> = r
            .violations
            .iter()
            .map(|v| (v.variant.as_str(), v.row, v.col))
            .collect();
        assert_eq!(cells.into_iter().collect::<Vec<_>>(), vec![("+", 0, 3)]);
    }

    #[test]
    fn type_one_matches_the_stated_values() {
        let file = parse_certificates(DEFAULT_CERTIFICATES).unwrap();
        let r = check_type_tables(&file.types, &pal7()).unwrap();
        assert_eq!(value_list(r.get(1, "h").unwrap().achievable), vec![0, 1, 3, 5]);
        assert_eq!(r.get(1, "h*").unwrap().achievable, full(7));
        assert_eq!(r.get(4, "h").unwrap().achievable, full(7) & !1);
        assert!(r.ok(), "{:?}", r);
    }

    #[test]
    fn mutants_of_config_i_are_all_caught() {
        let file = parse_certificates(DEFAULT_CERTIFICATES).unwrap();
        let r = mutation_test(file.get("config-i").unwrap(), &pal7()).unwrap();
        assert_eq!(r.mutants, 45 + 5 + 2);
        assert!(r.ok(), "{:?}", r.undetected);
    }

    #[test]
    fn unknown_matrix_is_an_error() {
        let mut c = parse_certificates(DEFAULT_CERTIFICATES)
            .unwrap()
            .get("config-ii")
            .unwrap()
            .clone();
        c.variants[0].bind[0].1 = "nope".into();
        assert!(verify_matrix_certificate(&c, &pal7()).is_err());
        let mut c = parse_certificates(DEFAULT_CERTIFICATES)
            .unwrap()
            .get("config-ii")
            .unwrap()
            .clone();
        c.matrices[0].1.rows = 4;
        assert!(verify_matrix_certificate(&c, &pal7()).is_err());
    }
}
