//! Named verification suites, as run by `pushlab verify`.

use std::fmt;
use std::str::FromStr;

use crate::corpus::{run_corpus, CorpusKind};
use crate::error::{Error, Result};
use crate::io::builtin;
use crate::mad::mad;
use crate::par::Exec;
use crate::rational::Rational;
use crate::reducibility::{
    boundary_extension_report, check_k4_push_classes, check_type_tables, load_certificates, load_figures,
    mutation_test, sweep_t3, sweep_t4, value_list, verify_matrix_certificate, CaseSweepReport, Route, SweepReport,
};
use crate::tournament::{check_closure_equations, check_transitivity, has_property, paley, PropertySpec};

/// One line of a suite. Informational lines never affect the outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub gating: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
            gating: true,
        }
    }

    pub fn info(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            gating: false,
            ..Check::new(name, pass, detail)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Paley,
    Matrices,
    T3,
    T4,
    K4,
    Types,
    MadConfigs,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Paley,
        Suite::Matrices,
        Suite::Types,
        Suite::T3,
        Suite::T4,
        Suite::K4,
        Suite::MadConfigs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Paley => "paley",
            Suite::Matrices => "matrices",
            Suite::T3 => "t3",
            Suite::T4 => "t4",
            Suite::K4 => "k4",
            Suite::Types => "types",
            Suite::MadConfigs => "mad-configs",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

fn pass_word(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

pub fn paley_checks() -> Result<Vec<Check>> {
    let pal = paley(7)?;
    let mut out = Vec::new();
    for (j, k, want) in [(1, 6, true), (2, 2, true), (1, 7, false), (2, 3, false)] {
        let p = PropertySpec::new(j, k);
        let got = has_property(&pal, p)?;
        out.push(Check::new(
            format!("Pal7 {p} {}", if want { "holds" } else { "fails" }),
            got == want,
            pass_word(got),
        ));
    }
    let r = check_closure_equations(&pal);
    out.push(Check::new(
        "Pal7 first closure equation",
        r.eq1_holds() && r.eq1_checked == 28,
        format!("{} instances, {} violations", r.eq1_checked, r.eq1_violations.len()),
    ));
    out.push(Check::new(
        "Pal7 second closure equation",
        r.eq2_holds() && r.eq2_checked == 56,
        format!("{} instances, {} violations", r.eq2_checked, r.eq2_violations.len()),
    ));
    let (vt, at) = check_transitivity(&pal)?;
    out.push(Check::new("Pal7 vertex-transitive", vt, pass_word(vt)));
    out.push(Check::new("Pal7 arc-transitive", at, pass_word(at)));
    Ok(out)
}

pub fn matrix_checks() -> Result<Vec<Check>> {
    let pal = paley(7)?;
    let file = load_certificates()?;
    let mut out = Vec::new();
    for c in &file.certificates {
        let r = verify_matrix_certificate(c, &pal)?;
        let first = r
            .violations
            .first()
            .map(|v| format!("; first: {v}"))
            .unwrap_or_default();
        out.push(Check::new(
            format!("{} entries", c.name),
            r.violations.is_empty(),
            format!(
                "{} matrices, {} entries, {} arc checks, {} violations{first}",
                r.matrices,
                r.entries,
                r.arc_checks,
                r.violations.len()
            ),
        ));
        for claim in &r.claims {
            out.push(Check::new(
                format!("{} {}", c.name, claim.claim),
                claim.holds,
                claim.detail.clone(),
            ));
        }
        let m = mutation_test(c, &pal)?;
        out.push(Check::new(
            format!("{} mutation sensitivity", c.name),
            m.ok(),
            format!(
                "{}/{} mutants detected{}",
                m.detected,
                m.mutants,
                if m.undetected.is_empty() {
                    String::new()
                } else {
                    format!("; undetected: {}", m.undetected.join(", "))
                }
            ),
        ));
    }
    Ok(out)
}

pub fn type_checks() -> Result<Vec<Check>> {
    let pal = paley(7)?;
    let file = load_certificates()?;
    let r = check_type_tables(&file.types, &pal)?;
    Ok(r.results
        .iter()
        .map(|t| {
            let name = format!("type {} under {}", t.kind, t.map);
            let detail = format!("achievable {:?}", value_list(t.achievable));
            if t.stated_forbidden.is_some() {
                Check::new(name, t.matches(r.order), detail)
            } else {
                Check::info(name, true, format!("{detail} (no stated set)"))
            }
        })
        .collect())
}

fn case_checks(out: &mut Vec<Check>, c: &CaseSweepReport) {
    let invalid: Vec<String> = c.invalid.iter().map(|(i, r)| format!("case {}: {r}", i + 1)).collect();
    out.push(Check::new(
        format!("{} drawn cases are valid maps", c.name),
        c.invalid.is_empty(),
        if invalid.is_empty() {
            format!("{} cases", c.cases)
        } else {
            invalid.join("; ")
        },
    ));
    out.push(Check::new(
        format!("{} drawn cases cover every inner orientation", c.name),
        c.missing.is_empty(),
        format!(
            "{} of {} drawn{}",
            c.orientations - c.missing.len() as u64,
            c.orientations,
            if c.repeated.is_empty() {
                String::new()
            } else {
                format!(", {} drawn twice", c.repeated.len())
            }
        ),
    ));
    out.push(Check::new(
        format!("{} every inner orientation extends within the allowed values", c.name),
        c.extendable == c.orientations,
        format!("{} of {}", c.extendable, c.orientations),
    ));
}

fn sweep_checks(name: &str, r: &SweepReport) -> Vec<Check> {
    let mut out = Vec::new();
    for c in &r.cases {
        case_checks(&mut out, c);
    }
    out.push(Check::new(
        format!(
            "all {} orientations of {name} map pushably to Pal7",
            r.exhaustive.orientations
        ),
        r.exhaustive.ok(),
        format!("{} verified witnesses", r.exhaustive.pushable),
    ));
    out
}

pub fn t3_checks(exec: Exec) -> Result<Vec<Check>> {
    Ok(sweep_checks("T3", &sweep_t3(&paley(7)?, exec)?))
}

pub fn t4_checks(exec: Exec) -> Result<Vec<Check>> {
    Ok(sweep_checks("T4", &sweep_t4(&paley(7)?, exec)?))
}

pub fn k4_checks() -> Result<Vec<Check>> {
    let r = check_k4_push_classes(&paley(7)?)?;
    Ok(vec![
        Check::new(
            "K4 orientations form 2 push classes",
            r.class_keys.len() == 2,
            format!("{} classes over {} orientations", r.class_keys.len(), r.orientations),
        ),
        Check::new(
            "K4 classes are Pal7[{0,1,2,4}] and Pal7[{1,2,3,4}]",
            r.ok(),
            format!(
                "class keys {:?}, representative keys {:?}",
                r.class_keys, r.representative_keys
            ),
        ),
        Check::new(
            "every K4 orientation maps pushably to Pal7",
            r.pushable == r.orientations,
            format!("{} of {}", r.pushable, r.orientations),
        ),
    ])
}

/// Configuration coverage for `mad < 3`, the discharging rule, and the
/// conservative boundary test on each configuration (informational).
pub fn mad_config_checks(seed: u64, exec: Exec) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let m = mad(&builtin("fig2ii")?);
    out.push(Check::new(
        "mad of fig2ii is 8/3",
        m == Rational::new(8, 3),
        m.to_string(),
    ));
    let r = run_corpus(CorpusKind::MadCover, 300, seed, exec)?;
    out.push(Check::new(
        "every sampled graph with mad < 3 contains a configuration",
        r.ok(),
        format!("{} graphs, seed {seed}, {} violations", r.count, r.violations.len()),
    ));
    let pal = paley(7)?;
    let figs = load_figures()?;
    for c in figs.configs.iter().filter(|c| c.name.starts_with("fig7")) {
        let b = boundary_extension_report(c, &pal, Route::Auto, exec)?;
        out.push(Check::info(
            format!("{} boundary extension into Pal7 (conservative)", c.name),
            b.holds,
            format!(
                "{}; {} of {} orientations up to black pushes, {} route",
                pass_word(b.holds),
                b.representatives,
                b.orientations,
                b.route
            ),
        ));
    }
    Ok(out)
}

pub fn run_suite(suite: Suite, seed: u64, exec: Exec) -> Result<Vec<Check>> {
    match suite {
        Suite::Paley => paley_checks(),
        Suite::Matrices => matrix_checks(),
        Suite::Types => type_checks(),
        Suite::T3 => t3_checks(exec),
        Suite::T4 => t4_checks(exec),
        Suite::K4 => k4_checks(),
        Suite::MadConfigs => mad_config_checks(seed, exec),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, seed, exec)?);
            }
            Ok(out)
        }
    }
}

/// True when every gating check passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().filter(|c| c.gating).all(|c| c.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley_suite_passes() {
        assert!(all_pass(&paley_checks().unwrap()));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn k4_suite_passes() {
        assert!(all_pass(&k4_checks().unwrap()));
    }
}
