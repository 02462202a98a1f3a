//! Running the subcubic suite against other targets.

use crate::error::{Error, Result};
use crate::io::builtin;
use crate::par::Exec;
use crate::tournament::{enumerate_tournaments, Tournament};

use super::boundary::{boundary_extension_report, Route};
use super::data::load_figures;
use super::sweep::{check_k4_push_classes, exhaustive_sweep};

/// The configurations tried by the boundary test, in order.
pub const SUITE_CONFIGS: [&str; 4] = ["fig3-i", "fig3-ii", "fig3-iii", "fig3-iv"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub index: usize,
    pub target: Tournament,
    /// Name of the first failing check, or `None` if every check passed.
    pub first_failure: Option<String>,
}

/// Runs the K4, T3 and T4 orientation sweeps and then the boundary test on
/// each subcubic configuration, stopping at the first failure.
pub fn target_suite(t: &Tournament, exec: Exec) -> Result<Option<String>> {
    let k4 = check_k4_push_classes(t)?;
    if k4.pushable != k4.orientations {
        return Ok(Some("k4".into()));
    }
    for name in ["t3", "t4"] {
        if !exhaustive_sweep(&builtin(name)?, t, exec)?.ok() {
            return Ok(Some(name.into()));
        }
    }
    let figs = load_figures()?;
    for name in SUITE_CONFIGS {
        let c = figs
            .config(name)
            .ok_or_else(|| Error::Configuration(format!("configuration {name} missing from the figure data")))?;
        if !boundary_extension_report(c, t, Route::Auto, exec)?.holds {
            return Ok(Some(name.into()));
        }
    }
    Ok(None)
}

/// The suite over all 56 tournaments of order 6. Refuses to run unless
/// `long` is set.
pub fn search_six_vertex_targets(long: bool, exec: Exec) -> Result<Vec<SuiteOutcome>> {
    if !long {
        return Err(Error::InvalidArgument(
            "the six-vertex search is long-running; pass the long flag".into(),
        ));
    }
    enumerate_tournaments(6, false)?
        .iter()
        .enumerate()
        .map(|(index, t)| {
            Ok(SuiteOutcome {
                index,
                target: t.clone(),
                first_failure: target_suite(t, exec)?,
            })
        })
        .collect()
}
