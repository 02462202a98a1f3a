//! Certificates, case sweeps and extension tests for reducible configurations.
//!
//! Each concrete certificate (matrices, drawn cases, type tables) is checked
//! verbatim against its target. [`boundary_extension_check`] is a separate,
//! generic and deliberately conservative test: it knows nothing about
//! minimality or helper arcs, so a `false` from it does not mean a
//! configuration is irreducible.

mod boundary;
mod certificate;
pub mod data;
mod search;
mod sweep;

pub use boundary::{boundary_extension_check, boundary_extension_report, BoundaryReport, Route};
pub use certificate::{
    check_type_tables, mutation_test, value_list, verify_matrix_certificate, CertificateReport, ClaimResult,
    MutationReport, TypeResult, TypeTableReport, Violation,
};
pub use data::{
    load_certificates, load_figures, parse_certificates, parse_figures, write_certificates, write_figures,
    CertificateFile, Configuration, FigureFile, MatrixCertificate, Sweep,
};
pub use search::{search_six_vertex_targets, target_suite, SuiteOutcome, SUITE_CONFIGS};
pub use sweep::{
    check_k4_push_classes, exhaustive_sweep, sweep_t3, sweep_t4, validate_sweep, CaseSweepReport, ExhaustiveReport,
    K4Report, SweepReport,
};
