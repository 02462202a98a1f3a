use pushlab::io::builtin;
use pushlab::reducibility::{
    boundary_extension_report, check_k4_push_classes, exhaustive_sweep, load_certificates, load_figures,
    parse_certificates, verify_matrix_certificate, write_certificates, Route, SUITE_CONFIGS,
};
use pushlab::tournament::{enumerate_tournaments, paley};
use pushlab::Exec;

#[test]
fn bundled_data_round_trips() {
    let certs = load_certificates().unwrap();
    assert_eq!(parse_certificates(&write_certificates(&certs)).unwrap(), certs);
    let figs = load_figures().unwrap();
    for name in SUITE_CONFIGS {
        assert!(figs.config(name).is_some(), "{name}");
    }
}

#[test]
fn certificates_fail_on_other_targets() {
    let certs = load_certificates().unwrap();
    let t = paley(11).unwrap();
    let c = certs.get("config-i").unwrap();
    assert!(!verify_matrix_certificate(c, &t).unwrap().ok());
}

#[test]
fn exhaustive_sweeps_agree_across_policies() {
    let pal = paley(7).unwrap();
    let g = builtin("t3").unwrap();
    let a = exhaustive_sweep(&g, &pal, Exec::Sequential).unwrap();
    let b = exhaustive_sweep(&g, &pal, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.orientations, 512);
    assert!(a.ok());
}

#[test]
fn cube_fails_into_a_five_vertex_target() {
    let g = builtin("t4").unwrap();
    let t = &enumerate_tournaments(5, false).unwrap()[0];
    let r = exhaustive_sweep(&g, t, Exec::Parallel).unwrap();
    assert!(!r.ok());
    assert_eq!(r.pushable + r.failures.len() as u64, r.orientations);
}

#[test]
fn k4_classes_on_pal7() {
    let r = check_k4_push_classes(&paley(7).unwrap()).unwrap();
    assert!(r.ok());
    assert_eq!(r.orientations, 64);
}

#[test]
fn boundary_routes_agree_on_every_configuration() {
    let figs = load_figures().unwrap();
    let pal = paley(7).unwrap();
    for c in figs.configs.iter().filter(|c| c.name.starts_with("fig7")) {
        let auto = boundary_extension_report(c, &pal, Route::Auto, Exec::Parallel).unwrap();
        let brute = boundary_extension_report(c, &pal, Route::Brute, Exec::Sequential).unwrap();
        assert_eq!(auto.holds, brute.holds, "{}", c.name);
        assert_eq!(auto.representatives, brute.representatives, "{}", c.name);
    }
}
