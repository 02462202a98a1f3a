use pushlab::tournament::{
    canonical_code, check_closure_equations, check_property_recursion, check_transitivity, enumerate_tournaments,
    from_code, ft, has_property, min_pattern_count, paley,
};
use pushlab::{Error, PropertySpec};

#[test]
fn class_counts_up_to_seven() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_tournaments(n, false).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 1, 2, 4, 12, 56, 456]);
    assert_eq!(enumerate_tournaments(8, false).unwrap_err(), Error::EnumerationRange(8));
}

#[test]
fn representatives_are_sorted_and_decode() {
    for n in 1..=6 {
        let ts = enumerate_tournaments(n, false).unwrap();
        let codes: Vec<u64> = ts.iter().map(canonical_code).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]), "order {n}");
        for &c in &codes {
            assert_eq!(canonical_code(&from_code(n, c)), c);
        }
    }
}

#[test]
fn paley_orders() {
    for q in [3, 7, 11, 19, 23] {
        let t = paley(q).unwrap();
        assert_eq!(t.order(), q);
        assert!((0..q).all(|v| t.score(v) == (q - 1) / 2));
        if q <= 11 {
            assert_eq!(check_transitivity(&t).unwrap(), (true, true), "q = {q}");
        }
    }
    for q in [1, 5, 9, 13, 15] {
        assert!(matches!(paley(q), Err(Error::BadPaleyOrder { .. })), "q = {q}");
    }
}

#[test]
fn closure_equations_need_a_regular_target() {
    let r = check_closure_equations(&paley(11).unwrap());
    assert_eq!(r.eq1_checked, 44);
    assert!(r.eq1_holds() && r.eq2_holds());
    // The transitive tournament has a sink, so the first equation fails.
    let tt = &enumerate_tournaments(5, false).unwrap()[0];
    assert!(!check_closure_equations(tt).eq1_holds());
}

#[test]
fn pattern_counts_on_pal7() {
    let pal = paley(7).unwrap();
    assert_eq!(min_pattern_count(&pal, 1).unwrap().0, 6);
    assert_eq!(min_pattern_count(&pal, 2).unwrap().0, 2);
}

#[test]
fn property_recursion_holds_on_paley_tournaments() {
    for q in [7, 11, 19] {
        let t = paley(q).unwrap();
        for k in 1..=q {
            let r = check_property_recursion(&t, 2, k).unwrap();
            assert!(r.holds(), "q = {q}, k = {k}");
        }
    }
    let pal = paley(7).unwrap();
    assert!(check_property_recursion(&pal, 2, 2).unwrap().non_vacuous());
}

#[test]
fn greedy_threshold_function() {
    assert_eq!(ft(3, 0).unwrap(), 4);
    assert_eq!(ft(3, 1).unwrap(), 3);
    assert_eq!(ft(3, 2).unwrap(), 2);
    assert!(ft(3, 3).is_err());
    let pal = paley(7).unwrap();
    for j in 1..3 {
        assert!(has_property(&pal, PropertySpec::new(j, ft(3, j as u64).unwrap() as usize)).unwrap());
    }
}
