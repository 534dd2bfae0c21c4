use chain_verifier::{
    casimir_restrictions, listed_irregular_restrictions, mixed_block_check, moment_closure_check, restriction_report,
};
use magnetic_phase::MagneticSystem;

#[test]
fn irregular_listed_quadratic_holds_and_cubic_does_not() {
    let sys = MagneticSystem::irregular(1.0).unwrap();
    let (r2, r3) = casimir_restrictions(&sys).unwrap();
    let (l2, l3) = listed_irregular_restrictions(r2.vars()).unwrap();
    assert_eq!(r2, l2);
    assert_ne!(r3, l3);
    // they differ by 9 eps (x6^2 + x7^2)
    let diff = &r3 - &l3;
    assert_eq!(diff.terms().len(), 2);
    let rep = restriction_report(&sys).unwrap();
    let names: Vec<(&str, bool)> = rep.checks.iter().map(|c| (c.name.as_str(), c.pass)).collect();
    assert_eq!(
        names,
        vec![
            ("Res_W C2 (listed form)", true),
            ("Res_W C3 (listed form)", false),
            ("Res_W C3 - 3 eps (Res_W C2 - eps^2)", true)
        ]
    );
}

#[test]
fn regular_restrictions_lie_in_the_generators() {
    let sys = MagneticSystem::regular(1.0).unwrap();
    let rep = restriction_report(&sys).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures());
    assert_eq!(rep.checks.len(), 4);
}

#[test]
fn sampled_bracket_checks_pass() {
    for sys in [MagneticSystem::regular(0.4).unwrap(), MagneticSystem::irregular(0.4).unwrap()] {
        let m = mixed_block_check(&sys, 10, 5).unwrap();
        assert!(m.passed(), "{:?}", m.failures());
        let c = moment_closure_check(&sys, 10, 5).unwrap();
        assert!(c.passed(), "{:?}", c.failures());
    }
}
