use chain_verifier::{
    a_matrix, a_matrix_minors, a_matrix_rank, expected_minors, phi_relation_irregular, phi_residual, PhiForm,
};
use magnetic_phase::{random_regular_point, MagneticSystem, PhasePoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn a_matrix_shape_and_linearity() {
    let sys = MagneticSystem::irregular(1.0).unwrap();
    let a = a_matrix(&sys).unwrap();
    assert_eq!(a.len(), 3);
    assert!(a.iter().all(|r| r.len() == 4));
    for row in &a {
        for p in row {
            assert!(p.terms().keys().all(|m| m.0.iter().sum::<u32>() == 1));
        }
    }
}

#[test]
fn minors_are_coordinate_times_norm() {
    let sys = MagneticSystem::irregular(1.0).unwrap();
    assert_eq!(a_matrix_minors(&sys).unwrap(), expected_minors(&sys).unwrap());
}

#[test]
fn a_matrix_rank_is_full_off_zero() {
    let sys = MagneticSystem::irregular(1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..20 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        assert_eq!(a_matrix_rank(&sys, &x).unwrap(), 3);
    }
    assert_eq!(a_matrix_rank(&sys, &[0.0; 4]).unwrap(), 0);
}

#[test]
fn a_matrix_needs_the_irregular_case() {
    let sys = MagneticSystem::regular(1.0).unwrap();
    assert!(a_matrix(&sys).is_err());
    assert!(phi_relation_irregular(&sys, &PhiForm::corrected(), 1, 0).is_err());
}

#[test]
fn shifted_cubic_relation_holds() {
    for eps in [0.3, 1.0, 2.5] {
        let sys = MagneticSystem::irregular(eps).unwrap();
        let r = phi_relation_irregular(&sys, &PhiForm::corrected(), 50, 7).unwrap();
        assert!(r < 1e-10 * (1.0 + eps.powi(3)), "eps {eps}: {r:e}");
    }
}

#[test]
fn listed_cubic_relation_does_not_hold() {
    let sys = MagneticSystem::irregular(1.0).unwrap();
    let r = phi_relation_irregular(&sys, &PhiForm::Printed, 50, 7).unwrap();
    assert!(r > 1e-2, "{r:e}");
}

#[test]
fn perturbed_relation_is_detected() {
    let sys = MagneticSystem::irregular(1.0).unwrap();
    let r = phi_relation_irregular(&sys, &PhiForm::Shifted { a: 3.01, b: 1.0 }, 20, 8).unwrap();
    assert!(r > 1e-4);
    let r = phi_relation_irregular(&sys, &PhiForm::Shifted { a: 3.0, b: 1.01 }, 20, 8).unwrap();
    assert!(r > 1e-4);
}

#[test]
fn relations_agree_without_field() {
    // at eps = 0 both sides reduce to C3(P), which vanishes on the slice
    let sys = MagneticSystem::irregular(0.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        assert!(phi_residual(&sys, &pt, &PhiForm::Printed).unwrap().abs() < 1e-10);
        assert!(phi_residual(&sys, &pt, &PhiForm::corrected()).unwrap().abs() < 1e-10);
    }
}

#[test]
fn shifted_relation_at_the_zero_section() {
    // P = Ad(g)(eps W'): C3 = 6 eps^3, C2 = 3 eps^2
    let sys = MagneticSystem::irregular(0.7).unwrap();
    let pt = PhasePoint::identity(&sys, vec![0.0; 4]).unwrap();
    assert!(phi_residual(&sys, &pt, &PhiForm::corrected()).unwrap().abs() < 1e-12);
}
