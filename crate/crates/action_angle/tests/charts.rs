use action_angle::{default_offset, normalizer, torus_shift, AngleChart, AngleError, LiouvilleChart};
use magnetic_phase::{casimir_flow, integrate_flow, kinetic_energy, random_regular_point, CaseTag, MagneticSystem};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn systems() -> [MagneticSystem; 2] {
    [MagneticSystem::regular(0.9).unwrap(), MagneticSystem::irregular(0.9).unwrap()]
}

#[test]
fn reference_point_has_the_offset() {
    for sys in systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(81);
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        let ch = LiouvilleChart::new(&sys, &pt).unwrap();
        let p = ch.params(&sys, &pt, None).unwrap();
        for (a, b) in p.iter().zip(default_offset(sys.case_tag)) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}

#[test]
fn angles_do_not_see_the_representative() {
    for sys in systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(82);
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        let ch = LiouvilleChart::new(&sys, &pt).unwrap();
        let alpha: Vec<f64> = (0..sys.sub.a_indices.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let other = pt.right_by_subgroup(&sys, &alpha).unwrap();
        let a = ch.rescaled_angles(&sys, &pt, None).unwrap();
        let b = ch.rescaled_angles(&sys, &other, None).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9, "{:?}: {x} {y}", sys.case_tag);
        }
    }
}

#[test]
fn right_torus_shift_moves_angles_by_its_parameters() {
    let sys = MagneticSystem::regular(0.9).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for _ in 0..10 {
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        let ch = LiouvilleChart::new(&sys, &pt).unwrap();
        let p0 = ch.params(&sys, &pt, None).unwrap();
        let s = [rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)];
        // continue the section crossing along the path
        let mut p1 = p0.clone();
        for step in 1..=20 {
            let f = step as f64 / 20.0;
            let q = torus_shift(&sys, &pt, &[f * s[0], f * s[1]]).unwrap();
            p1 = ch.params(&sys, &q, Some(&p1)).unwrap();
        }
        for k in 0..2 {
            assert!((p1[k] - p0[k] - s[k]).abs() < 1e-8, "{p0:?} {p1:?} {s:?}");
        }
    }
}

#[test]
fn branches_differ_by_full_turns() {
    let sys = MagneticSystem::regular(0.9).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(84);
    let pt = random_regular_point(&sys, &mut rng).unwrap();
    let ch = LiouvilleChart::new(&sys, &pt).unwrap();
    let p0 = ch.params(&sys, &pt, None).unwrap();
    let shifted = [p0[0] + TAU, p0[1] - TAU];
    let p1 = ch.params(&sys, &pt, Some(&shifted)).unwrap();
    for k in 0..2 {
        let turns = (p1[k] - p0[k]) / TAU;
        assert!((turns - turns.round()).abs() < 1e-10);
        assert!(turns.round().abs() >= 1.0);
    }
    // a full turn of the frame is the identity
    let q = torus_shift(&sys, &pt, &[TAU, 0.0]).unwrap();
    assert!((q.g.matrix() - pt.g.matrix()).norm() < 1e-10);
}

#[test]
fn frequencies_are_constant_along_action_flows() {
    for sys in systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(85);
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        let ch = LiouvilleChart::new(&sys, &pt).unwrap();
        let om0 = ch.frequency_matrix(&sys, &pt).unwrap();
        for g in ch.casimirs.action_gradients(&sys, &pt) {
            for t in [0.05, 0.2] {
                let q = casimir_flow(&sys, &pt, &g, t).unwrap();
                let c = LiouvilleChart::new(&sys, &q).unwrap();
                let om = c.frequency_matrix(&sys, &q).unwrap();
                assert!((&om - &om0).amax() < 1e-5, "{om} {om0}");
            }
        }
    }
}

#[test]
fn geodesic_flow_is_linear_in_rescaled_angles() {
    for sys in [MagneticSystem::regular(1.0).unwrap(), MagneticSystem::irregular(1.0).unwrap()] {
        let mut rng = ChaCha8Rng::seed_from_u64(86);
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        let ch = LiouvilleChart::new(&sys, &pt).unwrap();
        let traj = integrate_flow(&sys, &pt, 5.0, 1e-3).unwrap();
        let a0 = ch.actions(&sys, &pt);
        let mut guess = ch.params(&sys, &pt, None).unwrap();
        let mut samples = Vec::new();
        for (t, q) in traj.times.iter().zip(&traj.points).step_by(50) {
            for (a, b) in ch.actions(&sys, q).iter().zip(&a0) {
                assert!((a - b).abs() < 1e-8);
            }
            guess = ch.params(&sys, q, Some(&guess)).unwrap();
            samples.push((*t, ch.rescaled_from_params(&sys, q, &guess).unwrap()));
        }
        // H is an affine function of the actions: 1/2 J2 + const, or the ratio H/R
        let rate: Vec<f64> = match sys.case_tag {
            CaseTag::Regular => vec![0.5, 0.0],
            CaseTag::Irregular => vec![kinetic_energy(&sys, &pt) / a0[0]],
        };
        let start = &samples[0].1;
        for (t, v) in &samples {
            for k in 0..v.len() {
                assert!((v[k] - start[k] - rate[k] * t).abs() < 1e-4, "{:?} t={t} k={k}", sys.case_tag);
            }
        }
    }
}

#[test]
fn chart_record_round_trips() {
    for sys in systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(87);
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        let ch = LiouvilleChart::new(&sys, &pt).unwrap();
        let rec = ch.chart(&sys, &pt).unwrap();
        assert!(rec.phi.iter().all(|a| (0.0..TAU).contains(a)));
        assert_eq!(rec.omega.len(), 2);
        let text = serde_json::to_string(&rec).unwrap();
        let back: AngleChart = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
        assert_eq!(ch.chart(&sys, &pt).unwrap(), rec);
    }
}

#[test]
fn singular_frequencies_are_rejected() {
    assert!(matches!(normalizer(&DMatrix::zeros(2, 1)), Err(AngleError::SingularFrequency(_))));
    assert!(matches!(normalizer(&DMatrix::zeros(2, 2)), Err(AngleError::Shape(_))));
    // the zero section has a degenerate torus frame in the irregular case
    let sys = MagneticSystem::irregular(0.9).unwrap();
    let pt = magnetic_phase::PhasePoint::identity(&sys, vec![0.0; 4]).unwrap();
    assert!(LiouvilleChart::new(&sys, &pt).is_err());
}
