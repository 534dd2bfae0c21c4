mod common;

use std::time::Instant;

use common::{moment_components, rng, slice_generators};
use lie_core::exp_map;
use magnetic_phase::{
    casimir_flow, closed_form_x, conservation_json, conservation_report, integrate_field, integrate_flow,
    kinetic_energy, moment_map, random_regular_point, write_trajectory_csv, IntegralFunction, MagneticError,
    MagneticSystem, PhasePoint,
};
use invariant_solver::casimirs_su3;

#[test]
fn free_geodesic_is_one_parameter_subgroup() {
    let mut r = rng(20);
    for sys in [MagneticSystem::regular(0.0).unwrap(), MagneticSystem::irregular(0.0).unwrap()] {
        let pt = random_regular_point(&sys, &mut r).unwrap();
        let traj = integrate_flow(&sys, &pt, 2.0, 1e-3).unwrap();
        let last = traj.points.last().unwrap();
        assert_eq!(last.x, pt.x);
        let t = *traj.times.last().unwrap();
        let xf: Vec<f64> = pt.x_full(&sys).iter().map(|c| c * t).collect();
        let want = pt.g.mul(&exp_map(&sys.num, &xf).unwrap());
        let d = (want.matrix() - last.g.matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(d < 1e-10, "{d}");
    }
}

#[test]
fn irregular_fiber_matches_closed_form() {
    let sys = MagneticSystem::irregular(0.1).unwrap();
    let mut r = rng(21);
    let pt = random_regular_point(&sys, &mut r).unwrap();
    let start = Instant::now();
    let traj = integrate_flow(&sys, &pt, 10.0, 1e-3).unwrap();
    assert!(start.elapsed().as_secs() < 60);
    let mut worst = 0.0f64;
    let h0 = kinetic_energy(&sys, &pt);
    let mut h_drift = 0.0f64;
    for (t, p) in traj.times.iter().zip(&traj.points).step_by(50) {
        let want = closed_form_x(&sys, &pt.x, *t).unwrap();
        worst = worst.max(p.x.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
        h_drift = h_drift.max((kinetic_energy(&sys, p) - h0).abs());
    }
    assert!(worst < 1e-8, "{worst}");
    assert!(h_drift < 1e-10, "{h_drift}");
    assert_eq!(traj.times.len(), traj.points.len());
    assert!(traj.times.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn integrals_are_conserved_with_negative_control() {
    let sys = MagneticSystem::irregular(1.0).unwrap();
    let mut r = rng(22);
    let pt = random_regular_point(&sys, &mut r).unwrap();
    let traj = integrate_flow(&sys, &pt, 3.0, 1e-3).unwrap();
    let mut fs = moment_components(&sys);
    fs.extend(slice_generators(&sys));
    let vars = std::sync::Arc::new(sys.alg.coordinate_names.clone());
    fs.push(("x4".into(), IntegralFunction::slice(&sys, poly_engine::Polynomial::var(&vars, 3)).unwrap()));
    let rep = conservation_report(&sys, &traj, &fs, 1e-8).unwrap();
    for e in &rep[..9] {
        assert!(e.pass, "{} drifted {}", e.function, e.max_drift);
    }
    let control = rep.last().unwrap();
    assert!(!control.pass && control.max_drift > 1e-2);
    let json = conservation_json(&rep).unwrap();
    let back: Vec<magnetic_phase::ConservationEntry> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, rep);
}

#[test]
fn regular_integrals_are_conserved() {
    let sys = MagneticSystem::regular(1.0).unwrap();
    let mut r = rng(23);
    let pt = random_regular_point(&sys, &mut r).unwrap();
    let traj = integrate_flow(&sys, &pt, 3.0, 1e-3).unwrap();
    let mut fs = moment_components(&sys);
    fs.extend(slice_generators(&sys));
    assert_eq!(fs.len(), 13);
    for e in conservation_report(&sys, &traj, &fs, 1e-8).unwrap() {
        assert!(e.pass, "{} drifted {}", e.function, e.max_drift);
    }
}

#[test]
fn casimir_flow_matches_integration() {
    let mut r = rng(24);
    for sys in [MagneticSystem::regular(0.7).unwrap(), MagneticSystem::irregular(0.7).unwrap()] {
        let (c2, c3) = casimirs_su3(&sys.alg).unwrap();
        let pt = random_regular_point(&sys, &mut r).unwrap();
        for c in [c2, c3] {
            let f = IntegralFunction::slice(&sys, c.clone()).unwrap();
            let traj = integrate_field(&sys, &pt, Some(&f), 0.25, 2.5e-4).unwrap();
            let xi = sys.shift(&pt.x_full(&sys));
            let grad = sys.num.raise(&poly_engine::FloatPoly::new(&c).grad(&xi));
            let exact = casimir_flow(&sys, &pt, &grad, 0.25).unwrap();
            let a = moment_map(&sys, traj.points.last().unwrap());
            let b = moment_map(&sys, &exact);
            let d = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            assert!(d < 1e-9, "{d}");
            // the fibre coordinate moves only by the subgroup, so slice invariants stay put
            let r0 = c.evaluate_f64(&xi).unwrap();
            let r1 = c.evaluate_f64(&sys.shift(&traj.points.last().unwrap().x_full(&sys))).unwrap();
            assert!((r0 - r1).abs() < 1e-9 * (1.0 + r0.abs()), "{}", r0 - r1);
        }
    }
}

#[test]
fn bad_steps_are_rejected() {
    let sys = MagneticSystem::irregular(0.1).unwrap();
    let pt = PhasePoint::identity(&sys, vec![0.1; 4]).unwrap();
    assert!(matches!(integrate_flow(&sys, &pt, 1.0, 0.0), Err(MagneticError::BadStep { .. })));
    assert!(matches!(integrate_flow(&sys, &pt, -1.0, 0.1), Err(MagneticError::BadStep { .. })));
    // a huge step leaves the unitary group by far more than the tolerance
    let big = PhasePoint::identity(&sys, vec![3.0; 4]).unwrap();
    assert!(matches!(integrate_flow(&sys, &big, 2.0, 1.0), Err(MagneticError::Drift { .. })));
}

#[test]
fn csv_layout() {
    let sys = MagneticSystem::regular(0.2).unwrap();
    let pt = PhasePoint::identity(&sys, vec![0.1, 0.2, 0.3, 0.4, 0.5, 0.6]).unwrap();
    let traj = integrate_flow(&sys, &pt, 0.01, 1e-3).unwrap();
    let fs = slice_generators(&sys);
    let mut buf = Vec::new();
    write_trajectory_csv(&mut buf, &sys, &traj, &fs).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + traj.points.len());
    let ncols = 1 + 18 + 6 + fs.len();
    for l in &lines {
        assert_eq!(l.split(',').count(), ncols);
    }
    assert!(lines[0].starts_with("t,re_g11,im_g11,re_g12"));
    assert_eq!(traj.method.integrator, "rk4");
}
