mod common;

use common::{moment_components, rng, slice_generators, systems};
use magnetic_phase::{
    bracket_shortcut, hamiltonian_field, moment_map, omega, random_regular_point, slice_map, twisted_bracket,
    IntegralFunction,
};

#[test]
fn moment_brackets_close_on_the_algebra() {
    let mut r = rng(10);
    for sys in systems(0.9) {
        let ps = moment_components(&sys);
        for _ in 0..100 {
            let pt = random_regular_point(&sys, &mut r).unwrap();
            let p = moment_map(&sys, &pt);
            // {P_i, P_j} = B(P, [e^i, e^j]) in coordinates
            for i in 0..sys.dim() {
                for j in 0..sys.dim() {
                    let got = twisted_bracket(&sys, &ps[i].1, &ps[j].1, &pt);
                    let mut ei = vec![0.0; sys.dim()];
                    let mut ej = vec![0.0; sys.dim()];
                    ei[i] = 1.0;
                    ej[j] = 1.0;
                    let want = sys.b(&p, &sys.bracket(&sys.num.raise(&ei), &sys.num.raise(&ej)));
                    assert!((got - want).abs() < 1e-10, "{i} {j}: {got} vs {want}");
                }
            }
        }
    }
}

#[test]
fn moment_brackets_follow_structure_constants_on_orthonormal_basis() {
    // Gell-Mann basis: B = I, so {P_i, P_j} = sum_k C_ij^k P_k
    let mut r = rng(11);
    let sys = magnetic_phase::MagneticSystem::irregular(0.3).unwrap();
    let ps = moment_components(&sys);
    for _ in 0..20 {
        let pt = random_regular_point(&sys, &mut r).unwrap();
        let p = moment_map(&sys, &pt);
        for i in 0..8 {
            for j in 0..8 {
                let want: f64 = (0..8).map(|k| sys.num.c(i, j, k) * p[k]).sum();
                assert!((twisted_bracket(&sys, &ps[i].1, &ps[j].1, &pt) - want).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn mixed_brackets_vanish() {
    let mut r = rng(12);
    for sys in systems(0.5) {
        let ps = moment_components(&sys);
        let gens = slice_generators(&sys);
        for _ in 0..100 {
            let pt = random_regular_point(&sys, &mut r).unwrap();
            for (_, p) in &ps {
                for (name, th) in &gens {
                    let b = twisted_bracket(&sys, p, th, &pt);
                    assert!(b.abs() < 1e-10, "{name}: {b}");
                    assert_eq!(bracket_shortcut(&sys, p, th, &pt), 0.0);
                }
            }
        }
    }
}

#[test]
fn slice_brackets_match_the_shifted_formula() {
    let mut r = rng(13);
    for sys in systems(0.7) {
        let gens = slice_generators(&sys);
        for _ in 0..100 {
            let pt = random_regular_point(&sys, &mut r).unwrap();
            let xi = slice_map(&sys, &pt);
            for (_, a) in &gens {
                for (_, b) in &gens {
                    let got = twisted_bracket(&sys, a, b, &pt);
                    let (IntegralFunction::Slice(sa), IntegralFunction::Slice(sb)) = (a, b) else { unreachable!() };
                    let ua = sys.project_m(&sys.num.raise(&sa.theta.float.grad(&xi)));
                    let ub = sys.project_m(&sys.num.raise(&sb.theta.float.grad(&xi)));
                    let residual = got + sys.b(&xi, &sys.bracket(&ua, &ub));
                    assert!(residual.abs() < 1e-10, "{residual}");
                    assert!((got - bracket_shortcut(&sys, a, b, &pt)).abs() < 1e-10);
                }
            }
        }
    }
}

#[test]
fn self_bracket_is_exactly_zero() {
    let mut r = rng(14);
    for sys in systems(0.4) {
        let pt = random_regular_point(&sys, &mut r).unwrap();
        for (_, f) in moment_components(&sys).iter().chain(slice_generators(&sys).iter()) {
            assert_eq!(twisted_bracket(&sys, f, f, &pt), 0.0);
        }
    }
}

#[test]
fn leibniz_expansion_agrees_with_shortcut() {
    let mut r = rng(15);
    let sys = magnetic_phase::MagneticSystem::regular(0.6).unwrap();
    let ps = moment_components(&sys);
    let gens = slice_generators(&sys);
    let prod = IntegralFunction::product(ps[2].1.clone(), ps[5].1.clone());
    let sum = IntegralFunction::Sum(vec![IntegralFunction::scaled(2.0, ps[0].1.clone()), gens[0].1.clone()]);
    for _ in 0..20 {
        let pt = random_regular_point(&sys, &mut r).unwrap();
        for (f, h) in [(&prod, &ps[3].1), (&sum, &prod), (&prod, &gens[4].1)] {
            let a = twisted_bracket(&sys, f, h, &pt);
            let b = bracket_shortcut(&sys, f, h, &pt);
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }
}

#[test]
fn moment_flow_moves_other_components_by_the_bracket() {
    // along X_{P_eta}, d/dt P_eta' = dP_eta'(X_{P_eta}) = {P_eta', P_eta} = -P_[eta, eta']
    let mut r = rng(16);
    let sys = magnetic_phase::MagneticSystem::irregular(0.5).unwrap();
    let ps = moment_components(&sys);
    let pt = random_regular_point(&sys, &mut r).unwrap();
    for i in 0..8 {
        let field = hamiltonian_field(&sys, &pt, &ps[i].1);
        for j in 0..8 {
            let h = 1e-5;
            let a = ps[j].1.evaluate(&sys, &pt.displace(&sys, &field, h).unwrap());
            let b = ps[j].1.evaluate(&sys, &pt.displace(&sys, &field, -h).unwrap());
            let rate = (a - b) / (2.0 * h);
            let p = moment_map(&sys, &pt);
            let mut ei = vec![0.0; 8];
            let mut ej = vec![0.0; 8];
            ei[i] = 1.0;
            ej[j] = 1.0;
            let pij = sys.b(&p, &sys.bracket(&ei, &ej));
            assert!((rate + pij).abs() < 1e-8, "{i} {j}: {rate} vs {}", -pij);
        }
    }
}

#[test]
fn form_is_antisymmetric() {
    let mut r = rng(17);
    for sys in systems(1.3) {
        let pt = random_regular_point(&sys, &mut r).unwrap();
        let fs: Vec<_> = moment_components(&sys).into_iter().chain(slice_generators(&sys)).collect();
        for (_, f) in &fs {
            for (_, h) in &fs {
                let a = hamiltonian_field(&sys, &pt, f);
                let b = hamiltonian_field(&sys, &pt, h);
                assert!((omega(&sys, &a, &b) + omega(&sys, &b, &a)).abs() < 1e-13);
            }
        }
    }
}
