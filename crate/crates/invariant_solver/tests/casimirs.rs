use std::sync::Arc;

use invariant_solver::{casimir_count, casimirs_su3, independence_rank, restrict_shift, EpsMode};
use lie_core::su::{irregular_w, regular_w};
use lie_core::{build_su2, build_su3_chevalley, build_su3_gellmann, centralizer_of, NumericAlgebra, Scalar, SubalgebraSpec};
use poly_engine::{lie_poisson_bracket, FloatPoly, Polynomial, PoissonStructure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

fn var(v: &Arc<Vec<String>>, i: usize) -> Polynomial {
    Polynomial::var(v, i)
}

#[test]
fn casimirs_are_central() {
    for alg in [build_su3_gellmann(), build_su3_chevalley()] {
        let (c2, c3) = casimirs_su3(&alg).unwrap();
        let ps = PoissonStructure::new(&alg);
        for i in 0..8 {
            let x = var(ps.vars(), i);
            assert!(ps.bracket(&c2, &x).unwrap().is_zero());
            assert!(ps.bracket(&c3, &x).unwrap().is_zero());
        }
        assert!(lie_poisson_bracket(&c2, &c3, &alg).unwrap().is_zero());
    }
}

#[test]
fn quadratic_casimir_is_the_form() {
    let g = build_su3_gellmann();
    let (c2, _) = casimirs_su3(&g).unwrap();
    let v = c2.vars().clone();
    let sum = (0..8).fold(Polynomial::zero(&v), |a, i| &a + &var(&v, i).pow(2).unwrap());
    assert_eq!(c2, sum);
    let c = build_su3_chevalley();
    let (c2, _) = casimirs_su3(&c).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let p: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let val = c2.evaluate_f64(&p).unwrap();
        let want: f64 = p[..2].iter().map(|x| x * x).sum::<f64>() + 4.0 * p[2..].iter().map(|x| x * x).sum::<f64>();
        assert!((val - want).abs() < 1e-12);
        assert!(val > 0.0);
    }
}

#[test]
fn cubic_casimir_against_matrices() {
    // C3(Y) = i tr(Y^3) evaluated directly on the matrix
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for alg in [build_su3_gellmann(), build_su3_chevalley()] {
        let (_, c3) = casimirs_su3(&alg).unwrap();
        let num = NumericAlgebra::new(&alg);
        for _ in 0..10 {
            let p: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let m = num.to_matrix(&p);
            let t = (&m * &m * &m).trace();
            let want = -t.im;
            assert!((c3.evaluate_f64(&p).unwrap() - want).abs() < 1e-10);
        }
    }
}

#[test]
fn irregular_restrictions() {
    let g = build_su3_gellmann();
    let w = irregular_w(&g);
    let sub = centralizer_of(&g, &w).unwrap();
    let (c2, c3) = casimirs_su3(&g).unwrap();
    let r2 = restrict_shift(&c2, &sub, &w, &EpsMode::Symbolic).unwrap();
    let r3 = restrict_shift(&c3, &sub, &w, &EpsMode::Symbolic).unwrap();
    let v = r2.vars().clone();
    assert_eq!(*v, vec!["x4", "x5", "x6", "x7", "eps"]);
    let r = (0..4).fold(Polynomial::zero(&v), |a, i| &a + &var(&v, i).pow(2).unwrap());
    let e = var(&v, 4);
    let e2 = e.pow(2).unwrap();
    assert_eq!(r2, &r + &e2.scale(&q(3, 1)));
    // 3 eps (2 eps^2 + R)
    let want3 = e.mul(&(&e2.scale(&q(2, 1)) + &r)).unwrap().scale(&q(3, 1));
    assert_eq!(r3, want3);
    // both lie in R[R, eps]: the cubic is 3 eps (C2 restricted - eps^2)
    let rel = e.mul(&(&r2 - &e2)).unwrap().scale(&q(3, 1));
    assert_eq!(r3, rel);
}

#[test]
fn regular_restrictions() {
    let c = build_su3_chevalley();
    let w = regular_w(&c);
    let sub = SubalgebraSpec::torus(c.clone()).unwrap();
    let (c2, c3) = casimirs_su3(&c).unwrap();
    let r2 = restrict_shift(&c2, &sub, &w, &EpsMode::Symbolic).unwrap();
    let r3 = restrict_shift(&c3, &sub, &w, &EpsMode::Symbolic).unwrap();
    let v = r2.vars().clone();
    let e = var(&v, 6);
    let u: Vec<Polynomial> =
        (0..3).map(|k| &var(&v, 2 * k).pow(2).unwrap() + &var(&v, 2 * k + 1).pow(2).unwrap()).collect();
    let usum = &(&u[0] + &u[1]) + &u[2];
    assert_eq!(r2, &usum.scale(&q(4, 1)) + &e.pow(2).unwrap().scale(&q(1, 2)));
    // z1 z2 conj(z3) = v + i w
    let (x1, y1, x2, y2, x3, y3) = (var(&v, 0), var(&v, 1), var(&v, 2), var(&v, 3), var(&v, 4), var(&v, 5));
    let re12 = &x1.mul(&x2).unwrap() - &y1.mul(&y2).unwrap();
    let im12 = &x1.mul(&y2).unwrap() + &y1.mul(&x2).unwrap();
    let wpoly = &im12.mul(&x3).unwrap() - &re12.mul(&y3).unwrap();
    let s3 = Scalar::sqrt3();
    let lin = &(&u[0].scale(&(-&s3 * &q(4, 1))) + &u[1].scale(&(&q(6, 1) + &(&s3 * &q(2, 1)))))
        + &u[2].scale(&(&(&s3 * &q(2, 1)) - &q(6, 1)));
    let want = &(&wpoly.scale(&q(-48, 1)) + &e.mul(&lin).unwrap())
        - &e.pow(3).unwrap().scale(&(&s3 * &q(1, 6)));
    assert_eq!(r3, want);
}

#[test]
fn fixed_eps_matches_symbolic() {
    let c = build_su3_chevalley();
    let w = regular_w(&c);
    let sub = SubalgebraSpec::torus(c.clone()).unwrap();
    let (_, c3) = casimirs_su3(&c).unwrap();
    let sym = restrict_shift(&c3, &sub, &w, &EpsMode::Symbolic).unwrap();
    let fixed = restrict_shift(&c3, &sub, &w, &EpsMode::Value(q(3, 2))).unwrap();
    let p = [0.3, -0.2, 0.7, 0.1, -0.5, 0.4];
    let mut ps = p.to_vec();
    ps.push(1.5);
    assert!((sym.evaluate_f64(&ps).unwrap() - fixed.evaluate_f64(&p).unwrap()).abs() < 1e-12);
}

#[test]
fn rank_examples() {
    let s = build_su2();
    let v = Arc::new(s.coordinate_names.clone());
    let x = var(&v, 0);
    let y = var(&v, 1);
    let r = &(&x.pow(2).unwrap() + &y.pow(2).unwrap()) + &var(&v, 2).pow(2).unwrap();
    let fp = |p: &Polynomial| FloatPoly::new(p);
    let pt = [0.3, -0.4, 0.5];
    assert_eq!(independence_rank(&[fp(&r), fp(&r.scale(&q(2, 1)))], &pt), 1);
    assert_eq!(independence_rank(&[fp(&r), fp(&x)], &pt), 2);
    assert_eq!(independence_rank(&[], &pt), 0);
    let g = build_su3_gellmann();
    let vg = Arc::new(g.coordinate_names.clone());
    let six: Vec<FloatPoly> = (0..6).map(|i| fp(&var(&vg, i))).collect();
    assert_eq!(independence_rank(&six, &[0.1; 8]), 6);
}

#[test]
fn casimir_counts() {
    let num = NumericAlgebra::new(&build_su3_gellmann());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
    assert_eq!(casimir_count(&num, &p), 2);
    assert_eq!(casimir_count(&num, &[0.0; 8]), 8);
    // the subregular direction e8 has a 4-dimensional stabilizer
    let mut e8 = vec![0.0; 8];
    e8[7] = 1.0;
    assert_eq!(casimir_count(&num, &e8), 4);
    let su2 = NumericAlgebra::new(&build_su2());
    assert_eq!(casimir_count(&su2, &[0.2, 0.1, -0.3]), 1);
}
