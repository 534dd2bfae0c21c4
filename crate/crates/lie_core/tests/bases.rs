use lie_core::su::{element_from_diagonal, gellmann_lambda, irregular_w, regular_w};
use lie_core::{build_su2, build_su3_chevalley, build_su3_gellmann, CMatrix, CScalar, LieAlgebraSpec, Scalar};
use num_traits::Zero;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

#[test]
fn all_builds_validate() {
    for spec in [build_su3_gellmann(), build_su3_chevalley(), build_su2()] {
        spec.validate().unwrap();
        assert!(spec.is_antisymmetric());
        assert!(spec.satisfies_jacobi());
        assert!(spec.form_is_invariant());
        assert!(spec.matrix_rep_consistent());
    }
}

#[test]
fn gellmann_form_is_identity() {
    let g = build_su3_gellmann();
    for i in 0..8 {
        for j in 0..8 {
            let want = if i == j { Scalar::from_int(1) } else { Scalar::zero() };
            assert_eq!(g.bform[i][j], want);
        }
    }
}

#[test]
fn gellmann_constants_are_twice_the_standard_ones() {
    let g = build_su3_gellmann();
    let c = |i: usize, j: usize, k: usize| g.structure_constants[i - 1][j - 1][k - 1].clone();
    // f_123 = 1
    assert_eq!(c(1, 2, 3), q(2, 1));
    // f_147 = f_246 = f_257 = f_345 = 1/2, f_156 = f_367 = -1/2
    assert_eq!(c(1, 4, 7), q(1, 1));
    assert_eq!(c(2, 4, 6), q(1, 1));
    assert_eq!(c(2, 5, 7), q(1, 1));
    assert_eq!(c(3, 4, 5), q(1, 1));
    assert_eq!(c(1, 5, 6), q(-1, 1));
    assert_eq!(c(3, 6, 7), q(-1, 1));
    // f_458 = f_678 = sqrt3/2
    assert_eq!(c(4, 5, 8), Scalar::sqrt3());
    assert_eq!(c(6, 7, 8), Scalar::sqrt3());
    // every constant is 0, +-1, +-2 or +-sqrt3
    let allowed = [q(0, 1), q(1, 1), q(-1, 1), q(2, 1), q(-2, 1), Scalar::sqrt3(), -Scalar::sqrt3()];
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                assert!(allowed.contains(&g.structure_constants[i][j][k]));
            }
        }
    }
}

#[test]
fn gellmann_matrix_commutator_closes() {
    let g = build_su3_gellmann();
    let m = g.matrix_rep.as_ref().unwrap();
    let lhs = m[0].commutator(&m[1]);
    assert_eq!(lhs, m[2].scale_real(&q(2, 1)));
    // lambda matrices themselves: [l1, l2] = 2i l3
    let l = gellmann_lambda(1).commutator(&gellmann_lambda(2));
    assert_eq!(l, gellmann_lambda(3).scale(&CScalar::new(Scalar::zero(), q(2, 1))));
}

#[test]
fn chevalley_root_normalization() {
    let c = build_su3_chevalley();
    let rd = c.root_data.as_ref().unwrap();
    for r in &rd.roots {
        let b = r.e_pos.mul(&r.e_neg).trace();
        assert_eq!(b.re, q(-2, 1));
        // B(E_a, E_-a) = -1/2 tr(E_a E_-a) = 1
        assert_eq!(&b.re * &q(-1, 2), q(1, 1));
        assert!(b.im.is_zero());
        // [E_a, E_-a] is the complex coroot
        assert_eq!(r.e_pos.commutator(&r.e_neg), r.complex_coroot);
        let (i, j) = r.position;
        let expect = CMatrix::unit(3, i, i).sub(&CMatrix::unit(3, j, j)).scale_real(&q(-2, 1));
        assert_eq!(r.complex_coroot, expect);
    }
    assert_eq!(rd.cartan_matrix, vec![vec![2, -1], vec![-1, 2]]);
}

#[test]
fn chevalley_form_and_torus_orthogonality() {
    let c = build_su3_chevalley();
    let diag = [1, 1, 4, 4, 4, 4, 4, 4];
    for i in 0..8 {
        for j in 0..8 {
            let want = if i == j { Scalar::from_int(diag[i]) } else { Scalar::zero() };
            assert_eq!(c.bform[i][j], want, "B({i},{j})");
        }
    }
    // B(t, E_{+-a}) = 0 through the complex bilinear extension
    let mats = c.matrix_rep.as_ref().unwrap();
    for r in &c.root_data.as_ref().unwrap().roots {
        for h in &mats[..2] {
            assert!(h.mul(&r.e_pos).trace().is_zero());
            assert!(h.mul(&r.e_neg).trace().is_zero());
        }
    }
}

#[test]
fn chevalley_bracket_of_root_pair() {
    let c = build_su3_chevalley();
    // [A1, S1] = 8 H1
    let mut want = vec![Scalar::zero(); 8];
    want[0] = q(8, 1);
    assert_eq!(c.structure_constants[2][3], want);
    // coroots: h1 = H1, h3 = h1 + h2
    let rd = c.root_data.as_ref().unwrap();
    assert_eq!(rd.roots[0].coroot, c.unit(0));
    let sum: Vec<Scalar> = rd.roots[0].coroot.iter().zip(&rd.roots[1].coroot).map(|(a, b)| a + b).collect();
    assert_eq!(rd.roots[2].coroot, sum);
    assert_eq!(rd.roots[2].coroot[0], q(1, 2));
    assert_eq!(rd.roots[2].coroot[1], Scalar::with_root(0, 1, 1, 2));
}

#[test]
fn su2_constants() {
    let s = build_su2();
    assert_eq!(s.structure_constants[0][1][2], q(2, 1));
    assert_eq!(s.structure_constants[1][2][0], q(2, 1));
    assert_eq!(s.structure_constants[2][0][1], q(2, 1));
}

#[test]
fn special_elements() {
    let g = build_su3_gellmann();
    let w = irregular_w(&g);
    let mut want = vec![Scalar::zero(); 8];
    want[7] = -Scalar::sqrt3();
    assert_eq!(w, want);
    let d = element_from_diagonal(&g, [q(1, 1), q(-1, 1), q(0, 1)]);
    let mut want = vec![Scalar::zero(); 8];
    want[2] = q(1, 1);
    assert_eq!(d, want);
    let c = build_su3_chevalley();
    assert_eq!(regular_w(&c)[0], q(1, 2));
}

#[test]
fn json_round_trip() {
    for spec in [build_su3_gellmann(), build_su3_chevalley(), build_su2()] {
        let text = spec.to_json();
        assert!(text.contains("√3") || spec.name == "su2");
        let back = LieAlgebraSpec::from_json(&text).unwrap();
        assert_eq!(back, spec);
    }
}

#[test]
fn corrupted_json_is_rejected() {
    let spec = build_su2();
    let mut v: serde_json::Value = serde_json::from_str(&spec.to_json()).unwrap();
    v["structure_constants"][0][1][2] = serde_json::Value::String("3/1".into());
    assert!(LieAlgebraSpec::from_json(&v.to_string()).is_err());
}
