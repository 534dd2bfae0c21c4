//! Checks specific to `SU(3)/S(U(2) x U(1))`: the matrix `A(X)` and the cubic moment relation.

use std::sync::Arc;

use invariant_solver::casimirs_su3;
use lie_core::Scalar;
use magnetic_phase::{moment_map, random_regular_point, CaseTag, MagneticSystem, PhasePoint};
use num_traits::Zero;
use poly_engine::{FloatPoly, Polynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, VerifyError};

fn require_irregular(sys: &MagneticSystem) -> Result<()> {
    if sys.case_tag != CaseTag::Irregular {
        return Err(VerifyError::WrongCase("irregular"));
    }
    Ok(())
}

/// The `3 x 4` matrix of `u -> (B([u, X], e_r))_{r = 1,2,3}` on the `m` basis, with
/// `X = -sum_j x_j e_j` written in the `m` coordinate names.
pub fn a_matrix(sys: &MagneticSystem) -> Result<Vec<Vec<Polynomial>>> {
    require_irregular(sys)?;
    let alg = &sys.alg;
    let m = &sys.sub.m_indices;
    let vars = Arc::new(m.iter().map(|&i| alg.coordinate_names[i].clone()).collect::<Vec<_>>());
    // the su(2) part of a: every a-index except the one spanned by W
    let rows: Vec<usize> = sys.sub.a_indices.iter().copied().filter(|&i| sys.w[i].is_zero()).collect();
    let mut out = Vec::new();
    for &r in &rows {
        let mut row = Vec::new();
        for &c in m {
            // B([e_c, -sum x_j e_j], e_r) = -sum_j x_j B([e_c, e_j], e_r)
            let mut p = Polynomial::zero(&vars);
            for (l, &j) in m.iter().enumerate() {
                let br = &alg.structure_constants[c][j];
                let mut coeff = Scalar::zero();
                for (k, ck) in br.iter().enumerate() {
                    if !ck.is_zero() && !alg.bform[k][r].is_zero() {
                        coeff += &(ck * &alg.bform[k][r]);
                    }
                }
                if !coeff.is_zero() {
                    p = &p - &Polynomial::var(&vars, l).scale(&coeff);
                }
            }
            row.push(p);
        }
        out.push(row);
    }
    Ok(out)
}

fn det3(m: &[Vec<Polynomial>], cols: [usize; 3]) -> Result<Polynomial> {
    let e = |r: usize, c: usize| &m[r][cols[c]];
    let t = |a: &Polynomial, b: &Polynomial, c: &Polynomial| -> Result<Polynomial> { Ok(a.mul(b)?.mul(c)?) };
    let pos = &(&t(e(0, 0), e(1, 1), e(2, 2))? + &t(e(0, 1), e(1, 2), e(2, 0))?) + &t(e(0, 2), e(1, 0), e(2, 1))?;
    let neg = &(&t(e(0, 2), e(1, 1), e(2, 0))? + &t(e(0, 0), e(1, 2), e(2, 1))?) + &t(e(0, 1), e(1, 0), e(2, 2))?;
    Ok(&pos - &neg)
}

/// The four `3 x 3` column minors, columns `(1,2,3), (1,2,4), (1,3,4), (2,3,4)`.
pub fn a_matrix_minors(sys: &MagneticSystem) -> Result<Vec<Polynomial>> {
    let a = a_matrix(sys)?;
    [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].into_iter().map(|c| det3(&a, c)).collect()
}

/// Expected minors `x7 R, -x6 R, x5 R, -x4 R` with `R` the sum of squares.
pub fn expected_minors(sys: &MagneticSystem) -> Result<Vec<Polynomial>> {
    let a = a_matrix(sys)?;
    let vars = a[0][0].vars().clone();
    let r = (0..4).try_fold(Polynomial::zero(&vars), |acc, i| -> Result<Polynomial> {
        Ok(&acc + &Polynomial::var(&vars, i).pow(2)?)
    })?;
    let x = |i: usize| Polynomial::var(&vars, i);
    Ok(vec![x(3).mul(&r)?, (-&x(2)).mul(&r)?, x(1).mul(&r)?, (-&x(0)).mul(&r)?])
}

/// Numeric rank of `A(X)` at coefficients `x` (same sign convention).
pub fn a_matrix_rank(sys: &MagneticSystem, x: &[f64]) -> Result<usize> {
    let a = a_matrix(sys)?;
    let mut m = nalgebra::DMatrix::zeros(a.len(), 4);
    for (r, row) in a.iter().enumerate() {
        for (c, p) in row.iter().enumerate() {
            m[(r, c)] = p.evaluate_f64(x)?;
        }
    }
    Ok(lie_core::linalg::numeric_rank(&m, lie_core::linalg::RANK_TOL))
}

/// Candidate cubic relations among the moment coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum PhiForm {
    /// `C3(P) - 3 eps (2 eps^2 + P4^2 + P5^2 - 2 P6^2 - 2 P7^2)`.
    Printed,
    /// `C3(P) - a eps (C2(P) - b eps^2)`; `a = 3, b = 1` is the relation that holds.
    Shifted { a: f64, b: f64 },
}

impl PhiForm {
    pub fn corrected() -> Self {
        PhiForm::Shifted { a: 3.0, b: 1.0 }
    }
}

pub fn phi_residual(sys: &MagneticSystem, pt: &PhasePoint, form: &PhiForm) -> Result<f64> {
    let (c2, c3) = casimirs_su3(&sys.alg)?;
    let p = moment_map(sys, pt);
    let e = sys.eps;
    let lhs = FloatPoly::new(&c3).eval(&p);
    let rhs = match form {
        PhiForm::Printed => 3.0 * e * (2.0 * e * e + p[3] * p[3] + p[4] * p[4] - 2.0 * p[5] * p[5] - 2.0 * p[6] * p[6]),
        PhiForm::Shifted { a, b } => a * e * (FloatPoly::new(&c2).eval(&p) - b * e * e),
    };
    Ok(lhs - rhs)
}

/// Largest `|Phi(P)|` over `samples` random generic points.
pub fn phi_relation_irregular(sys: &MagneticSystem, form: &PhiForm, samples: usize, seed: u64) -> Result<f64> {
    require_irregular(sys)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let pt = random_regular_point(sys, &mut rng)?;
        worst = worst.max(phi_residual(sys, &pt, form)?.abs());
    }
    Ok(worst)
}
