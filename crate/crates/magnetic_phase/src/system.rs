//! The magnetic system on `T*(G/A)` and its points in left-trivialized coordinates.

use lie_core::su::{irregular_w, regular_w};
use lie_core::{
    adjoint_group, build_su3_chevalley, build_su3_gellmann, centralizer_of, exp_map, GroupElement, LieAlgebraSpec,
    NumericAlgebra, Scalar, SubalgebraSpec,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{MagneticError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    Regular,
    Irregular,
}

/// Data `(G, A, W, eps)` of a magnetic geodesic problem.
#[derive(Clone, Debug)]
pub struct MagneticSystem {
    pub alg: LieAlgebraSpec,
    pub sub: SubalgebraSpec,
    pub num: NumericAlgebra,
    pub w: Vec<Scalar>,
    pub w_f64: Vec<f64>,
    pub eps: f64,
    /// Exact value of `eps` when it was given as one.
    pub eps_exact: Option<Scalar>,
    pub case_tag: CaseTag,
}

impl MagneticSystem {
    /// Checks `[a, W] = 0` on a basis of `a`, and the eigenvalue type of `W`.
    pub fn new(sub: SubalgebraSpec, w: Vec<Scalar>, eps: f64, case_tag: CaseTag) -> Result<Self> {
        let alg = sub.parent.clone();
        if w.len() != alg.dim {
            return Err(lie_core::LieError::Dimension { expected: alg.dim, got: w.len() }.into());
        }
        let num = NumericAlgebra::new(&alg);
        let w_f64: Vec<f64> = w.iter().map(Scalar::to_f64).collect();
        let mut worst = 0.0f64;
        for &i in &sub.a_indices {
            let br = alg.bracket(&alg.unit(i), &w);
            worst = worst.max(br.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max));
        }
        if worst > 0.0 {
            return Err(MagneticError::NotFixed(worst));
        }
        match case_tag {
            CaseTag::Regular => {
                if w.iter().enumerate().any(|(i, c)| !alg.cartan_indices.contains(&i) && c.to_f64() != 0.0) {
                    return Err(MagneticError::WrongType("regular case needs W in the Cartan subalgebra".into()));
                }
            }
            CaseTag::Irregular => {
                let mut ev = hermitian_spectrum(&num, &w_f64);
                ev.sort_by(f64::total_cmp);
                // a double eigenvalue next to a simple one, not a multiple of zero
                let double = (ev[0] - ev[1]).abs() < 1e-12 || (ev[1] - ev[2]).abs() < 1e-12;
                if !double || ev.iter().all(|l| l.abs() < 1e-12) {
                    return Err(MagneticError::WrongType(format!("eigenvalues {ev:?} are not of type (2,-1,-1)")));
                }
            }
        }
        Ok(MagneticSystem { alg, sub, num, w, w_f64, eps, eps_exact: None, case_tag })
    }

    /// Chevalley basis, `A = T`, `W = (H1 + H2)/2`.
    pub fn regular(eps: f64) -> Result<Self> {
        let alg = build_su3_chevalley();
        let w = regular_w(&alg);
        let sub = SubalgebraSpec::torus(alg)?;
        Self::new(sub, w, eps, CaseTag::Regular)
    }

    /// Gell-Mann basis, `A = S(U(2) x U(1))` and `W = -sqrt3 e8`.
    pub fn irregular(eps: f64) -> Result<Self> {
        let alg = build_su3_gellmann();
        let w = irregular_w(&alg);
        let sub = centralizer_of(&alg, &w)?;
        Self::new(sub, w, eps, CaseTag::Irregular)
    }

    pub fn with_exact_eps(mut self, eps: Scalar) -> Self {
        self.eps = eps.to_f64();
        self.eps_exact = Some(eps);
        self
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn m_dim(&self) -> usize {
        self.sub.m_indices.len()
    }

    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        self.num.bracket(x, y)
    }

    pub fn b(&self, x: &[f64], y: &[f64]) -> f64 {
        self.num.b(x, y)
    }

    pub fn project_m(&self, x: &[f64]) -> Vec<f64> {
        self.sub.project_m(x)
    }

    /// `xi = X - eps W` for a full-length `X`.
    pub fn shift(&self, x_full: &[f64]) -> Vec<f64> {
        x_full.iter().zip(&self.w_f64).map(|(x, w)| x - self.eps * w).collect()
    }

    /// `Ad(m) x` for any invertible matrix `m`; used on non-unitary Runge-Kutta stages.
    pub(crate) fn conj(&self, m: &DMatrix<Complex64>, x: &[f64]) -> Vec<f64> {
        let inv = m.clone().try_inverse().expect("invertible group stage");
        self.num.from_matrix(&(m * self.num.to_matrix(x) * inv))
    }

    /// `Ad(m^-1) x`.
    pub(crate) fn conj_inv(&self, m: &DMatrix<Complex64>, x: &[f64]) -> Vec<f64> {
        let inv = m.clone().try_inverse().expect("invertible group stage");
        self.num.from_matrix(&(&inv * self.num.to_matrix(x) * m))
    }
}

fn hermitian_spectrum(num: &NumericAlgebra, x: &[f64]) -> Vec<f64> {
    let h = num.to_matrix(x) * Complex64::new(0.0, 1.0);
    h.symmetric_eigenvalues().iter().copied().collect()
}

/// A point `[g, X]` with `X` listed over the `m` coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PhasePoint {
    pub g: GroupElement,
    pub x: Vec<f64>,
}

impl PhasePoint {
    pub fn new(sys: &MagneticSystem, g: GroupElement, x: Vec<f64>) -> Result<Self> {
        if x.len() != sys.m_dim() {
            return Err(MagneticError::Dimension { expected: sys.m_dim(), got: x.len() });
        }
        Ok(PhasePoint { g, x })
    }

    pub fn identity(sys: &MagneticSystem, x: Vec<f64>) -> Result<Self> {
        let n = sys.num.matrix_size().unwrap_or(3);
        Self::new(sys, GroupElement::identity(n), x)
    }

    pub fn x_full(&self, sys: &MagneticSystem) -> Vec<f64> {
        sys.sub.embed_m(&self.x)
    }

    /// Left translation `h . [g, X] = [hg, X]`.
    pub fn left(&self, h: &GroupElement) -> PhasePoint {
        PhasePoint { g: h.mul(&self.g), x: self.x.clone() }
    }

    /// The other representative `[g a, Ad(a^-1) X]` of the same point, `a = exp(alpha)`.
    pub fn right_by_subgroup(&self, sys: &MagneticSystem, alpha_a: &[f64]) -> Result<PhasePoint> {
        let mut gen = vec![0.0; sys.dim()];
        for (&i, c) in sys.sub.a_indices.iter().zip(alpha_a) {
            gen[i] = *c;
        }
        let a = exp_map(&sys.num, &gen)?;
        let x = adjoint_group(&sys.num, &a.inverse(), &self.x_full(sys))?;
        Ok(PhasePoint { g: self.g.mul(&a), x: sys.sub.restrict_m(&x) })
    }

    /// Curve `s -> [g exp(s v), X + s (w - 1/2 [v, X]_m)]` through the point along `t`.
    pub fn displace(&self, sys: &MagneticSystem, t: &TangentVector, s: f64) -> Result<PhasePoint> {
        let v = sys.sub.embed_m(&t.v);
        let step = exp_map(&sys.num, &v.iter().map(|c| c * s).collect::<Vec<_>>())?;
        let dx = t.fiber_velocity(sys, &self.x);
        let x = self.x.iter().zip(&dx).map(|(a, b)| a + s * b).collect();
        Ok(PhasePoint { g: self.g.mul(&step), x })
    }
}

/// Tangent vector `g_*|_X (v, -1/2 [v, X] + w)` with both parts over the `m` coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentVector {
    pub v: Vec<f64>,
    pub w: Vec<f64>,
}

impl TangentVector {
    pub fn zero(n: usize) -> Self {
        TangentVector { v: vec![0.0; n], w: vec![0.0; n] }
    }

    pub fn scale(&self, s: f64) -> Self {
        TangentVector { v: self.v.iter().map(|c| c * s).collect(), w: self.w.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, o: &TangentVector) -> Self {
        TangentVector {
            v: self.v.iter().zip(&o.v).map(|(a, b)| a + b).collect(),
            w: self.w.iter().zip(&o.w).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.v.iter().chain(&self.w).map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `dX/ds = w - 1/2 [v, X]_m`.
    pub fn fiber_velocity(&self, sys: &MagneticSystem, x: &[f64]) -> Vec<f64> {
        let v = sys.sub.embed_m(&self.v);
        let br = sys.bracket(&v, &sys.sub.embed_m(x));
        let br = sys.sub.restrict_m(&br);
        self.w.iter().zip(&br).map(|(w, b)| w - 0.5 * b).collect()
    }
}

/// `omega_eps((v1,w1),(v2,w2)) = B(w1,v2) - B(w2,v1) + eps B(W,[v1,v2])`.
pub fn omega(sys: &MagneticSystem, t1: &TangentVector, t2: &TangentVector) -> f64 {
    let e = |x: &[f64]| sys.sub.embed_m(x);
    let (v1, w1, v2, w2) = (e(&t1.v), e(&t1.w), e(&t2.v), e(&t2.w));
    sys.b(&w1, &v2) - sys.b(&w2, &v1) + sys.eps * sys.b(&sys.w_f64, &sys.bracket(&v1, &v2))
}

/// `P(g, X) = Ad(g)(X - eps W)`.
pub fn moment_map(sys: &MagneticSystem, pt: &PhasePoint) -> Vec<f64> {
    sys.conj(pt.g.matrix(), &slice_map(sys, pt))
}

/// `xi = X - eps W`; does not see `g`.
pub fn slice_map(sys: &MagneticSystem, pt: &PhasePoint) -> Vec<f64> {
    sys.shift(&pt.x_full(sys))
}

/// `H = 1/2 B(X, X)`.
pub fn kinetic_energy(sys: &MagneticSystem, pt: &PhasePoint) -> f64 {
    let x = pt.x_full(sys);
    0.5 * sys.b(&x, &x)
}
