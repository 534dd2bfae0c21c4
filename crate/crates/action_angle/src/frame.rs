//! The maximal torus through the shifted fiber point and the Casimir gradients on it.

use invariant_solver::casimirs_su3;
use lie_core::exp_map;
use magnetic_phase::{slice_map, CaseTag, MagneticSystem, PhasePoint};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use poly_engine::FloatPoly;

use crate::error::{AngleError, Result};

/// Smallest accepted gap between eigenvalues of `i xi`.
pub const FRAME_GAP: f64 = 1e-8;

/// `i diag(1,-1,0)` and `i diag(0,1,-1)` in the eigenbasis of `xi`.
fn cartan_diagonals() -> [[f64; 3]; 2] {
    [[1.0, -1.0, 0.0], [0.0, 1.0, -1.0]]
}

/// Casimir polynomials evaluated in floating point.
#[derive(Clone, Debug)]
pub struct Casimirs {
    pub c2: FloatPoly,
    pub c3: FloatPoly,
}

impl Casimirs {
    pub fn new(sys: &MagneticSystem) -> Result<Self> {
        let (c2, c3) = casimirs_su3(&sys.alg)?;
        Ok(Casimirs { c2: FloatPoly::new(&c2), c3: FloatPoly::new(&c3) })
    }

    /// `B`-gradients `(grad C2, grad C3)` at `xi`.
    pub fn gradients(&self, sys: &MagneticSystem, xi: &[f64]) -> [Vec<f64>; 2] {
        [sys.num.raise(&self.c2.grad(xi)), sys.num.raise(&self.c3.grad(xi))]
    }

    /// Actions at `pt`: `(C2(xi), C3(xi))` in the regular case, `R = |X|^2` in the irregular case.
    pub fn actions(&self, sys: &MagneticSystem, pt: &PhasePoint) -> Vec<f64> {
        match sys.case_tag {
            CaseTag::Regular => {
                let xi = slice_map(sys, pt);
                vec![self.c2.eval(&xi), self.c3.eval(&xi)]
            }
            CaseTag::Irregular => vec![pt.x.iter().map(|c| c * c).sum()],
        }
    }

    /// Gradients generating the action flows. `R` and `C2` differ by a constant on the
    /// irregular slice, so both share the flow of `grad C2`.
    pub fn action_gradients(&self, sys: &MagneticSystem, pt: &PhasePoint) -> Vec<Vec<f64>> {
        let xi = slice_map(sys, pt);
        let [g2, g3] = self.gradients(sys, &xi);
        match sys.case_tag {
            CaseTag::Regular => vec![g2, g3],
            CaseTag::Irregular => vec![g2],
        }
    }
}

/// Basis `Z_1, Z_2` of the centralizer of `xi = X - eps W`: `Z_j = k H_j k^-1` with `k` the
/// eigenvectors of `i xi` ordered by decreasing eigenvalue.
pub fn torus_frame(sys: &MagneticSystem, x_m: &[f64]) -> Result<[Vec<f64>; 2]> {
    let xi = sys.shift(&sys.sub.embed_m(x_m));
    let h = sys.num.to_matrix(&xi) * Complex64::new(0.0, -1.0);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let gap = order.windows(2).map(|w| eig.eigenvalues[w[0]] - eig.eigenvalues[w[1]]).fold(f64::INFINITY, f64::min);
    if !(gap > FRAME_GAP) {
        return Err(AngleError::DegenerateFrame(gap));
    }
    let k = DMatrix::from_fn(3, 3, |r, c| eig.eigenvectors[(r, order[c])]);
    let frame = cartan_diagonals().map(|d| {
        let dm = DMatrix::from_diagonal(&DVector::from_iterator(3, d.iter().map(|v| Complex64::new(0.0, *v))));
        sys.num.from_matrix(&(&k * dm * k.adjoint()))
    });
    Ok(frame)
}

/// Coefficients of `y` on the frame, by the `B`-Gram system. Fails when `y` leaves the span.
pub fn frame_coefficients(sys: &MagneticSystem, frame: &[Vec<f64>; 2], y: &[f64]) -> Result<[f64; 2]> {
    let gram = nalgebra::Matrix2::from_fn(|i, j| sys.b(&frame[i], &frame[j]));
    let rhs = nalgebra::Vector2::new(sys.b(y, &frame[0]), sys.b(y, &frame[1]));
    let c = gram.lu().solve(&rhs).ok_or(AngleError::DegenerateFrame(0.0))?;
    let resid: f64 = (0..y.len()).map(|i| (y[i] - c[0] * frame[0][i] - c[1] * frame[1][i]).powi(2)).sum::<f64>().sqrt();
    let scale = 1.0 + y.iter().map(|v| v * v).sum::<f64>().sqrt();
    if resid > 1e-9 * scale {
        return Err(AngleError::DegenerateFrame(resid));
    }
    Ok([c[0], c[1]])
}

/// Closed-form frequencies: column `k` holds the frame coefficients of the gradient of the
/// `k`-th action at `xi`. `2 x 2` regular, `2 x 1` irregular.
pub fn frequency_exact(sys: &MagneticSystem, cas: &Casimirs, pt: &PhasePoint) -> Result<DMatrix<f64>> {
    let frame = torus_frame(sys, &pt.x)?;
    let grads = cas.action_gradients(sys, pt);
    let mut om = DMatrix::zeros(2, grads.len());
    for (k, g) in grads.iter().enumerate() {
        let c = frame_coefficients(sys, &frame, g)?;
        om[(0, k)] = c[0];
        om[(1, k)] = c[1];
    }
    Ok(om)
}

/// `[g, X] -> [g exp(sum_j s_j Z_j), X]`.
pub fn torus_shift(sys: &MagneticSystem, pt: &PhasePoint, s: &[f64; 2]) -> Result<PhasePoint> {
    let frame = torus_frame(sys, &pt.x)?;
    let gen: Vec<f64> = (0..sys.dim()).map(|i| s[0] * frame[0][i] + s[1] * frame[1][i]).collect();
    Ok(PhasePoint { g: pt.g.mul(&exp_map(&sys.num, &gen)?), x: pt.x.clone() })
}
