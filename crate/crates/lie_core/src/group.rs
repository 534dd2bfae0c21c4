//! Special unitary group elements, the adjoint action, and the exponential map.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{LieError, Result};
use crate::numeric::NumericAlgebra;

/// Tolerance for unitarity and unit determinant.
pub const UNITARY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    matrix: DMatrix<Complex64>,
}

/// Largest entry of `m m^* - I` together with `|det m - 1|`.
pub fn unitarity_defect(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let prod = m * m.adjoint() - DMatrix::<Complex64>::identity(n, n);
    let off = prod.iter().map(|z| z.norm()).fold(0.0, f64::max);
    off.max((m.determinant() - Complex64::new(1.0, 0.0)).norm())
}

fn fix_determinant(m: DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = m.nrows() as f64;
    let det = m.determinant();
    let phase = Complex64::from_polar(1.0, -det.arg() / n);
    m * phase
}

impl GroupElement {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let d = unitarity_defect(&matrix);
        if !(d <= UNITARY_TOL) {
            return Err(LieError::NotUnitary(d));
        }
        Ok(GroupElement { matrix })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { matrix: DMatrix::identity(n, n) }
    }

    /// Nearest special unitary matrix: polar factor, then determinant phase removal.
    pub fn project(m: &DMatrix<Complex64>) -> Self {
        let svd = m.clone().svd(true, true);
        let u = svd.u.expect("left vectors");
        let vt = svd.v_t.expect("right vectors");
        GroupElement { matrix: fix_determinant(u * vt) }
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        GroupElement { matrix: &self.matrix * &o.matrix }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { matrix: self.matrix.adjoint() }
    }

    pub fn defect(&self) -> f64 {
        unitarity_defect(&self.matrix)
    }
}

/// `exp` of an anti-Hermitian matrix through the eigendecomposition of `iX`.
pub fn exp_skew(x: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let h = x * i;
    let eig = h.symmetric_eigen();
    let u = &eig.eigenvectors;
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from_polar(1.0, -l)));
    u * d * u.adjoint()
}

pub fn exp_map(alg: &NumericAlgebra, x: &[f64]) -> Result<GroupElement> {
    if !alg.has_matrices() {
        return Err(LieError::NoMatrixRep("numeric algebra".into()));
    }
    Ok(GroupElement { matrix: fix_determinant(exp_skew(&alg.to_matrix(x))) })
}

/// Coefficients of `g X g^-1`.
pub fn adjoint_group(alg: &NumericAlgebra, g: &GroupElement, x: &[f64]) -> Result<Vec<f64>> {
    if !alg.has_matrices() {
        return Err(LieError::NoMatrixRep("numeric algebra".into()));
    }
    let d = g.defect();
    if !(d <= UNITARY_TOL) {
        return Err(LieError::NotUnitary(d));
    }
    let m = &g.matrix * alg.to_matrix(x) * g.matrix.adjoint();
    Ok(alg.from_matrix(&m))
}
