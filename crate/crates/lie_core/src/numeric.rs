//! Floating-point view of an algebra for numeric kernels.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::LieAlgebraSpec;

#[derive(Clone, Debug)]
pub struct NumericAlgebra {
    pub dim: usize,
    /// `C_ij^k` at `(i * dim + j) * dim + k`.
    pub structure: Vec<f64>,
    pub gram: DMatrix<f64>,
    pub gram_inv: DMatrix<f64>,
    pub basis: Option<Vec<DMatrix<Complex64>>>,
}

impl NumericAlgebra {
    pub fn new(spec: &LieAlgebraSpec) -> Self {
        let n = spec.dim;
        let mut structure = vec![0.0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[(i * n + j) * n + k] = spec.structure_constants[i][j][k].to_f64();
                }
            }
        }
        let gram = DMatrix::from_fn(n, n, |i, j| spec.bform[i][j].to_f64());
        let inv = spec.gram_inverse();
        let gram_inv = DMatrix::from_fn(n, n, |i, j| inv[i][j].to_f64());
        let basis = spec.matrix_rep.as_ref().map(|ms| ms.iter().map(|m| m.to_c64()).collect());
        NumericAlgebra { dim: n, structure, gram, gram_inv, basis }
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n];
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let xy = x[i] * y[j];
                if xy == 0.0 {
                    continue;
                }
                let row = &self.structure[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, c) in out.iter_mut().zip(row) {
                    *o += xy * c;
                }
            }
        }
        out
    }

    pub fn b(&self, x: &[f64], y: &[f64]) -> f64 {
        let n = self.dim;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += x[i] * self.gram[(i, j)] * y[j];
            }
        }
        acc
    }

    /// `G x`: the covector `B(x, .)` on the basis.
    pub fn lower(&self, x: &[f64]) -> Vec<f64> {
        (&self.gram * nalgebra::DVector::from_column_slice(x)).iter().copied().collect()
    }

    /// `G^-1 v`: the element representing the covector `v` through `B`.
    pub fn raise(&self, v: &[f64]) -> Vec<f64> {
        (&self.gram_inv * nalgebra::DVector::from_column_slice(v)).iter().copied().collect()
    }

    /// Column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[f64]) -> DMatrix<f64> {
        let n = self.dim;
        let mut m = DMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            let col = self.bracket(x, &e);
            for k in 0..n {
                m[(k, j)] = col[k];
            }
        }
        m
    }

    pub fn has_matrices(&self) -> bool {
        self.basis.is_some()
    }

    pub fn matrix_size(&self) -> Option<usize> {
        self.basis.as_ref().map(|b| b[0].nrows())
    }

    pub fn to_matrix(&self, x: &[f64]) -> DMatrix<Complex64> {
        let basis = self.basis.as_ref().expect("matrix representation");
        let s = basis[0].nrows();
        let mut m = DMatrix::zeros(s, s);
        for (e, c) in basis.iter().zip(x) {
            if *c != 0.0 {
                m += e * Complex64::new(*c, 0.0);
            }
        }
        m
    }

    /// Coefficients of the `B`-orthogonal projection of a matrix onto the algebra.
    pub fn from_matrix(&self, m: &DMatrix<Complex64>) -> Vec<f64> {
        let basis = self.basis.as_ref().expect("matrix representation");
        let v: Vec<f64> = basis.iter().map(|e| -0.5 * (m * e).trace().re).collect();
        self.raise(&v)
    }
}
