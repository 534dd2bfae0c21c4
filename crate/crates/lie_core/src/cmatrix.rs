//! Square matrices over Q(sqrt 3)[i], used to carry exact matrix representations.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::scalar::{CScalar, Scalar};

/// Row-major square matrix with exact complex entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CMatrix {
    pub size: usize,
    pub entries: Vec<CScalar>,
}

impl CMatrix {
    pub fn zeros(size: usize) -> Self {
        CMatrix { size, entries: vec![CScalar::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, CScalar::one());
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(size);
        m.set(i, j, CScalar::one());
        m
    }

    pub fn diag(values: &[CScalar]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &CScalar {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CScalar) {
        self.entries[i * self.size + j] = v;
    }

    pub fn add(&self, o: &CMatrix) -> CMatrix {
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect();
        CMatrix { size: self.size, entries }
    }

    pub fn sub(&self, o: &CMatrix) -> CMatrix {
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect();
        CMatrix { size: self.size, entries }
    }

    pub fn scale(&self, c: &CScalar) -> CMatrix {
        CMatrix { size: self.size, entries: self.entries.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_real(&self, s: &Scalar) -> CMatrix {
        CMatrix { size: self.size, entries: self.entries.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn mul(&self, o: &CMatrix) -> CMatrix {
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &CMatrix) -> CMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> CScalar {
        (0..self.size).fold(CScalar::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CScalar::is_zero)
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.add(&self.adjoint()).is_zero()
    }

    pub fn to_c64(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.size, self.size, |i, j| self.get(i, j).to_c64())
    }
}
