//! Lie-Poisson bracket and `B`-gradients on coefficient coordinates.
//!
//! A point `Y = sum x_k e_k` of the algebra is identified with a covector through `B`;
//! the bracket is `{p, q}(Y) = B(Y, [grad p, grad q])` with `grad = G^-1 d`. On a
//! `B`-orthonormal basis this is `sum C_ij^k x_k dp/dx_i dq/dx_j`.

use std::sync::Arc;

use lie_core::{LieAlgebraSpec, Scalar};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{PolyError, Result};
use crate::polynomial::{Monomial, Polynomial};

/// A polynomial map into the algebra, one component per basis element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyVector {
    pub components: Vec<Polynomial>,
}

impl PolyVector {
    pub fn evaluate_f64(&self, point: &[f64]) -> Result<Vec<f64>> {
        self.components.iter().map(|p| p.evaluate_f64(point)).collect()
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Vec<Scalar>> {
        self.components.iter().map(|p| p.evaluate(point)).collect()
    }
}

/// Coordinate variables of an algebra.
pub fn algebra_vars(alg: &LieAlgebraSpec) -> Arc<Vec<String>> {
    Arc::new(alg.coordinate_names.clone())
}

fn check_vars(p: &Polynomial, alg: &LieAlgebraSpec) -> Result<()> {
    if **p.vars() != alg.coordinate_names {
        return Err(PolyError::VariableMismatch);
    }
    Ok(())
}

/// Precomputed brackets `{x_i, x_j}` of the coordinate functions.
#[derive(Clone, Debug)]
pub struct PoissonStructure {
    vars: Arc<Vec<String>>,
    /// `coord[i][j]` is the linear polynomial `{x_i, x_j}`.
    pub coord: Vec<Vec<Polynomial>>,
    gram_inv: Vec<Vec<Scalar>>,
}

impl PoissonStructure {
    pub fn new(alg: &LieAlgebraSpec) -> Self {
        let n = alg.dim;
        let vars = algebra_vars(alg);
        let gram_inv = alg.gram_inverse();
        let mut coord = vec![vec![Polynomial::zero(&vars); n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let br = alg.bracket(&gram_inv[i], &gram_inv[j]);
                // B(Y, br) = sum_k x_k (G br)_k
                let mut p = Polynomial::zero(&vars);
                for k in 0..n {
                    let mut c = Scalar::zero();
                    for (l, b) in br.iter().enumerate() {
                        if !b.is_zero() && !alg.bform[k][l].is_zero() {
                            c += &(&alg.bform[k][l] * b);
                        }
                    }
                    p.add_term(Monomial::var(n, k), c);
                }
                coord[j][i] = -&p;
                coord[i][j] = p;
            }
        }
        PoissonStructure { vars, coord, gram_inv }
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn bracket(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        if **p.vars() != *self.vars || **q.vars() != *self.vars {
            return Err(PolyError::VariableMismatch);
        }
        let n = self.vars.len();
        let dp: Vec<Polynomial> = (0..n).map(|i| p.derivative(i)).collect();
        let dq: Vec<Polynomial> = (0..n).map(|i| q.derivative(i)).collect();
        let mut out = Polynomial::zero(&self.vars);
        for i in 0..n {
            if dp[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if dq[j].is_zero() || self.coord[i][j].is_zero() {
                    continue;
                }
                let t = dp[i].mul(&dq[j])?.mul(&self.coord[i][j])?;
                out = &out + &t;
            }
        }
        Ok(out)
    }

    pub fn gradient(&self, p: &Polynomial) -> Result<PolyVector> {
        if **p.vars() != *self.vars {
            return Err(PolyError::VariableMismatch);
        }
        let n = self.vars.len();
        let d: Vec<Polynomial> = (0..n).map(|i| p.derivative(i)).collect();
        let components = (0..n)
            .map(|a| {
                (0..n).fold(Polynomial::zero(&self.vars), |acc, i| {
                    if self.gram_inv[a][i].is_zero() {
                        acc
                    } else {
                        &acc + &d[i].scale(&self.gram_inv[a][i])
                    }
                })
            })
            .collect();
        Ok(PolyVector { components })
    }
}

/// `{p, q}` for the Lie-Poisson structure of `alg`.
pub fn lie_poisson_bracket(p: &Polynomial, q: &Polynomial, alg: &LieAlgebraSpec) -> Result<Polynomial> {
    check_vars(p, alg)?;
    check_vars(q, alg)?;
    PoissonStructure::new(alg).bracket(p, q)
}

/// `grad p` with `B(grad p(X), V) = dp_X(V)`.
pub fn b_gradient(p: &Polynomial, alg: &LieAlgebraSpec) -> Result<PolyVector> {
    check_vars(p, alg)?;
    PoissonStructure::new(alg).gradient(p)
}
