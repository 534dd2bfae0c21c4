//! Numeric functional-independence ranks.

use lie_core::linalg::{numeric_rank, RANK_TOL};
use lie_core::NumericAlgebra;
use nalgebra::DMatrix;
use poly_engine::FloatPoly;

/// Rank of the Jacobian of `polys` at `point`, SVD threshold `1e-10` relative.
pub fn independence_rank(polys: &[FloatPoly], point: &[f64]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    let n = point.len();
    let mut j = DMatrix::zeros(polys.len(), n);
    for (r, p) in polys.iter().enumerate() {
        for (c, g) in p.grad(point).into_iter().enumerate() {
            j[(r, c)] = g;
        }
    }
    numeric_rank(&j, RANK_TOL)
}

/// `dim g - rank(sum_l C_ij^l x_l)`; equals `dim g` at the origin.
pub fn casimir_count(alg: &NumericAlgebra, point: &[f64]) -> usize {
    let n = alg.dim;
    let mut a = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = (0..n).map(|l| alg.c(i, j, l) * point[l]).sum();
        }
    }
    if a.iter().all(|v| *v == 0.0) {
        return n;
    }
    n - numeric_rank(&a, RANK_TOL)
}
