//! Finite-difference brackets for functions that are not polynomial.

use magnetic_phase::{casimir_flow, omega, MagneticSystem, PhasePoint, TangentVector};
use nalgebra::{DMatrix, DVector};

use crate::error::{AngleError, Result};

/// `{f, J} = df(X_J)` for an action `J` whose flow is `[g exp(t grad), X]`.
pub fn action_bracket<F>(sys: &MagneticSystem, f: F, grad: &[f64], pt: &PhasePoint, h: f64) -> Result<f64>
where
    F: Fn(&PhasePoint) -> Result<f64>,
{
    let a = f(&casimir_flow(sys, pt, grad, h)?)?;
    let b = f(&casimir_flow(sys, pt, grad, -h)?)?;
    Ok((a - b) / (2.0 * h))
}

fn basis(n: usize) -> Vec<TangentVector> {
    (0..2 * n)
        .map(|k| {
            let mut t = TangentVector::zero(n);
            if k < n {
                t.v[k] = 1.0;
            } else {
                t.w[k - n] = 1.0;
            }
            t
        })
        .collect()
}

/// `df` on the basis tangents by central differences along `displace`.
pub fn differential<F>(sys: &MagneticSystem, f: &F, pt: &PhasePoint, h: f64) -> Result<Vec<f64>>
where
    F: Fn(&PhasePoint) -> Result<f64>,
{
    basis(sys.m_dim())
        .iter()
        .map(|t| Ok((f(&pt.displace(sys, t, h)?)? - f(&pt.displace(sys, t, -h)?)?) / (2.0 * h)))
        .collect()
}

/// `{f, k} = df(X_k)` with `omega(Y, X_k) = dk(Y)`, both differentials by finite differences.
pub fn poisson_fd<F, K>(sys: &MagneticSystem, f: &F, k: &K, pt: &PhasePoint, h: f64) -> Result<f64>
where
    F: Fn(&PhasePoint) -> Result<f64>,
    K: Fn(&PhasePoint) -> Result<f64>,
{
    let b = basis(sys.m_dim());
    let m = DMatrix::from_fn(b.len(), b.len(), |i, j| omega(sys, &b[i], &b[j]));
    let dk = DVector::from_vec(differential(sys, k, pt, h)?);
    let xk = m.lu().solve(&dk).ok_or(AngleError::SingularFrequency(0.0))?;
    let df = DVector::from_vec(differential(sys, f, pt, h)?);
    Ok(df.dot(&xk))
}
