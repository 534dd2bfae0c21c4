//! Casimirs of su(3) and their restriction to the shifted slice `X - eps W`.

use std::sync::Arc;

use lie_core::{LieAlgebraSpec, Scalar, SubalgebraSpec};
use num_traits::Zero;
use poly_engine::{trace_power, Polynomial};

use crate::error::{InvariantError, Result};

/// `C2(Y) = B(Y,Y) = -1/2 tr(Y^2)` and `C3(Y) = i tr(Y^3)`.
///
/// On the Hermitian image `xi = iY` these read `1/2 tr(xi^2)` and `-tr(xi^3)`.
pub fn casimirs_su3(alg: &LieAlgebraSpec) -> Result<(Polynomial, Polynomial)> {
    let (re2, _) = trace_power(alg, 2)?;
    let (_, im3) = trace_power(alg, 3)?;
    Ok((re2.scale(&Scalar::from_ratio(-1, 2)), -&im3))
}

/// How the magnetic parameter enters a restriction.
#[derive(Clone, Debug, PartialEq)]
pub enum EpsMode {
    /// Keep `eps` as an extra variable named `eps`, last in the variable list.
    Symbolic,
    Value(Scalar),
}

/// `Res_W(C)(X) = C(X - eps W)` for `X` in `m`, as a polynomial in the `m` coordinates.
pub fn restrict_shift(c: &Polynomial, sub: &SubalgebraSpec, w: &[Scalar], eps: &EpsMode) -> Result<Polynomial> {
    let alg = &sub.parent;
    if **c.vars() != alg.coordinate_names {
        return Err(InvariantError::VariableMismatch);
    }
    let mut names: Vec<String> = sub.m_indices.iter().map(|&i| alg.coordinate_names[i].clone()).collect();
    if matches!(eps, EpsMode::Symbolic) {
        names.push("eps".into());
    }
    let vars = Arc::new(names);
    let eps_poly = match eps {
        EpsMode::Symbolic => Polynomial::var(&vars, vars.len() - 1),
        EpsMode::Value(v) => Polynomial::constant(&vars, v.clone()),
    };
    let images: Vec<Polynomial> = (0..alg.dim)
        .map(|i| {
            let x = match sub.m_indices.iter().position(|&k| k == i) {
                Some(local) => Polynomial::var(&vars, local),
                None => Polynomial::zero(&vars),
            };
            if w[i].is_zero() {
                x
            } else {
                &x - &eps_poly.scale(&w[i])
            }
        })
        .collect();
    Ok(c.compose(&images)?)
}
