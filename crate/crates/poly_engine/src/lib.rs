//! Exact sparse multivariate polynomials over Q(sqrt 3), with Lie-Poisson brackets,
//! `B`-gradients, evaluation and a canonical text form.

pub mod error;
pub mod float;
pub mod matrix_poly;
pub mod poisson;
pub mod polynomial;

pub use error::{PolyError, Result};
pub use float::FloatPoly;
pub use matrix_poly::trace_power;
pub use poisson::{algebra_vars, b_gradient, lie_poisson_bracket, PoissonStructure, PolyVector};
pub use polynomial::{Monomial, Polynomial, DEGREE_CAP};

/// `(degree, component)` pairs of `p`, ascending.
pub fn homogeneous_components(p: &Polynomial) -> Vec<(u32, Polynomial)> {
    p.homogeneous_components()
}
