use thiserror::Error;

#[derive(Debug, Error)]
pub enum AngleError {
    #[error(transparent)]
    Lie(#[from] lie_core::LieError),
    #[error(transparent)]
    Invariant(#[from] invariant_solver::InvariantError),
    #[error(transparent)]
    Magnetic(#[from] magnetic_phase::MagneticError),
    #[error("root coordinate z{root} has modulus {modulus:.3e}; the phase chart is undefined")]
    ChartUndefined { root: usize, modulus: f64 },
    #[error("eigenvalue gap {0:.3e} of the shifted fiber point is too small for a torus frame")]
    DegenerateFrame(f64),
    #[error("frequency matrix is singular (size {0:.3e})")]
    SingularFrequency(f64),
    #[error("section equation did not converge (residual {0:.3e})")]
    NoConvergence(f64),
    #[error("expected a {0} element")]
    Shape(&'static str),
}

pub type Result<T> = std::result::Result<T, AngleError>;
