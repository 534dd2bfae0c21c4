use thiserror::Error;

#[derive(Debug, Error)]
pub enum MagneticError {
    #[error(transparent)]
    Lie(#[from] lie_core::LieError),
    #[error(transparent)]
    Poly(#[from] poly_engine::PolyError),
    #[error(transparent)]
    Invariant(#[from] invariant_solver::InvariantError),
    #[error("magnetic term is not fixed by the subgroup: |[a, W]| = {0:e}")]
    NotFixed(f64),
    #[error("W is not of the expected type: {0}")]
    WrongType(String),
    #[error("point has {got} fiber coordinates, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("function is written in variables {got:?}, expected the algebra coordinates")]
    VariableMismatch { got: Vec<String> },
    #[error("step size and end time must be positive (dt = {dt}, t_end = {t_end})")]
    BadStep { dt: f64, t_end: f64 },
    #[error("unitarity drift {drift:e} at t = {t} exceeds the step tolerance")]
    Drift { t: f64, drift: f64 },
    #[error("empty trajectory")]
    EmptyTrajectory,
    #[error("no admissible point after {0} draws")]
    Sampling(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, MagneticError>;
