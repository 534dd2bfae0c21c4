use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Lie(#[from] lie_core::LieError),
    #[error(transparent)]
    Poly(#[from] poly_engine::PolyError),
    #[error(transparent)]
    Invariant(#[from] invariant_solver::InvariantError),
    #[error(transparent)]
    Magnetic(#[from] magnetic_phase::MagneticError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("operation needs the {0} case")]
    WrongCase(&'static str),
    #[error("the algebra carries no root data")]
    NoRootData,
}

pub type Result<T> = std::result::Result<T, VerifyError>;
