use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Poly(#[from] poly_engine::PolyError),
    #[error(transparent)]
    Lie(#[from] lie_core::LieError),
    #[error("degree {0} exceeds the symbolic degree cap")]
    DegreeCap(u32),
    #[error("polynomial is not over the algebra coordinates")]
    VariableMismatch,
}

pub type Result<T> = std::result::Result<T, InvariantError>;
