use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials are over different variable lists")]
    VariableMismatch,
    #[error("degree {0} exceeds the symbolic degree cap")]
    DegreeCap(u32),
    #[error("expected {expected} values, got {got}")]
    Length { expected: usize, got: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("algebra has no matrix representation")]
    NoMatrixRep,
}

pub type Result<T> = std::result::Result<T, PolyError>;
