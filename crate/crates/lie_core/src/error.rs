use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LieError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("the zero element is central; its centralizer is the whole algebra")]
    ZeroElement,
    #[error("matrix is not special unitary (deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("algebra `{0}` carries no matrix representation")]
    NoMatrixRep(String),
    #[error("centralizer of dimension {0} is not spanned by basis elements")]
    NotBasisAligned(usize),
    #[error("invalid subalgebra split: {0}")]
    InvalidSplit(String),
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
