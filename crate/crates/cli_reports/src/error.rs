use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("reading config {path}: {source}")]
    ConfigFile { path: PathBuf, source: std::io::Error },
    #[error("parsing config {path}: {source}")]
    ConfigParse { path: PathBuf, source: toml::de::Error },
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("writing {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Lie(#[from] lie_core::LieError),
    #[error(transparent)]
    Poly(#[from] poly_engine::PolyError),
    #[error(transparent)]
    Invariant(#[from] invariant_solver::InvariantError),
    #[error(transparent)]
    Magnetic(#[from] magnetic_phase::MagneticError),
    #[error(transparent)]
    Verify(#[from] chain_verifier::VerifyError),
    #[error(transparent)]
    Angle(#[from] action_angle::AngleError),
}

pub type Result<T> = std::result::Result<T, CliError>;
