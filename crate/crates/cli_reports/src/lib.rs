//! Command-line surface: run configuration, the verification suite and file exports.

pub mod commands;
pub mod config;
pub mod error;
pub mod verify;

pub use commands::{cmd_brackets, cmd_centralizer, cmd_flow, cmd_verify, BracketsFile, ConservationFile};
pub use config::{AlgebraName, Case, CommonArgs, FileConfig, RunConfig, SubName, OUT_DIR_ENV};
pub use error::{CliError, Result};
pub use verify::{run_verify, Section, VerifyReport};
