//! Run parameters from flags, a TOML file and defaults, in that order of precedence.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use magnetic_phase::CaseTag;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Default output directory when neither `--out` nor the file sets one.
pub const OUT_DIR_ENV: &str = "SUPERINT_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Regular,
    Irregular,
}

impl From<Case> for CaseTag {
    fn from(c: Case) -> Self {
        match c {
            Case::Regular => CaseTag::Regular,
            Case::Irregular => CaseTag::Irregular,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraName {
    Su3,
    Su2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
pub enum SubName {
    #[serde(rename = "torus")]
    #[value(name = "torus")]
    Torus,
    #[serde(rename = "irregular-A")]
    #[value(name = "irregular-A")]
    IrregularA,
}

/// Everything a TOML config may set; unknown keys are rejected.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub case: Option<Case>,
    pub eps: Option<f64>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub t_end: Option<f64>,
    pub dt: Option<f64>,
    pub max_degree: Option<u32>,
    pub out_dir: Option<PathBuf>,
    pub algebra: Option<AlgebraName>,
    pub sub: Option<SubName>,
    pub m_only: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::ConfigFile { path: path.into(), source })?;
        toml::from_str(&text).map_err(|source| CliError::ConfigParse { path: path.into(), source })
    }
}

/// Flags shared by every subcommand.
#[derive(Clone, Debug, Default, Args)]
pub struct CommonArgs {
    /// TOML file with defaults for any of these flags
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub case: Option<Case>,
    /// Magnetic coupling, nonzero
    #[arg(long, allow_negative_numbers = true)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sample points for the rank and angle checks; bracket checks use five times as many
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub t_end: Option<f64>,
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Output directory (default: $SUPERINT_OUT_DIR, else ./out)
    #[arg(long = "out")]
    pub out_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub case: CaseTag,
    pub eps: f64,
    pub seed: u64,
    pub samples: usize,
    pub t_end: f64,
    pub dt: f64,
    pub max_degree: u32,
    #[serde(skip)]
    pub out_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            case: CaseTag::Regular,
            eps: 1.0,
            seed: 7,
            samples: 20,
            t_end: 10.0,
            dt: 1e-3,
            max_degree: 4,
            out_dir: PathBuf::from("out"),
        }
    }
}

impl RunConfig {
    /// Flags over file over defaults; `env_out` is the value of `SUPERINT_OUT_DIR`, if set.
    pub fn resolve(args: &CommonArgs, file: &FileConfig, env_out: Option<PathBuf>) -> Result<Self> {
        let d = RunConfig::default();
        let cfg = RunConfig {
            case: args.case.or(file.case).map(CaseTag::from).unwrap_or(d.case),
            eps: args.eps.or(file.eps).unwrap_or(d.eps),
            seed: args.seed.or(file.seed).unwrap_or(d.seed),
            samples: args.samples.or(file.samples).unwrap_or(d.samples),
            t_end: args.t_end.or(file.t_end).unwrap_or(d.t_end),
            dt: args.dt.or(file.dt).unwrap_or(d.dt),
            max_degree: args.max_degree.or(file.max_degree).unwrap_or(d.max_degree),
            out_dir: args.out_dir.clone().or_else(|| file.out_dir.clone()).or(env_out).unwrap_or(d.out_dir),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads `--config` if given and the environment default, then resolves.
    pub fn from_args(args: &CommonArgs) -> Result<(Self, FileConfig)> {
        let file = match &args.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let env_out = std::env::var_os(OUT_DIR_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
        Ok((Self::resolve(args, &file, env_out)?, file))
    }

    pub fn validate(&self) -> Result<()> {
        if !self.eps.is_finite() || self.eps == 0.0 {
            return Err(CliError::Config(format!("eps must be finite and nonzero, got {}", self.eps)));
        }
        if !self.dt.is_finite() || self.dt <= 0.0 {
            return Err(CliError::Config(format!("dt must be positive, got {}", self.dt)));
        }
        if !self.t_end.is_finite() || self.t_end <= 0.0 {
            return Err(CliError::Config(format!("t_end must be positive, got {}", self.t_end)));
        }
        if self.samples == 0 {
            return Err(CliError::Config("samples must be at least 1".into()));
        }
        if self.max_degree == 0 {
            return Err(CliError::Config("max_degree must be at least 1".into()));
        }
        Ok(())
    }

    pub fn case_name(&self) -> &'static str {
        match self.case {
            CaseTag::Regular => "regular",
            CaseTag::Irregular => "irregular",
        }
    }

    pub fn output(&self, file: &str) -> PathBuf {
        self.out_dir.join(file)
    }
}
