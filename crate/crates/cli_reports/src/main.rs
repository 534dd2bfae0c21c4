use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cli_reports::{
    cmd_brackets, cmd_centralizer, cmd_flow, cmd_verify, commands::generator_text, AlgebraName, CliError, CommonArgs,
    RunConfig, SubName,
};

#[derive(Parser, Debug)]
#[command(name = "superint", version, about = "Certificates for the SU(3) magnetic superintegrable chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every certificate for one case and write verify_<case>.json
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Generators and relations of a commutant
    Centralizer {
        #[arg(long, value_enum)]
        algebra: Option<AlgebraName>,
        #[arg(long, value_enum)]
        sub: Option<SubName>,
        /// Restrict to polynomials in the complement coordinates
        #[arg(long)]
        m_only: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Integrate the magnetic geodesic flow and monitor every first integral
    Flow {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Symbolic bracket tables for the slice generators and the moment components
    Brackets {
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Returns the stdout lines and whether every check passed.
fn run(cli: Cli) -> Result<(Vec<String>, bool), CliError> {
    let mut out = Vec::new();
    match cli.command {
        Command::Verify { common } => {
            let (cfg, _) = RunConfig::from_args(&common)?;
            let (rep, path) = cmd_verify(&cfg)?;
            for line in rep.summary() {
                out.push(line);
            }
            out.push(format!("report: {}", path.display()));
            Ok((out, rep.passed))
        }
        Command::Centralizer { algebra, sub, m_only, common } => {
            let (cfg, file) = RunConfig::from_args(&common)?;
            let algebra = algebra.or(file.algebra).unwrap_or(AlgebraName::Su3);
            let sub = sub.or(file.sub).unwrap_or(SubName::Torus);
            let m_only = m_only || file.m_only.unwrap_or(false);
            let (set, path) = cmd_centralizer(algebra, sub, m_only, cfg.max_degree, &cfg.out_dir)?;
            out.extend(generator_text(&set).lines().map(String::from));
            out.push(format!("report: {}", path.display()));
            Ok((out, true))
        }
        Command::Flow { common } => {
            let (cfg, _) = RunConfig::from_args(&common)?;
            let (file, csv, json) = cmd_flow(&cfg)?;
            for e in &file.entries {
                out.push(format!("{} {} drift={:e}", if e.pass { "PASS" } else { "FAIL" }, e.function, e.max_drift));
            }
            out.push(format!("closed-form fiber deviation={:e}", file.closed_form_max_dev));
            out.push(format!("trajectory: {}", csv.display()));
            out.push(format!("report: {}", json.display()));
            Ok((out, file.passed))
        }
        Command::Brackets { common } => {
            let (cfg, _) = RunConfig::from_args(&common)?;
            let (_, txt, json) = cmd_brackets(&cfg)?;
            out.extend(std::fs::read_to_string(&txt).unwrap_or_default().lines().map(String::from));
            out.push(format!("report: {} {}", txt.display(), json.display()));
            Ok((out, true))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((lines, passed)) => {
            // a closed pipe downstream is not an error here
            let mut stdout = std::io::stdout().lock();
            for l in lines {
                if writeln!(stdout, "{l}").is_err() {
                    break;
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
