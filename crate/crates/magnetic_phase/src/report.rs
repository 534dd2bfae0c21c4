//! Drift of monitored integrals along a trajectory, and CSV/JSON export.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{MagneticError, Result};
use crate::flow::FlowTrajectory;
use crate::integrals::IntegralFunction;
use crate::system::MagneticSystem;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConservationEntry {
    pub function: String,
    pub initial: f64,
    pub max_drift: f64,
    pub pass: bool,
}

/// `max_t |f(pt_t) - f(pt_0)|` per function; `pass` compares against `tol`.
pub fn conservation_report(
    sys: &MagneticSystem,
    traj: &FlowTrajectory,
    functions: &[(String, IntegralFunction)],
    tol: f64,
) -> Result<Vec<ConservationEntry>> {
    let first = traj.points.first().ok_or(MagneticError::EmptyTrajectory)?;
    Ok(functions
        .iter()
        .map(|(name, f)| {
            let initial = f.evaluate(sys, first);
            let max_drift = traj.points.iter().map(|p| (f.evaluate(sys, p) - initial).abs()).fold(0.0, f64::max);
            ConservationEntry { function: name.clone(), initial, max_drift, pass: max_drift < tol }
        })
        .collect())
}

pub fn conservation_json(entries: &[ConservationEntry]) -> Result<String> {
    Ok(serde_json::to_string_pretty(entries)?)
}

/// Header `t`, `Re/Im g_ij` row-major, the `X` coordinates, then the monitored integrals.
pub fn write_trajectory_csv<W: Write>(
    out: &mut W,
    sys: &MagneticSystem,
    traj: &FlowTrajectory,
    functions: &[(String, IntegralFunction)],
) -> Result<()> {
    let n = sys.num.matrix_size().unwrap_or(3);
    let mut header = vec!["t".to_string()];
    for i in 0..n {
        for j in 0..n {
            header.push(format!("re_g{}{}", i + 1, j + 1));
            header.push(format!("im_g{}{}", i + 1, j + 1));
        }
    }
    header.extend(sys.sub.m_indices.iter().map(|&i| sys.alg.coordinate_names[i].clone()));
    header.extend(functions.iter().map(|(name, _)| name.clone()));
    writeln!(out, "{}", header.join(","))?;
    for (t, p) in traj.times.iter().zip(&traj.points) {
        let mut row = vec![format!("{t:.9}")];
        let m = p.g.matrix();
        for i in 0..n {
            for j in 0..n {
                row.push(format!("{:.15e}", m[(i, j)].re));
                row.push(format!("{:.15e}", m[(i, j)].im));
            }
        }
        row.extend(p.x.iter().map(|c| format!("{c:.15e}")));
        row.extend(functions.iter().map(|(_, f)| format!("{:.15e}", f.evaluate(sys, p))));
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}
