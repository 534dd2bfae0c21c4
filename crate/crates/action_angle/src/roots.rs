//! Root coordinates and their phases on 3x3 matrices.

use lie_core::su::SU3_ROOT_POSITIONS;
use magnetic_phase::{moment_map, MagneticSystem, PhasePoint};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{AngleError, Result};

/// Phases below this modulus are not defined.
pub const PHASE_FLOOR: f64 = 1e-6;

/// `alpha_k(sigma_1 h_1 + sigma_2 h_2)` for `alpha_1, alpha_2, alpha_1 + alpha_2`.
pub const THETA: [[f64; 2]; 3] = [[2.0, -1.0], [-1.0, 2.0], [1.0, 1.0]];

/// Left inverse of [`THETA`].
pub const LEFT_INVERSE: [[f64; 3]; 2] = [[1.0 / 3.0, 0.0, 1.0 / 3.0], [0.0, 1.0 / 3.0, 1.0 / 3.0]];

/// Representative of `a` in `[0, 2 pi)`.
pub fn reduce_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// The branch of `a` (mod 2 pi) closest to `near`.
pub fn unwrap_near(a: f64, near: f64) -> f64 {
    near + (a - near + std::f64::consts::PI).rem_euclid(TAU) - std::f64::consts::PI
}

/// `z_k = B(Y, E_-alpha_k) = -1/2 Y_ij` for the positive root at `(i, j)`.
pub fn root_coordinates(y: &DMatrix<Complex64>) -> Result<[Complex64; 3]> {
    if y.nrows() != 3 || y.ncols() != 3 {
        return Err(AngleError::Shape("3x3"));
    }
    Ok(SU3_ROOT_POSITIONS.map(|(i, j)| y[(i, j)] * -0.5))
}

pub fn phases_of_matrix(y: &DMatrix<Complex64>) -> Result<[f64; 3]> {
    let z = root_coordinates(y)?;
    for (k, zk) in z.iter().enumerate() {
        if zk.norm() <= PHASE_FLOOR {
            return Err(AngleError::ChartUndefined { root: k + 1, modulus: zk.norm() });
        }
    }
    Ok(z.map(|zk| reduce_angle(zk.arg())))
}

/// Phases of the root coordinates of `P(g, X)`.
pub fn root_phases(sys: &MagneticSystem, pt: &PhasePoint) -> Result<[f64; 3]> {
    phases_of_matrix(&sys.num.to_matrix(&moment_map(sys, pt)))
}

/// `phi = -L theta` reduced mod 2 pi. Moving one phase to another branch shifts `phi` by a
/// multiple of `2 pi / 3` (the center of SU(3) acts trivially on roots), so pass phases that
/// were unwrapped along a path when comparing.
pub fn angles_from_phases(theta: &[f64; 3]) -> [f64; 2] {
    LEFT_INVERSE.map(|row| reduce_angle(-row.iter().zip(theta).map(|(l, t)| l * t).sum::<f64>()))
}

/// Torus angles of `P(g, X)` built from its root phases.
pub fn torus_angles(sys: &MagneticSystem, pt: &PhasePoint) -> Result<[f64; 2]> {
    Ok(angles_from_phases(&root_phases(sys, pt)?))
}
