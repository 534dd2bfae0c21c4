//! Angles along the action flows, frequency matrices and canonically rescaled angles.

use magnetic_phase::{casimir_flow, CaseTag, MagneticSystem, PhasePoint};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{AngleError, Result};
use crate::frame::{frequency_exact, Casimirs};
use crate::roots::{reduce_angle, root_phases};
use crate::section::{default_offset, Section};

/// Step of the central differences along action flows.
pub const FD_STEP: f64 = 1e-5;
/// Below this `|det Omega|` (regular) or `|Omega|` (irregular) no rescaling is attempted.
pub const SINGULAR_TOL: f64 = 1e-10;

/// Angle data at one point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleChart {
    /// Root phases of `P`; absent where a root coordinate vanishes.
    pub theta: Option<[f64; 3]>,
    /// Torus angles reduced to `[0, 2 pi)`; in the irregular case both are multiples of one flow time.
    pub phi: Vec<f64>,
    /// Frequency matrix by flow differencing, row-major.
    pub omega: Vec<Vec<f64>>,
    pub rescaled: Vec<f64>,
    pub actions: Vec<f64>,
}

/// Local angle coordinates near a reference point.
#[derive(Clone, Debug)]
pub struct LiouvilleChart {
    pub casimirs: Casimirs,
    pub section: Section,
}

impl LiouvilleChart {
    pub fn new(sys: &MagneticSystem, reference: &PhasePoint) -> Result<Self> {
        Self::with_offset(sys, reference, &default_offset(sys.case_tag))
    }

    pub fn with_offset(sys: &MagneticSystem, reference: &PhasePoint, offset: &[f64]) -> Result<Self> {
        let casimirs = Casimirs::new(sys)?;
        let section = Section::through(sys, &casimirs, reference, offset)?;
        Ok(LiouvilleChart { casimirs, section })
    }

    /// Flow parameters from the section; continuous in `pt` when `guess` follows it.
    pub fn params(&self, sys: &MagneticSystem, pt: &PhasePoint, guess: Option<&[f64]>) -> Result<Vec<f64>> {
        self.section.locate(sys, &self.casimirs, pt, guess)
    }

    /// Torus angles on the branch fixed by `params` (not reduced).
    pub fn angles_from_params(&self, sys: &MagneticSystem, pt: &PhasePoint, params: &[f64]) -> Result<Vec<f64>> {
        Ok(match sys.case_tag {
            CaseTag::Regular => params.to_vec(),
            CaseTag::Irregular => {
                let om = frequency_exact(sys, &self.casimirs, pt)?;
                vec![om[(0, 0)] * params[0], om[(1, 0)] * params[0]]
            }
        })
    }

    pub fn angles(&self, sys: &MagneticSystem, pt: &PhasePoint, guess: Option<&[f64]>) -> Result<Vec<f64>> {
        let p = self.params(sys, pt, guess)?;
        self.angles_from_params(sys, pt, &p)
    }

    pub fn actions(&self, sys: &MagneticSystem, pt: &PhasePoint) -> Vec<f64> {
        self.casimirs.actions(sys, pt)
    }

    /// `Omega_jk = d phi_j (X_{J_k})` by central differences along the exact action flows.
    pub fn frequency_matrix(&self, sys: &MagneticSystem, pt: &PhasePoint) -> Result<DMatrix<f64>> {
        let p0 = self.params(sys, pt, None)?;
        let grads = self.casimirs.action_gradients(sys, pt);
        let mut om = DMatrix::zeros(2, grads.len());
        for (k, g) in grads.iter().enumerate() {
            let at = |t: f64| -> Result<Vec<f64>> {
                let q = casimir_flow(sys, pt, g, t)?;
                self.angles(sys, &q, Some(&p0))
            };
            let (a, b) = (at(FD_STEP)?, at(-FD_STEP)?);
            for j in 0..2 {
                om[(j, k)] = (a[j] - b[j]) / (2.0 * FD_STEP);
            }
        }
        Ok(om)
    }

    /// `Omega^-1 phi` (regular) or `u . phi` with `u = Omega^T / |Omega|^2` (irregular),
    /// using the closed-form frequencies so the result is smooth in `pt`.
    pub fn rescaled_from_params(&self, sys: &MagneticSystem, pt: &PhasePoint, params: &[f64]) -> Result<Vec<f64>> {
        let phi = DVector::from_vec(self.angles_from_params(sys, pt, params)?);
        let om = frequency_exact(sys, &self.casimirs, pt)?;
        match sys.case_tag {
            CaseTag::Regular => {
                let det = om.determinant();
                if !(det.abs() > SINGULAR_TOL) {
                    return Err(AngleError::SingularFrequency(det.abs()));
                }
                let inv = om.try_inverse().ok_or(AngleError::SingularFrequency(det.abs()))?;
                Ok((inv * phi).iter().copied().collect())
            }
            CaseTag::Irregular => {
                let u = normalizer(&om)?;
                Ok(vec![u[0] * phi[0] + u[1] * phi[1]])
            }
        }
    }

    pub fn rescaled_angles(&self, sys: &MagneticSystem, pt: &PhasePoint, guess: Option<&[f64]>) -> Result<Vec<f64>> {
        let p = self.params(sys, pt, guess)?;
        self.rescaled_from_params(sys, pt, &p)
    }

    pub fn chart(&self, sys: &MagneticSystem, pt: &PhasePoint) -> Result<AngleChart> {
        let theta = match root_phases(sys, pt) {
            Ok(t) => Some(t),
            Err(AngleError::ChartUndefined { .. }) => None,
            Err(e) => return Err(e),
        };
        let p = self.params(sys, pt, None)?;
        let om = self.frequency_matrix(sys, pt)?;
        Ok(AngleChart {
            theta,
            phi: self.angles_from_params(sys, pt, &p)?.into_iter().map(reduce_angle).collect(),
            omega: om.row_iter().map(|r| r.iter().copied().collect()).collect(),
            rescaled: self.rescaled_from_params(sys, pt, &p)?,
            actions: self.actions(sys, pt),
        })
    }
}

/// `u = Omega^T / |Omega|^2` for a single-column frequency matrix, so that `u . Omega = 1`.
pub fn normalizer(om: &DMatrix<f64>) -> Result<Vec<f64>> {
    if om.ncols() != 1 {
        return Err(AngleError::Shape("single-column frequency matrix"));
    }
    let n2 = om.norm_squared();
    if !(n2.sqrt() > SINGULAR_TOL) {
        return Err(AngleError::SingularFrequency(n2.sqrt()));
    }
    Ok(om.column(0).iter().map(|v| v / n2).collect())
}
