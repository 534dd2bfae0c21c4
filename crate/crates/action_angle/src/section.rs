//! A local section of the action-flow orbits, cut out by right-`A`-invariant functions of `g`.

use lie_core::exp_map;
use magnetic_phase::{slice_map, CaseTag, MagneticSystem, PhasePoint};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{AngleError, Result};
use crate::frame::{torus_frame, Casimirs};

const NEWTON_ITERS: usize = 100;
/// Accepted residual of the section equations.
pub const SECTION_TOL: f64 = 1e-12;

/// Level set `{ |g_rc|^2 = target }` over the chosen entries, crossed by the flows
/// `g -> g exp(-sum s_j D_j)` with `D_j` the torus frame (regular) or `grad C2(xi)` (irregular).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub case_tag: CaseTag,
    pub entries: Vec<(usize, usize)>,
    pub targets: Vec<f64>,
    /// Parameters of the reference point; the default starting guess.
    pub reference: Vec<f64>,
}

/// Default offset of the reference point from the section.
pub fn default_offset(case: CaseTag) -> Vec<f64> {
    match case {
        CaseTag::Regular => vec![0.2, -0.3],
        CaseTag::Irregular => vec![0.2],
    }
}

/// Candidate entry sets whose moduli are right-`A`-invariant.
fn candidates(case: CaseTag) -> Vec<Vec<(usize, usize)>> {
    match case {
        // every entry: the diagonal torus only rescales columns by phases
        CaseTag::Regular => {
            let all: Vec<(usize, usize)> = (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).collect();
            let mut out = Vec::new();
            for a in 0..all.len() {
                for b in a + 1..all.len() {
                    out.push(vec![all[a], all[b]]);
                }
            }
            out
        }
        // third column: the block subgroup only rescales it by a phase
        CaseTag::Irregular => (0..3).map(|r| vec![(r, 2)]).collect(),
    }
}

fn jacobian(entries: &[(usize, usize)], gs: &DMatrix<Complex64>, mats: &[DMatrix<Complex64>]) -> DMatrix<f64> {
    let mut jac = DMatrix::zeros(entries.len(), mats.len());
    for (j, dm) in mats.iter().enumerate() {
        let dg = -(gs * dm);
        for (r, &(a, b)) in entries.iter().enumerate() {
            jac[(r, j)] = 2.0 * (gs[(a, b)].conj() * dg[(a, b)]).re;
        }
    }
    jac
}

fn smallest_singular(m: &DMatrix<f64>) -> f64 {
    m.singular_values().iter().copied().fold(f64::INFINITY, f64::min)
}

/// Flow directions at `pt`, as coefficient vectors.
pub fn directions(sys: &MagneticSystem, cas: &Casimirs, pt: &PhasePoint) -> Result<Vec<Vec<f64>>> {
    Ok(match sys.case_tag {
        CaseTag::Regular => torus_frame(sys, &pt.x)?.to_vec(),
        CaseTag::Irregular => vec![cas.gradients(sys, &slice_map(sys, pt))[0].clone()],
    })
}

fn moved(sys: &MagneticSystem, g: &DMatrix<Complex64>, dirs: &[Vec<f64>], s: &[f64]) -> Result<DMatrix<Complex64>> {
    let gen: Vec<f64> = (0..sys.dim()).map(|i| -dirs.iter().zip(s).map(|(d, c)| d[i] * c).sum::<f64>()).collect();
    Ok(g * exp_map(&sys.num, &gen)?.matrix())
}

fn values(entries: &[(usize, usize)], m: &DMatrix<Complex64>) -> Vec<f64> {
    entries.iter().map(|&(r, c)| m[(r, c)].norm_sqr()).collect()
}

impl Section {
    /// The section through `exp(-offset . D)` applied to `pt`; `pt` then has parameters `offset`.
    /// Among the invariant entries, the set with the best conditioned crossing is used.
    pub fn through(sys: &MagneticSystem, cas: &Casimirs, pt: &PhasePoint, offset: &[f64]) -> Result<Self> {
        let dirs = directions(sys, cas, pt)?;
        if offset.len() != dirs.len() {
            return Err(AngleError::Shape("offset with one entry per flow direction"));
        }
        let mats: Vec<DMatrix<Complex64>> = dirs.iter().map(|d| sys.num.to_matrix(d)).collect();
        let base = moved(sys, pt.g.matrix(), &dirs, offset)?;
        let mut best: Option<(f64, Vec<(usize, usize)>)> = None;
        for cand in candidates(sys.case_tag) {
            let q = smallest_singular(&jacobian(&cand, &base, &mats));
            if best.as_ref().map_or(true, |(b, _)| q > *b) {
                best = Some((q, cand));
            }
        }
        let (q, entries) = best.expect("nonempty candidate list");
        if !(q > 1e-8) {
            return Err(AngleError::NoConvergence(q));
        }
        let targets = values(&entries, &base);
        Ok(Section { case_tag: sys.case_tag, entries, targets, reference: offset.to_vec() })
    }

    /// Flow parameters `s` with `g exp(-s . D)` on the section, by damped Newton from `guess`.
    pub fn locate(&self, sys: &MagneticSystem, cas: &Casimirs, pt: &PhasePoint, guess: Option<&[f64]>) -> Result<Vec<f64>> {
        let dirs = directions(sys, cas, pt)?;
        let mats: Vec<DMatrix<Complex64>> = dirs.iter().map(|d| sys.num.to_matrix(d)).collect();
        let mut s = guess.unwrap_or(&self.reference).to_vec();
        let resid = |s: &[f64]| -> Result<(DMatrix<Complex64>, Vec<f64>)> {
            let gs = moved(sys, pt.g.matrix(), &dirs, s)?;
            let f = values(&self.entries, &gs).iter().zip(&self.targets).map(|(v, t)| v - t).collect();
            Ok((gs, f))
        };
        let norm = |f: &[f64]| f.iter().map(|v| v * v).sum::<f64>().sqrt();
        let (mut gs, mut f) = resid(&s)?;
        for _ in 0..NEWTON_ITERS {
            if norm(&f) < 1e-15 {
                break;
            }
            let jac = jacobian(&self.entries, &gs, &mats);
            let step = jac.lu().solve(&DVector::from_vec(f.iter().map(|v| -v).collect())).ok_or(AngleError::NoConvergence(norm(&f)))?;
            let mut t = 1.0;
            loop {
                let trial: Vec<f64> = s.iter().zip(step.iter()).map(|(a, d)| a + t * d).collect();
                let (g2, f2) = resid(&trial)?;
                if norm(&f2) < norm(&f) || t < 1e-6 {
                    s = trial;
                    gs = g2;
                    f = f2;
                    break;
                }
                t *= 0.5;
            }
            if step.amax() * t < 1e-15 {
                break;
            }
        }
        if !(norm(&f) <= SECTION_TOL) {
            return Err(AngleError::NoConvergence(norm(&f)));
        }
        Ok(s)
    }
}
