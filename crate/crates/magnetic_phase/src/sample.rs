//! Random points on the locus where the rank and bracket statements hold.

use lie_core::{exp_map, regularity_f64, GroupElement};
use rand::Rng;

use crate::error::{MagneticError, Result};
use crate::system::{slice_map, CaseTag, MagneticSystem, PhasePoint};

/// Minimum size of `|z_k(xi)|` (regular case) or `|X|` (irregular case).
pub const GENERIC_FLOOR: f64 = 1e-3;
const MAX_DRAWS: usize = 1000;

/// `exp` of a random algebra element with coefficients in `[-pi, pi]`.
pub fn random_group<R: Rng>(sys: &MagneticSystem, rng: &mut R) -> GroupElement {
    let x: Vec<f64> = (0..sys.dim()).map(|_| rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)).collect();
    exp_map(&sys.num, &x).expect("matrix algebra")
}

pub fn random_fiber<R: Rng>(sys: &MagneticSystem, rng: &mut R, scale: f64) -> Vec<f64> {
    (0..sys.m_dim()).map(|_| rng.gen_range(-scale..scale)).collect()
}

/// Whether `pt` lies on the generic locus.
pub fn is_generic(sys: &MagneticSystem, pt: &PhasePoint) -> bool {
    let xi = slice_map(sys, pt);
    let regular = regularity_f64(&sys.num, &xi).map(|r| r.regular).unwrap_or(false);
    let fiber = match sys.case_tag {
        // root coordinates come in (x_k, y_k) pairs along m
        CaseTag::Regular => pt.x.chunks(2).all(|c| c[0].hypot(c[1]) > GENERIC_FLOOR),
        CaseTag::Irregular => pt.x.iter().map(|c| c * c).sum::<f64>().sqrt() > GENERIC_FLOOR,
    };
    regular && fiber
}

/// Resamples until the point is generic.
pub fn random_regular_point<R: Rng>(sys: &MagneticSystem, rng: &mut R) -> Result<PhasePoint> {
    for _ in 0..MAX_DRAWS {
        let pt = PhasePoint { g: random_group(sys, rng), x: random_fiber(sys, rng, 1.0) };
        if is_generic(sys, &pt) {
            return Ok(pt);
        }
    }
    Err(MagneticError::Sampling(MAX_DRAWS))
}
