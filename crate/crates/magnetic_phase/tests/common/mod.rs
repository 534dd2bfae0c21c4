#![allow(dead_code)]

use invariant_solver::indecomposable_generators;
use magnetic_phase::{IntegralFunction, MagneticSystem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Slice generators of the `A`-invariants on `m` through degree 3 (degree 2 in the irregular case).
pub fn slice_generators(sys: &MagneticSystem) -> Vec<(String, IntegralFunction)> {
    let deg = if sys.m_dim() == 6 { 3 } else { 2 };
    let set = indecomposable_generators(&sys.sub, deg, true).unwrap();
    set.generators
        .iter()
        .map(|g| (g.name.clone(), IntegralFunction::slice(sys, g.poly.clone()).unwrap()))
        .collect()
}

pub fn moment_components(sys: &MagneticSystem) -> Vec<(String, IntegralFunction)> {
    (0..sys.dim()).map(|i| (format!("P{}", i + 1), IntegralFunction::moment_component(sys, i))).collect()
}

pub fn systems(eps: f64) -> Vec<MagneticSystem> {
    vec![MagneticSystem::regular(eps).unwrap(), MagneticSystem::irregular(eps).unwrap()]
}
