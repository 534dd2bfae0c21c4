//! Bracket identities sampled at random generic points.

use magnetic_phase::{moment_map, random_regular_point, twisted_bracket, IntegralFunction, MagneticSystem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::certify::{moment_generators, slice_generators, SAMPLE_TOL};
use crate::error::Result;
use crate::report::{CertificateReport, Check};

/// Largest `|{P_i, pi*theta}|` over moment components and slice generators.
pub fn mixed_block_check(sys: &MagneticSystem, samples: usize, seed: u64) -> Result<CertificateReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let moments = moment_generators(sys);
    let slices: Vec<(String, IntegralFunction)> = slice_generators(sys)?
        .into_iter()
        .map(|(n, p)| Ok((n, IntegralFunction::slice(sys, p)?)))
        .collect::<Result<_>>()?;
    let mut worst = vec![0.0f64; slices.len()];
    for _ in 0..samples {
        let pt = random_regular_point(sys, &mut rng)?;
        for (k, (_, s)) in slices.iter().enumerate() {
            for (_, p) in &moments {
                worst[k] = worst[k].max(twisted_bracket(sys, p, s, &pt).abs());
            }
        }
    }
    let mut rep = CertificateReport::new(sys.case_tag, samples, seed);
    for ((name, _), w) in slices.iter().zip(worst) {
        rep.push(Check::within(format!("max_i |{{P_i, {name}}}|"), 0.0, w, SAMPLE_TOL));
    }
    Ok(rep)
}

/// Largest `|{P_i, P_j} - B(P, [e^i, e^j])|` over all pairs, `e^i` the `B`-dual basis.
pub fn moment_closure_check(sys: &MagneticSystem, samples: usize, seed: u64) -> Result<CertificateReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let moments = moment_generators(sys);
    let n = sys.dim();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let pt = random_regular_point(sys, &mut rng)?;
        let p = moment_map(sys, &pt);
        for i in 0..n {
            for j in i + 1..n {
                let (mut ei, mut ej) = (vec![0.0; n], vec![0.0; n]);
                ei[i] = 1.0;
                ej[j] = 1.0;
                let want = sys.b(&p, &sys.bracket(&sys.num.raise(&ei), &sys.num.raise(&ej)));
                let got = twisted_bracket(sys, &moments[i].1, &moments[j].1, &pt);
                worst = worst.max((got - want).abs());
            }
        }
    }
    let mut rep = CertificateReport::new(sys.case_tag, samples, seed);
    rep.push(Check::within("max |{P_i, P_j} - P_[e^i,e^j]|", 0.0, worst, SAMPLE_TOL));
    Ok(rep)
}
