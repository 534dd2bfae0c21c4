//! Sampled certificates: the Poisson center, Jacobian ranks, and dimension bookkeeping.

use std::sync::Arc;

use invariant_solver::{casimir_count, casimirs_su3, independence_rank, restrict_shift, EpsMode};
use lie_core::linalg::{numeric_rank, RANK_TOL};
use magnetic_phase::{
    hamiltonian_field, is_generic, omega, random_regular_point, twisted_bracket, CaseTag, IntegralFunction,
    MagneticSystem, PhasePoint, TangentVector,
};
use nalgebra::DMatrix;
use poly_engine::{FloatPoly, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::report::{CertificateReport, Check};
use crate::table::{RegularChain, GENERATOR_NAMES};

/// Absolute tolerance for sampled identities.
pub const SAMPLE_TOL: f64 = 1e-10;

pub type Named = (String, IntegralFunction);

/// Sum of squares of the `m` coordinates.
pub fn norm_polynomial(sys: &MagneticSystem) -> Result<Polynomial> {
    let vars = Arc::new(sys.sub.m_indices.iter().map(|&i| sys.alg.coordinate_names[i].clone()).collect::<Vec<_>>());
    (0..vars.len()).try_fold(Polynomial::zero(&vars), |acc, i| Ok(&acc + &Polynomial::var(&vars, i).pow(2)?))
}

/// Slice generators: `u1, u2, u3, v, w` (regular) or `R` (irregular), over the `m` coordinates.
pub fn slice_generators(sys: &MagneticSystem) -> Result<Vec<(String, Polynomial)>> {
    Ok(match sys.case_tag {
        CaseTag::Regular => {
            let chain = RegularChain::new(sys)?;
            GENERATOR_NAMES.iter().map(|s| s.to_string()).zip(chain.generators_on_m()).collect()
        }
        CaseTag::Irregular => vec![("R".into(), norm_polynomial(sys)?)],
    })
}

pub fn moment_generators(sys: &MagneticSystem) -> Vec<Named> {
    (0..sys.dim()).map(|i| (format!("P{}", i + 1), IntegralFunction::moment_component(sys, i))).collect()
}

/// Generators of the joint algebra: `P1..P8` followed by the slice generators.
pub fn algebra_generators(sys: &MagneticSystem) -> Result<Vec<Named>> {
    let mut out = moment_generators(sys);
    for (name, p) in slice_generators(sys)? {
        out.push((name, IntegralFunction::slice(sys, p)?));
    }
    Ok(out)
}

/// Generators of the center: `P*C2, P*C3` (regular) or `pi*R` (irregular).
pub fn center_generators(sys: &MagneticSystem) -> Result<Vec<Named>> {
    Ok(match sys.case_tag {
        CaseTag::Regular => {
            let (c2, c3) = casimirs_su3(&sys.alg)?;
            vec![("J2".into(), IntegralFunction::moment(sys, c2)?), ("J3".into(), IntegralFunction::moment(sys, c3)?)]
        }
        CaseTag::Irregular => vec![("J".into(), IntegralFunction::slice(sys, norm_polynomial(sys)?)?)],
    })
}

fn tangent_basis(n: usize) -> Vec<TangentVector> {
    (0..2 * n)
        .map(|k| {
            let mut t = TangentVector::zero(n);
            if k < n {
                t.v[k] = 1.0;
            } else {
                t.w[k - n] = 1.0;
            }
            t
        })
        .collect()
}

/// Rows `df(e_k) = omega(e_k, X_f)` over the basis tangents `(e_k, 0)`, `(0, e_k)`.
pub fn phase_jacobian(sys: &MagneticSystem, pt: &PhasePoint, fns: &[Named]) -> DMatrix<f64> {
    let basis = tangent_basis(sys.m_dim());
    let mut j = DMatrix::zeros(fns.len(), basis.len());
    for (r, (_, f)) in fns.iter().enumerate() {
        let xf = hamiltonian_field(sys, pt, f);
        for (c, e) in basis.iter().enumerate() {
            j[(r, c)] = omega(sys, e, &xf);
        }
    }
    j
}

pub fn phase_rank(sys: &MagneticSystem, pt: &PhasePoint, fns: &[Named]) -> usize {
    numeric_rank(&phase_jacobian(sys, pt, fns), RANK_TOL)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    /// The point is off the generic locus, where lower ranks are expected.
    pub degenerate: bool,
}

/// Rank of the differential of the full generator list at `pt`.
pub fn jacobian_rank_pi1(sys: &MagneticSystem, pt: &PhasePoint) -> Result<RankResult> {
    let fns = algebra_generators(sys)?;
    Ok(RankResult { rank: phase_rank(sys, pt, &fns), degenerate: !is_generic(sys, pt) })
}

/// Brackets of the center with every generator, and the identification of `P*C` with `pi*Res_W C`.
pub fn center_check(sys: &MagneticSystem, samples: usize, seed: u64) -> Result<CertificateReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = algebra_generators(sys)?;
    let center = center_generators(sys)?;
    let (c2, c3) = casimirs_su3(&sys.alg)?;
    let pull = [("C2", c2), ("C3", c3)]
        .into_iter()
        .map(|(n, c)| {
            let res = restrict_shift(&c, &sys.sub, &sys.w, &EpsMode::Symbolic)?;
            Ok((n, FloatPoly::new(&c), FloatPoly::new(&res)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut worst = vec![vec![0.0f64; gens.len()]; center.len()];
    let mut ident = vec![0.0f64; pull.len()];
    for _ in 0..samples {
        let pt = random_regular_point(sys, &mut rng)?;
        for (a, (_, j)) in center.iter().enumerate() {
            for (b, (_, g)) in gens.iter().enumerate() {
                worst[a][b] = worst[a][b].max(twisted_bracket(sys, j, g, &pt).abs());
            }
        }
        let p = magnetic_phase::moment_map(sys, &pt);
        let mut xe = pt.x.clone();
        xe.push(sys.eps);
        for (k, (_, c, res)) in pull.iter().enumerate() {
            ident[k] = ident[k].max((c.eval(&p) - res.eval(&xe)).abs());
        }
    }
    let mut rep = CertificateReport::new(sys.case_tag, samples, seed);
    for (a, (jn, _)) in center.iter().enumerate() {
        for (b, (gn, _)) in gens.iter().enumerate() {
            rep.push(Check::within(format!("{{{jn}, {gn}}}"), 0.0, worst[a][b], SAMPLE_TOL));
        }
    }
    for (k, (n, _, _)) in pull.iter().enumerate() {
        rep.push(Check::within(format!("P*{n} - pi*Res_W {n}"), 0.0, ident[k], SAMPLE_TOL));
    }
    Ok(rep)
}

/// Measured and expected dimension data.
#[derive(Clone, Debug, PartialEq)]
pub struct Dimensions {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub rho_a: usize,
    pub trdeg_a: usize,
    pub trdeg_f1: usize,
    pub phase_dim: usize,
}

impl Dimensions {
    pub fn expected(case: CaseTag) -> Self {
        match case {
            CaseTag::Regular => Dimensions { n: 8, r: 2, s: 2, rho_a: 4, trdeg_a: 10, trdeg_f1: 8, phase_dim: 12 },
            CaseTag::Irregular => Dimensions { n: 8, r: 2, s: 1, rho_a: 1, trdeg_a: 7, trdeg_f1: 7, phase_dim: 8 },
        }
    }
}

/// Ranks measured at `samples` random generic points; each entry is the set of values seen.
pub fn measure_dimensions(sys: &MagneticSystem, samples: usize, seed: u64) -> Result<Vec<Dimensions>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = algebra_generators(sys)?;
    let moments = moment_generators(sys);
    let center = center_generators(sys)?;
    let slice: Vec<FloatPoly> = slice_generators(sys)?.iter().map(|(_, p)| FloatPoly::new(p)).collect();
    let mut out = Vec::new();
    for _ in 0..samples {
        let pt = random_regular_point(sys, &mut rng)?;
        let y: Vec<f64> = (0..sys.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        out.push(Dimensions {
            n: sys.dim(),
            r: casimir_count(&sys.num, &y),
            s: phase_rank(sys, &pt, &center),
            rho_a: independence_rank(&slice, &pt.x),
            trdeg_a: phase_rank(sys, &pt, &gens),
            trdeg_f1: phase_rank(sys, &pt, &moments),
            phase_dim: 2 * sys.m_dim(),
        });
    }
    Ok(out)
}

/// `(n, r, s, rho_A, trdeg A)` against the expected tuple, plus `trdeg A + trdeg R0 = dim T*M`.
pub fn dimension_report(sys: &MagneticSystem, samples: usize, seed: u64) -> Result<CertificateReport> {
    let seen = measure_dimensions(sys, samples, seed)?;
    let want = Dimensions::expected(sys.case_tag);
    let mut rep = CertificateReport::new(sys.case_tag, samples, seed);
    let field = |name: &str, get: &dyn Fn(&Dimensions) -> usize, rep: &mut CertificateReport| {
        let mut vals: Vec<usize> = seen.iter().map(get).collect();
        vals.sort_unstable();
        vals.dedup();
        let obs = vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("|");
        rep.push(Check::exact(name, get(&want), obs));
    };
    field("dim g", &|d| d.n, &mut rep);
    field("rank g", &|d| d.r, &mut rep);
    field("trdeg R0", &|d| d.s, &mut rep);
    field("trdeg S(m)^A", &|d| d.rho_a, &mut rep);
    field("trdeg A", &|d| d.trdeg_a, &mut rep);
    field("trdeg F1", &|d| d.trdeg_f1, &mut rep);
    let sums: Vec<usize> = seen.iter().map(|d| d.trdeg_a + d.s).collect();
    let ok = sums.iter().all(|&s| s == want.phase_dim);
    rep.push(Check {
        name: "trdeg A + trdeg R0 = dim T*M".into(),
        expected: want.phase_dim.to_string(),
        observed: if ok { want.phase_dim.to_string() } else { format!("{sums:?}") },
        tolerance: None,
        pass: ok,
    });
    rep.push(Check::info("leaf dimension dim g - 3 rank g", want.n as i64 - 3 * want.r as i64));
    Ok(rep)
}
