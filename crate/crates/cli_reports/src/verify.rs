//! The full certificate suite for one case, assembled into a single report.

use std::collections::BTreeSet;
use std::thread;

use action_angle::{action_bracket, frequency_exact, normalizer, poisson_fd, LiouvilleChart, FD_STEP};
use chain_verifier::irregular::a_matrix_rank;
use chain_verifier::{
    a_matrix_minors, algebra_generators, bracket_table_regular, center_check, cubic_relation_check, dimension_report,
    expected_minors, jacobian_rank_pi1, mixed_block_check, moment_closure_check, phi_relation_irregular,
    restriction_report, CertificateReport, Check, PhiForm,
};
use invariant_solver::casimir_count;
use lie_core::{build_su2, NumericAlgebra};
use magnetic_phase::{
    closed_form_x, conservation_report, integrate_flow, random_group, random_regular_point, CaseTag, MagneticSystem,
    PhasePoint,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{CliError, Result};

pub const RANK_SAMPLE_TOL: f64 = 1e-10;
pub const DRIFT_TOL: f64 = 1e-8;
pub const ANGLE_TOL: f64 = 1e-5;
pub const NORMALIZER_TOL: f64 = 1e-10;
/// Bracket identities are sampled at this many times `samples` points.
pub const BRACKET_SAMPLE_FACTOR: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub report: CertificateReport,
}

impl Section {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub case_tag: CaseTag,
    pub eps: f64,
    pub seed: u64,
    pub samples: usize,
    pub t_end: f64,
    pub dt: f64,
    /// Distinct generic ranks of the full generator list, joined by `|`.
    pub pi1_rank: String,
    pub sections: Vec<Section>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One line per section, then the rank line.
    pub fn summary(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .sections
            .iter()
            .map(|s| {
                let fails = s.report.failures();
                if fails.is_empty() {
                    format!("PASS {} ({} checks)", s.name, s.report.checks.len())
                } else {
                    let names: Vec<&str> = fails.iter().map(|c| c.name.as_str()).collect();
                    format!("FAIL {} ({} of {} checks): {}", s.name, fails.len(), s.report.checks.len(), names.join("; "))
                }
            })
            .collect();
        out.push(format!("pi1_rank={}", self.pi1_rank));
        out
    }
}

fn joined(vals: impl IntoIterator<Item = usize>) -> String {
    let set: BTreeSet<usize> = vals.into_iter().collect();
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("|")
}

fn failed(rep: &mut CertificateReport, name: &str, err: impl std::fmt::Display) {
    rep.push(Check { name: name.into(), expected: "ok".into(), observed: format!("error: {err}"), tolerance: None, pass: false });
}

/// Entry-by-entry comparison of the asserted regular table with the computed brackets.
pub fn bracket_table_section(sys: &MagneticSystem, cfg: &RunConfig) -> Result<CertificateReport> {
    let t = bracket_table_regular(sys)?;
    let mut rep = CertificateReport::new(sys.case_tag, 0, cfg.seed);
    for (k, c) in t.couplings.iter().enumerate() {
        rep.push(Check::info(format!("c{} / eps", k + 1), format!("{} = {:.15}", c.to_text(), c.to_f64())));
    }
    for e in &t.entries {
        rep.push(Check {
            name: format!("{{{}, {}}}", e.pair.0, e.pair.1),
            expected: e.printed.clone(),
            observed: e.computed.clone(),
            tolerance: None,
            pass: e.pass,
        });
    }
    let rem_ok = t.remainders.iter().all(|r| r == "0");
    rep.push(Check::exact("computed brackets lie in the generator algebra", true, rem_ok));
    let bad = |v: &[chain_verifier::table::JacobiCheck]| v.iter().filter(|j| !j.pass).count();
    rep.push(Check::exact("Jacobi identity, asserted table (failing triples)", 0, bad(&t.printed_jacobi)));
    rep.push(Check::exact("Jacobi identity, computed table (failing triples)", 0, bad(&t.computed_jacobi)));
    rep.push(Check::info("computed table equals c3 -> -(c1 + c2) form", t.corrected_matches));
    Ok(rep)
}

pub fn cubic_section(sys: &MagneticSystem, cfg: &RunConfig) -> Result<CertificateReport> {
    let mut rep = CertificateReport::new(sys.case_tag, 0, cfg.seed);
    rep.push(Check::exact("u1 u2 u3 - v^2 - w^2 vanishes identically", true, cubic_relation_check(sys)?));
    Ok(rep)
}

/// Minors and rank of `A(X)`, and the cubic moment relation in both forms.
pub fn irregular_relations_section(sys: &MagneticSystem, cfg: &RunConfig) -> Result<CertificateReport> {
    let mut rep = CertificateReport::new(sys.case_tag, cfg.samples, cfg.seed);
    let got = a_matrix_minors(sys)?;
    let want = expected_minors(sys)?;
    for (k, (g, w)) in got.iter().zip(&want).enumerate() {
        rep.push(Check::exact(format!("minor {} of A(X)", k + 1), w.to_text(), g.to_text()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut ranks = Vec::new();
    for _ in 0..cfg.samples {
        let x: Vec<f64> = (0..sys.m_dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        ranks.push(a_matrix_rank(sys, &x)?);
    }
    rep.push(Check::exact("rank A(X), X != 0", 3, joined(ranks)));
    rep.push(Check::exact("rank A(0)", 0, a_matrix_rank(sys, &vec![0.0; sys.m_dim()])?));
    let n = cfg.samples * BRACKET_SAMPLE_FACTOR;
    let printed = phi_relation_irregular(sys, &PhiForm::Printed, n, cfg.seed)?;
    rep.push(Check::within("C3(P) - 3 eps (2 eps^2 + P4^2 + P5^2 - 2 P6^2 - 2 P7^2)", 0.0, printed, RANK_SAMPLE_TOL));
    let shifted = phi_relation_irregular(sys, &PhiForm::corrected(), n, cfg.seed)?;
    rep.push(Check::within("C3(P) - 3 eps (C2(P) - eps^2)", 0.0, shifted, RANK_SAMPLE_TOL));
    Ok(rep)
}

fn zero_section_point(sys: &MagneticSystem, rng: &mut ChaCha8Rng) -> Result<PhasePoint> {
    let g = random_group(sys, rng);
    Ok(PhasePoint::new(sys, g, vec![0.0; sys.m_dim()])?)
}

/// Rank of the full generator list at generic points and on the zero section.
pub fn rank_section(sys: &MagneticSystem, cfg: &RunConfig) -> Result<(CertificateReport, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (generic, zero) = match sys.case_tag {
        CaseTag::Regular => (10, 6),
        CaseTag::Irregular => (7, 4),
    };
    let mut ranks = Vec::new();
    let mut degenerate = 0;
    for _ in 0..cfg.samples {
        let pt = random_regular_point(sys, &mut rng)?;
        let r = jacobian_rank_pi1(sys, &pt)?;
        degenerate += r.degenerate as usize;
        ranks.push(r.rank);
    }
    let mut zeros = Vec::new();
    for _ in 0..cfg.samples {
        zeros.push(jacobian_rank_pi1(sys, &zero_section_point(sys, &mut rng)?)?.rank);
    }
    let line = joined(ranks.iter().copied());
    let mut rep = CertificateReport::new(sys.case_tag, cfg.samples, cfg.seed);
    rep.push(Check::info("generators in the Jacobian", algebra_generators(sys)?.len()));
    rep.push(Check::exact("rank at generic points", generic, &line));
    rep.push(Check::exact("points off the generic locus", 0, degenerate));
    rep.push(Check::exact("rank on the zero section", zero, joined(zeros)));
    Ok((rep, line))
}

/// `dim g - rank(A_ij)` at random points of su(3) and su(2).
pub fn casimir_count_section(sys: &MagneticSystem, cfg: &RunConfig) -> Result<CertificateReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let su2 = NumericAlgebra::new(&build_su2());
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for _ in 0..cfg.samples {
        let y: Vec<f64> = (0..sys.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        a.push(casimir_count(&sys.num, &y));
        let z: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
        b.push(casimir_count(&su2, &z));
    }
    let mut rep = CertificateReport::new(sys.case_tag, cfg.samples, cfg.seed);
    rep.push(Check::exact("casimir count su(3)", 2, joined(a)));
    rep.push(Check::exact("casimir count su(2)", 1, joined(b)));
    Ok(rep)
}

/// Drift of every generator along one magnetic geodesic, and the fiber against its closed form.
pub fn conservation_section(sys: &MagneticSystem, cfg: &RunConfig) -> Result<CertificateReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pt = random_regular_point(sys, &mut rng)?;
    let traj = integrate_flow(sys, &pt, cfg.t_end, cfg.dt)?;
    let fns = algebra_generators(sys)?;
    let mut rep = CertificateReport::new(sys.case_tag, 1, cfg.seed);
    for e in conservation_report(sys, &traj, &fns, DRIFT_TOL)? {
        rep.push(Check::within(format!("drift {}", e.function), 0.0, e.max_drift, DRIFT_TOL));
    }
    let mut worst = 0.0f64;
    for (t, p) in traj.times.iter().zip(&traj.points) {
        let want = closed_form_x(sys, &pt.x, *t)?;
        worst = worst.max(p.x.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
    }
    rep.push(Check::within("max |X(t) - Ad(exp(-t eps W)) X(0)|", 0.0, worst, DRIFT_TOL));
    Ok(rep)
}

struct AngleWorst {
    pairing: f64,
    commuting: f64,
    normalizer: f64,
}

fn angle_sample(sys: &MagneticSystem, pt: &PhasePoint, w: &mut AngleWorst) -> action_angle::Result<()> {
    let ch = LiouvilleChart::new(sys, pt)?;
    let p0 = ch.params(sys, pt, None)?;
    let grads = ch.casimirs.action_gradients(sys, pt);
    let angle = |i: usize| {
        let (ch, p0) = (&ch, &p0);
        move |q: &PhasePoint| Ok(ch.rescaled_angles(sys, q, Some(p0))?[i])
    };
    let n_angles = grads.len();
    for i in 0..n_angles {
        for (j, g) in grads.iter().enumerate() {
            let b = action_bracket(sys, angle(i), g, pt, FD_STEP)?;
            w.pairing = w.pairing.max((b - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    if n_angles == 2 {
        w.commuting = w.commuting.max(poisson_fd(sys, &angle(0), &angle(1), pt, FD_STEP)?.abs());
    } else {
        let om = frequency_exact(sys, &ch.casimirs, pt)?;
        let u = normalizer(&om)?;
        w.normalizer = w.normalizer.max((u[0] * om[(0, 0)] + u[1] * om[(1, 0)] - 1.0).abs());
    }
    Ok(())
}

/// Brackets of the rescaled angles with the actions and with each other.
pub fn angle_section(sys: &MagneticSystem, cfg: &RunConfig) -> Result<CertificateReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut w = AngleWorst { pairing: 0.0, commuting: 0.0, normalizer: 0.0 };
    let mut rep = CertificateReport::new(sys.case_tag, cfg.samples, cfg.seed);
    let mut errors = Vec::new();
    for _ in 0..cfg.samples {
        let pt = random_regular_point(sys, &mut rng)?;
        if let Err(e) = angle_sample(sys, &pt, &mut w) {
            errors.push(e.to_string());
        }
    }
    rep.push(Check::within("max |{phi~_i, J_j} - delta_ij|", 0.0, w.pairing, ANGLE_TOL));
    match sys.case_tag {
        CaseTag::Regular => rep.push(Check::within("max |{phi~_1, phi~_2}|", 0.0, w.commuting, ANGLE_TOL)),
        CaseTag::Irregular => rep.push(Check::within("max |u . Omega - 1|", 0.0, w.normalizer, NORMALIZER_TOL)),
    }
    if let Some(e) = errors.first() {
        failed(&mut rep, &format!("angle charts at {} of {} points", errors.len(), cfg.samples), e);
    }
    Ok(rep)
}

/// A section report plus, for the rank section, the `pi1_rank` line.
type Outcome = Result<(CertificateReport, Option<String>)>;
type Job<'a> = Box<dyn FnOnce() -> Outcome + Send + 'a>;

fn plain<'a>(f: impl FnOnce() -> Result<CertificateReport> + Send + 'a) -> Job<'a> {
    Box::new(move || Ok((f()?, None)))
}

/// Runs every section for `cfg.case`; sections run on separate threads and are collected in order.
pub fn run_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let sys = match cfg.case {
        CaseTag::Regular => MagneticSystem::regular(cfg.eps)?,
        CaseTag::Irregular => MagneticSystem::irregular(cfg.eps)?,
    };
    let s = &sys;
    let dense = cfg.samples * BRACKET_SAMPLE_FACTOR;
    let mut jobs: Vec<(&str, Job)> = Vec::new();
    match cfg.case {
        CaseTag::Regular => {
            jobs.push(("bracket table", plain(move || bracket_table_section(s, cfg))));
            jobs.push(("cubic relation", plain(move || cubic_section(s, cfg))));
        }
        CaseTag::Irregular => jobs.push(("A(X) and moment relation", plain(move || irregular_relations_section(s, cfg)))),
    }
    jobs.push(("casimir restrictions", plain(move || Ok(restriction_report(s)?))));
    jobs.push(("center", plain(move || Ok(center_check(s, cfg.samples, cfg.seed)?))));
    jobs.push(("ranks", Box::new(move || rank_section(s, cfg).map(|(r, l)| (r, Some(l))))));
    jobs.push(("dimensions", plain(move || Ok(dimension_report(s, cfg.samples, cfg.seed)?))));
    jobs.push(("casimir count", plain(move || casimir_count_section(s, cfg))));
    jobs.push(("mixed block", plain(move || Ok(mixed_block_check(s, dense, cfg.seed)?))));
    jobs.push(("moment closure", plain(move || Ok(moment_closure_check(s, dense, cfg.seed)?))));
    jobs.push(("conservation", plain(move || conservation_section(s, cfg))));
    jobs.push(("angles", plain(move || angle_section(s, cfg))));

    let results: Vec<(String, Outcome)> = thread::scope(|scope| {
        let handles: Vec<_> = jobs.into_iter().map(|(name, job)| (name, scope.spawn(job))).collect();
        handles
            .into_iter()
            .map(|(name, h)| (name.to_string(), h.join().unwrap_or_else(|_| Err(CliError::Unsupported(format!("{name} panicked"))))))
            .collect()
    });

    let mut sections = Vec::new();
    let mut pi1_rank = String::new();
    for (name, res) in results {
        let report = match res {
            Ok((rep, line)) => {
                if let Some(l) = line {
                    pi1_rank = l;
                }
                rep
            }
            Err(e) => {
                let mut rep = CertificateReport::new(cfg.case, cfg.samples, cfg.seed);
                failed(&mut rep, &name, e);
                rep
            }
        };
        sections.push(Section { name, report });
    }
    let passed = sections.iter().all(Section::passed);
    Ok(VerifyReport {
        case_tag: cfg.case,
        eps: cfg.eps,
        seed: cfg.seed,
        samples: cfg.samples,
        t_end: cfg.t_end,
        dt: cfg.dt,
        pi1_rank,
        sections,
        passed,
    })
}
