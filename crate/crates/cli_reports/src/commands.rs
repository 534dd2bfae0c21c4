//! File-producing commands: verify, centralizer, flow and brackets.

use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use chain_verifier::table::BracketTable;
use chain_verifier::{algebra_generators, bracket_table_regular, moment_closure_check, slice_generators, RegularChain};
use invariant_solver::{indecomposable_generators, GeneratorSet};
use lie_core::{build_su2, build_su3_chevalley, build_su3_gellmann, centralizer_of, Scalar, SubalgebraSpec};
use magnetic_phase::{
    closed_form_x, conservation_report, integrate_flow, random_regular_point, write_trajectory_csv, CaseTag,
    ConservationEntry, FlowMethod, MagneticSystem,
};
use poly_engine::{algebra_vars, lie_poisson_bracket, Polynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::{AlgebraName, RunConfig, SubName};
use crate::error::{CliError, Result};
use crate::verify::{run_verify, VerifyReport, DRIFT_TOL};

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.into(), source }
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    fs::write(path, text).map_err(io_err(path))
}

pub fn system(cfg: &RunConfig) -> Result<MagneticSystem> {
    Ok(match cfg.case {
        CaseTag::Regular => MagneticSystem::regular(cfg.eps)?,
        CaseTag::Irregular => MagneticSystem::irregular(cfg.eps)?,
    })
}

/// Runs the suite and writes `verify_<case>.json`, whatever the outcome.
pub fn cmd_verify(cfg: &RunConfig) -> Result<(VerifyReport, PathBuf)> {
    let rep = run_verify(cfg)?;
    let path = cfg.output(&format!("verify_{}.json", cfg.case_name()));
    write_text(&path, &(rep.to_json()? + "\n"))?;
    Ok((rep, path))
}

pub fn subalgebra(algebra: AlgebraName, sub: SubName) -> Result<SubalgebraSpec> {
    Ok(match (algebra, sub) {
        (AlgebraName::Su3, SubName::Torus) => SubalgebraSpec::torus(build_su3_chevalley())?,
        (AlgebraName::Su2, SubName::Torus) => SubalgebraSpec::torus(build_su2())?,
        (AlgebraName::Su3, SubName::IrregularA) => {
            let g = build_su3_gellmann();
            let w = lie_core::su::irregular_w(&g);
            centralizer_of(&g, &w)?
        }
        (AlgebraName::Su2, SubName::IrregularA) => {
            return Err(CliError::Unsupported("irregular-A is a subalgebra of su3 only".into()))
        }
    })
}

fn algebra_label(a: AlgebraName) -> &'static str {
    match a {
        AlgebraName::Su3 => "su3",
        AlgebraName::Su2 => "su2",
    }
}

fn sub_label(s: SubName) -> &'static str {
    match s {
        SubName::Torus => "torus",
        SubName::IrregularA => "irregular-A",
    }
}

pub fn generator_text(set: &GeneratorSet) -> String {
    let mut out = String::new();
    out.push_str(&format!("generators ({}):\n", set.generators.len()));
    for g in &set.generators {
        out.push_str(&format!("  {} [deg {}] = {}\n", g.name, g.degree, g.poly.to_text()));
    }
    out.push_str(&format!("relations ({}):\n", set.relations.len()));
    for r in &set.relations {
        out.push_str(&format!("  {} = 0\n", r.to_text()));
    }
    out
}

/// Generators and relations of the commutant; writes `centralizer_<algebra>_<sub>.json`.
pub fn cmd_centralizer(
    algebra: AlgebraName,
    sub: SubName,
    m_only: bool,
    max_degree: u32,
    out_dir: &Path,
) -> Result<(GeneratorSet, PathBuf)> {
    let spec = subalgebra(algebra, sub)?;
    let set = indecomposable_generators(&spec, max_degree, m_only)?;
    let path = out_dir.join(format!("centralizer_{}_{}.json", algebra_label(algebra), sub_label(sub)));
    write_text(&path, &(serde_json::to_string_pretty(&set)? + "\n"))?;
    Ok((set, path))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConservationFile {
    pub case_tag: CaseTag,
    pub eps: f64,
    pub seed: u64,
    pub t_end: f64,
    pub method: FlowMethod,
    pub tolerance: f64,
    pub entries: Vec<ConservationEntry>,
    /// Largest deviation of the fiber coordinates from `Ad(exp(-t eps W)) X(0)`.
    pub closed_form_max_dev: f64,
    pub passed: bool,
}

/// Integrates from a seeded generic point; writes `flow_<case>.csv` and `conservation_<case>.json`.
pub fn cmd_flow(cfg: &RunConfig) -> Result<(ConservationFile, PathBuf, PathBuf)> {
    cfg.validate()?;
    let sys = system(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pt = random_regular_point(&sys, &mut rng)?;
    let traj = integrate_flow(&sys, &pt, cfg.t_end, cfg.dt)?;
    let fns = algebra_generators(&sys)?;
    let entries = conservation_report(&sys, &traj, &fns, DRIFT_TOL)?;
    let mut dev = 0.0f64;
    for (t, p) in traj.times.iter().zip(&traj.points) {
        let want = closed_form_x(&sys, &pt.x, *t)?;
        dev = dev.max(p.x.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
    }
    let passed = entries.iter().all(|e| e.pass) && dev < DRIFT_TOL;
    let file = ConservationFile {
        case_tag: cfg.case,
        eps: cfg.eps,
        seed: cfg.seed,
        t_end: cfg.t_end,
        method: traj.method.clone(),
        tolerance: DRIFT_TOL,
        entries,
        closed_form_max_dev: dev,
        passed,
    };
    let csv = cfg.output(&format!("flow_{}.csv", cfg.case_name()));
    if let Some(dir) = csv.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    let f = fs::File::create(&csv).map_err(io_err(&csv))?;
    let mut w = BufWriter::new(f);
    write_trajectory_csv(&mut w, &sys, &traj, &fns)?;
    drop(w);
    let json = cfg.output(&format!("conservation_{}.json", cfg.case_name()));
    write_text(&json, &(serde_json::to_string_pretty(&file)? + "\n"))?;
    Ok((file, csv, json))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentEntry {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketsFile {
    pub case_tag: CaseTag,
    pub eps: f64,
    /// Coupling coefficients `c_k / eps`, as exact text and as floats.
    pub couplings: Vec<(String, f64)>,
    /// Slice generators over the `m` coordinates.
    pub slice_generators: Vec<(String, String)>,
    pub asserted: Option<BracketTable>,
    pub computed: Option<BracketTable>,
    pub corrected: Option<BracketTable>,
    pub at_eps_zero: Option<BracketTable>,
    /// Failing asserted entries, as `{a, b}`.
    pub asserted_mismatches: Vec<String>,
    /// `{P_i, P_j}` as linear forms in `P`, `i < j`, nonzero entries only.
    pub moment_table: Vec<MomentEntry>,
    /// Largest sampled `|{P_i, P_j} - table|` on the phase space.
    pub moment_closure_max_dev: f64,
}

fn moment_table(sys: &MagneticSystem) -> Result<Vec<MomentEntry>> {
    let vars = algebra_vars(&sys.alg);
    let p = |i: usize| Polynomial::var(&vars, i);
    let names: Vec<String> = (1..=sys.dim()).map(|i| format!("P{i}")).collect();
    let named = std::sync::Arc::new(names.clone());
    let mut out = Vec::new();
    for i in 0..sys.dim() {
        for j in i + 1..sys.dim() {
            let b = lie_poisson_bracket(&p(i), &p(j), &sys.alg)?;
            if !b.is_zero() {
                let renamed = Polynomial::from_terms(&named, b.terms().iter().map(|(m, c)| (m.clone(), c.clone())));
                out.push(MomentEntry { left: names[i].clone(), right: names[j].clone(), value: renamed.to_text() });
            }
        }
    }
    Ok(out)
}

fn table_text(title: &str, t: &BracketTable) -> String {
    let mut s = format!("{title}\n");
    let names = &t.generator_names;
    for e in &t.entries {
        s.push_str(&format!("  {{{}, {}}} = {}\n", names[e.left], names[e.right], e.value.to_text()));
    }
    s
}

/// Symbolic tables with computed couplings; writes `brackets_<case>.txt` and `.json`.
pub fn cmd_brackets(cfg: &RunConfig) -> Result<(BracketsFile, PathBuf, PathBuf)> {
    cfg.validate()?;
    let sys = system(cfg)?;
    let slice: Vec<(String, String)> = slice_generators(&sys)?.into_iter().map(|(n, p)| (n, p.to_text())).collect();
    let closure = moment_closure_check(&sys, cfg.samples, cfg.seed)?;
    let closure_dev: f64 = closure.checks[0].observed.parse().unwrap_or(f64::NAN);
    let mut file = BracketsFile {
        case_tag: cfg.case,
        eps: cfg.eps,
        couplings: Vec::new(),
        slice_generators: slice,
        asserted: None,
        computed: None,
        corrected: None,
        at_eps_zero: None,
        asserted_mismatches: Vec::new(),
        moment_table: moment_table(&sys)?,
        moment_closure_max_dev: closure_dev,
    };
    if cfg.case == CaseTag::Regular {
        let rep = bracket_table_regular(&sys)?;
        let chain = RegularChain::new(&sys)?;
        file.couplings = rep.couplings.iter().map(|c| (c.to_text(), c.to_f64())).collect();
        file.asserted_mismatches =
            rep.failing_entries().iter().map(|e| format!("{{{}, {}}}", e.pair.0, e.pair.1)).collect();
        file.at_eps_zero = Some(rep.computed.at_eps(&Scalar::from_int(0))?);
        file.corrected = Some(chain.corrected_table());
        file.asserted = Some(rep.printed);
        file.computed = Some(rep.computed);
    }
    let mut text = format!("case {} eps {}\n", cfg.case_name(), cfg.eps);
    for (n, p) in &file.slice_generators {
        text.push_str(&format!("{n} = {p}\n"));
    }
    if !file.couplings.is_empty() {
        let c: Vec<String> = file.couplings.iter().enumerate().map(|(k, (t, _))| format!("c{} = ({t}) eps", k + 1)).collect();
        text.push_str(&format!("{}\n", c.join(", ")));
    }
    for (title, t) in [
        ("asserted table", &file.asserted),
        ("computed table", &file.computed),
        ("table with c3 -> -(c1 + c2)", &file.corrected),
        ("computed table at eps = 0", &file.at_eps_zero),
    ] {
        if let Some(t) = t {
            text.push_str(&table_text(title, t));
        }
    }
    if cfg.case == CaseTag::Irregular {
        text.push_str("slice table\n  {R, R} = 0\n");
    }
    if !file.asserted_mismatches.is_empty() {
        text.push_str(&format!("asserted entries that differ: {}\n", file.asserted_mismatches.join(", ")));
    }
    text.push_str("moment table\n");
    for e in &file.moment_table {
        text.push_str(&format!("  {{{}, {}}} = {}\n", e.left, e.right, e.value));
    }
    text.push_str(&format!("moment closure max deviation {:e}\n", file.moment_closure_max_dev));
    let txt = cfg.output(&format!("brackets_{}.txt", cfg.case_name()));
    let json = cfg.output(&format!("brackets_{}.json", cfg.case_name()));
    write_text(&txt, &text)?;
    write_text(&json, &(serde_json::to_string_pretty(&file)? + "\n"))?;
    Ok((file, txt, json))
}
