use cli_reports::commands::{generator_text, subalgebra};
use cli_reports::{cmd_brackets, cmd_centralizer, cmd_flow, AlgebraName, CliError, RunConfig, SubName};
use magnetic_phase::{moment_map, random_regular_point, twisted_bracket, CaseTag, IntegralFunction, MagneticSystem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg(case: CaseTag, dir: &std::path::Path) -> RunConfig {
    RunConfig { case, out_dir: dir.to_path_buf(), ..RunConfig::default() }
}

#[test]
fn centralizer_examples() {
    let dir = tempfile::tempdir().unwrap();
    let (t, path) = cmd_centralizer(AlgebraName::Su3, SubName::Torus, true, 3, dir.path()).unwrap();
    assert_eq!(t.generators.len(), 5);
    assert!(path.ends_with("centralizer_su3_torus.json"));
    let back: invariant_solver::GeneratorSet = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, t);
    let (a, _) = cmd_centralizer(AlgebraName::Su3, SubName::IrregularA, true, 4, dir.path()).unwrap();
    assert_eq!(a.generators.len(), 1);
    assert_eq!(a.generators[0].poly.to_text(), "1/1 * x4^2 + 1/1 * x5^2 + 1/1 * x6^2 + 1/1 * x7^2");
    let (s, _) = cmd_centralizer(AlgebraName::Su2, SubName::Torus, true, 2, dir.path()).unwrap();
    assert_eq!(s.generators.len(), 1);
    assert_eq!(s.generators[0].poly.to_text(), "1/1 * y^2 + 1/1 * z^2");
    assert!(generator_text(&s).contains("y^2"));
    assert!(matches!(subalgebra(AlgebraName::Su2, SubName::IrregularA), Err(CliError::Unsupported(_))));
}

#[test]
fn torus_relation_appears_at_degree_six() {
    let dir = tempfile::tempdir().unwrap();
    let (t, _) = cmd_centralizer(AlgebraName::Su3, SubName::Torus, true, 6, dir.path()).unwrap();
    assert_eq!(t.generators.len(), 5);
    assert_eq!(t.relations.len(), 1);
}

#[test]
fn regular_brackets_file() {
    let dir = tempfile::tempdir().unwrap();
    let (f, txt, json) = cmd_brackets(&cfg(CaseTag::Regular, dir.path())).unwrap();
    assert_eq!(f.asserted_mismatches, vec!["{u3, v}".to_string(), "{u3, w}".to_string()]);
    assert_eq!(f.couplings.len(), 3);
    assert!((f.couplings[2].1 - (f.couplings[0].1 + f.couplings[1].1)).abs() < 1e-15);
    // at eps = 0 every coupling term drops and the asserted table agrees with the computed one
    let zero = f.at_eps_zero.as_ref().unwrap();
    let asserted0 = f.asserted.as_ref().unwrap().at_eps(&lie_core::Scalar::from_int(0)).unwrap();
    assert_eq!(zero, &asserted0);
    assert_eq!(f.corrected.as_ref().unwrap().entries, f.computed.as_ref().unwrap().entries);
    let text = std::fs::read_to_string(txt).unwrap();
    assert!(text.contains("asserted entries that differ: {u3, v}, {u3, w}"));
    let back: cli_reports::BracketsFile = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(back, f);
}

#[test]
fn moment_table_matches_phase_space_brackets() {
    // the symbolic table, evaluated at P(pt), against brackets computed from the magnetic form
    let dir = tempfile::tempdir().unwrap();
    for case in [CaseTag::Regular, CaseTag::Irregular] {
        let (f, _, _) = cmd_brackets(&cfg(case, dir.path())).unwrap();
        assert!(f.moment_closure_max_dev < 1e-10);
        let sys = match case {
            CaseTag::Regular => MagneticSystem::regular(1.0).unwrap(),
            CaseTag::Irregular => MagneticSystem::irregular(1.0).unwrap(),
        };
        let names: Vec<String> = (1..=8).map(|i| format!("P{i}")).collect();
        let vars = std::sync::Arc::new(names.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let pt = random_regular_point(&sys, &mut rng).unwrap();
        let p = moment_map(&sys, &pt);
        let mut seen = 0;
        for i in 0..8 {
            for j in i + 1..8 {
                let got = twisted_bracket(
                    &sys,
                    &IntegralFunction::moment_component(&sys, i),
                    &IntegralFunction::moment_component(&sys, j),
                    &pt,
                );
                let want = match f.moment_table.iter().find(|e| e.left == names[i] && e.right == names[j]) {
                    Some(e) => {
                        seen += 1;
                        poly_engine::Polynomial::parse(&e.value, &vars).unwrap().evaluate_f64(&p).unwrap()
                    }
                    None => 0.0,
                };
                assert!((got - want).abs() < 1e-10, "{case:?} {i} {j}: {got} vs {want}");
            }
        }
        assert_eq!(seen, f.moment_table.len());
    }
}

#[test]
fn irregular_brackets_file_has_no_slice_table() {
    let dir = tempfile::tempdir().unwrap();
    let (f, txt, _) = cmd_brackets(&cfg(CaseTag::Irregular, dir.path())).unwrap();
    assert!(f.asserted.is_none() && f.couplings.is_empty());
    assert_eq!(f.slice_generators.len(), 1);
    assert!(std::fs::read_to_string(txt).unwrap().contains("{R, R} = 0"));
}

#[test]
fn flow_writes_trajectory_and_report() {
    let dir = tempfile::tempdir().unwrap();
    for (case, n) in [(CaseTag::Regular, 13), (CaseTag::Irregular, 9)] {
        let mut c = cfg(case, dir.path());
        c.t_end = 0.5;
        c.dt = 1e-3;
        let (f, csv, json) = cmd_flow(&c).unwrap();
        assert!(f.passed, "{f:?}");
        assert_eq!(f.entries.len(), n);
        let text = std::fs::read_to_string(csv).unwrap();
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(header[0], "t");
        assert_eq!(header.len(), 1 + 18 + if case == CaseTag::Regular { 6 } else { 4 } + n);
        assert_eq!(lines.count(), 501);
        let back: cli_reports::ConservationFile = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}

#[test]
fn commands_reject_zero_eps() {
    let dir = tempfile::tempdir().unwrap();
    let mut c = cfg(CaseTag::Regular, dir.path());
    c.eps = 0.0;
    assert!(matches!(cmd_flow(&c), Err(CliError::Config(_))));
    assert!(matches!(cmd_brackets(&c), Err(CliError::Config(_))));
    assert!(matches!(cli_reports::cmd_verify(&c), Err(CliError::Config(_))));
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_none());
}
