use std::sync::OnceLock;

use cli_reports::{cmd_verify, run_verify, RunConfig, VerifyReport};
use magnetic_phase::CaseTag;

fn report(case: CaseTag) -> &'static VerifyReport {
    static REG: OnceLock<VerifyReport> = OnceLock::new();
    static IRR: OnceLock<VerifyReport> = OnceLock::new();
    let cell = if case == CaseTag::Regular { &REG } else { &IRR };
    cell.get_or_init(|| run_verify(&RunConfig { case, eps: 0.1, t_end: 2.0, ..RunConfig::default() }).unwrap())
}

fn failing(rep: &VerifyReport) -> Vec<(String, String)> {
    rep.sections
        .iter()
        .flat_map(|s| s.report.failures().into_iter().map(move |c| (s.name.clone(), c.name.clone())))
        .collect()
}

#[test]
fn regular_suite() {
    let rep = report(CaseTag::Regular);
    assert_eq!(rep.pi1_rank, "10");
    assert!(rep.summary().contains(&"pi1_rank=10".to_string()));
    let names: Vec<&str> = rep.sections.iter().map(|s| s.name.as_str()).collect();
    for want in ["bracket table", "cubic relation", "center", "ranks", "dimensions", "conservation", "angles"] {
        assert!(names.contains(&want), "{want}");
    }
    // only the asserted table fails
    let bad = failing(rep);
    let expect = [
        ("bracket table", "{u3, v}"),
        ("bracket table", "{u3, w}"),
        ("bracket table", "Jacobi identity, asserted table (failing triples)"),
    ];
    assert_eq!(bad, expect.map(|(a, b)| (a.to_string(), b.to_string())).to_vec());
    assert!(!rep.passed);
    let conservation = rep.section("conservation").unwrap();
    assert_eq!(conservation.report.checks.len(), 14);
}

#[test]
fn irregular_suite() {
    let rep = report(CaseTag::Irregular);
    assert_eq!(rep.pi1_rank, "7");
    let bad = failing(rep);
    let expect = [
        ("A(X) and moment relation", "C3(P) - 3 eps (2 eps^2 + P4^2 + P5^2 - 2 P6^2 - 2 P7^2)"),
        ("casimir restrictions", "Res_W C3 (listed form)"),
    ];
    assert_eq!(bad, expect.map(|(a, b)| (a.to_string(), b.to_string())).to_vec());
    let sec = rep.section("A(X) and moment relation").unwrap();
    assert!(sec.report.checks.iter().any(|c| c.name == "C3(P) - 3 eps (C2(P) - eps^2)" && c.pass));
    assert_eq!(rep.section("conservation").unwrap().report.checks.len(), 10);
}

#[test]
fn report_round_trips_and_summary_marks_failures() {
    let rep = report(CaseTag::Irregular);
    let back: VerifyReport = serde_json::from_str(&rep.to_json().unwrap()).unwrap();
    assert_eq!(&back, rep);
    let summary = rep.summary();
    assert_eq!(summary.len(), rep.sections.len() + 1);
    assert!(summary.iter().any(|l| l.starts_with("FAIL casimir restrictions")));
    assert!(summary.iter().any(|l| l.starts_with("PASS center")));
}

#[test]
fn report_file_is_written_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bytes = Vec::new();
    for k in 0..2 {
        let cfg = RunConfig {
            case: CaseTag::Irregular,
            eps: 0.4,
            samples: 3,
            t_end: 0.5,
            out_dir: dir.path().join(k.to_string()),
            ..RunConfig::default()
        };
        let (rep, path) = cmd_verify(&cfg).unwrap();
        assert!(!rep.passed);
        assert!(path.ends_with("verify_irregular.json"));
        bytes.push(std::fs::read(path).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
    let other = RunConfig { case: CaseTag::Irregular, eps: 0.4, samples: 3, t_end: 0.5, seed: 8, ..RunConfig::default() };
    let rep = run_verify(&other).unwrap();
    assert_ne!(rep.to_json().unwrap().into_bytes(), bytes[0]);
}
