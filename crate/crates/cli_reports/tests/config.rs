use std::path::PathBuf;

use cli_reports::{Case, CliError, CommonArgs, FileConfig, RunConfig, SubName};
use magnetic_phase::CaseTag;

fn file(text: &str) -> FileConfig {
    toml::from_str(text).unwrap()
}

#[test]
fn defaults_when_nothing_is_set() {
    let c = RunConfig::resolve(&CommonArgs::default(), &FileConfig::default(), None).unwrap();
    assert_eq!(c, RunConfig::default());
    assert_eq!(c.out_dir, PathBuf::from("out"));
}

#[test]
fn flags_override_file_override_env() {
    let f = file("case = \"irregular\"\neps = 0.25\nseed = 3\nout_dir = \"from_file\"\n");
    let args = CommonArgs { eps: Some(0.5), ..Default::default() };
    let c = RunConfig::resolve(&args, &f, Some("from_env".into())).unwrap();
    assert_eq!(c.case, CaseTag::Irregular);
    assert_eq!(c.eps, 0.5);
    assert_eq!(c.seed, 3);
    assert_eq!(c.out_dir, PathBuf::from("from_file"));
    let c = RunConfig::resolve(&CommonArgs::default(), &FileConfig::default(), Some("from_env".into())).unwrap();
    assert_eq!(c.out_dir, PathBuf::from("from_env"));
    let args = CommonArgs { out_dir: Some("flag".into()), case: Some(Case::Regular), ..Default::default() };
    let c = RunConfig::resolve(&args, &f, Some("from_env".into())).unwrap();
    assert_eq!(c.out_dir, PathBuf::from("flag"));
    assert_eq!(c.case, CaseTag::Regular);
}

#[test]
fn invalid_values_are_rejected() {
    for (args, what) in [
        (CommonArgs { eps: Some(0.0), ..Default::default() }, "eps"),
        (CommonArgs { eps: Some(f64::NAN), ..Default::default() }, "eps"),
        (CommonArgs { dt: Some(0.0), ..Default::default() }, "dt"),
        (CommonArgs { dt: Some(-1e-3), ..Default::default() }, "dt"),
        (CommonArgs { samples: Some(0), ..Default::default() }, "samples"),
        (CommonArgs { t_end: Some(0.0), ..Default::default() }, "t_end"),
    ] {
        match RunConfig::resolve(&args, &FileConfig::default(), None) {
            Err(CliError::Config(msg)) => assert!(msg.contains(what), "{msg}"),
            other => panic!("{what}: {other:?}"),
        }
    }
    // the file is validated the same way
    assert!(RunConfig::resolve(&CommonArgs::default(), &file("eps = 0.0"), None).is_err());
    assert!(RunConfig::resolve(&CommonArgs::default(), &file("eps = -0.3"), None).is_ok());
}

#[test]
fn file_parsing() {
    let f = file("algebra = \"su2\"\nsub = \"irregular-A\"\nm_only = true\nmax_degree = 3\n");
    assert_eq!(f.sub, Some(SubName::IrregularA));
    assert_eq!(f.m_only, Some(true));
    assert!(toml::from_str::<FileConfig>("unknown_key = 1").is_err());
    assert!(toml::from_str::<FileConfig>("case = \"singular\"").is_err());
}

#[test]
fn config_file_is_read_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("run.toml");
    std::fs::write(&p, "samples = 4\ndt = 0.01\n").unwrap();
    let args = CommonArgs { config: Some(p), ..Default::default() };
    let (c, _) = RunConfig::from_args(&args).unwrap();
    assert_eq!(c.samples, 4);
    assert_eq!(c.dt, 0.01);
    let args = CommonArgs { config: Some(dir.path().join("missing.toml")), ..Default::default() };
    assert!(matches!(RunConfig::from_args(&args), Err(CliError::ConfigFile { .. })));
}
