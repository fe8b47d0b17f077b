use std::path::PathBuf;

use sha2::{Digest, Sha256};

use monodromy::fixtures::{curve_c, curve_cprime, CPRIME_TEXT, C_TEXT};
use monodromy::pipeline::{
    check_generic, emit_report, exit_code, format_curve, parse_curve, parse_rational, run_pipeline, CurveSource,
    PipelineConfig, Report, ReportFormat, RunStatus,
};
use monodromy::scalar::q;
use monodromy::Error;

fn config(text: &str) -> PipelineConfig {
    PipelineConfig::new(CurveSource::Text(text.into()))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn fixture_checksums() {
    let sum = |t: &str| hex::encode(Sha256::digest(t.as_bytes()));
    assert_eq!(sum(C_TEXT), "8aea430ff4b237baca5a9210ee9a7195eae5dc26a8cf21df4fbc05c419f4c6f1");
    assert_eq!(sum(CPRIME_TEXT), "77a4b3fe8b9f1ce94fbfc8d37888249b142b480dd22f1e608139ef2e187f696f");
}

#[test]
fn fixture_c_shape() {
    let f = curve_c();
    assert_eq!((f.total_degree(), f.deg_y(), f.nterms()), (6, 6, 22));
    assert_eq!(f.coeff(0, 6), q(369, 364));
    assert!(format_curve(&f).starts_with("369/364*y^6"));
    let g = curve_cprime();
    assert_eq!((g.total_degree(), g.deg_y()), (6, 6));
}

#[test]
fn parse_examples() {
    let p = parse_curve("y^2 - x").unwrap();
    assert_eq!((p.total_degree(), p.deg_y()), (2, 2));
    assert!(matches!(parse_curve("y^^2"), Err(Error::Parse { .. })));
}

#[test]
fn format_parse_round_trip() {
    for f in [curve_c(), curve_cprime(), parse_curve("-1/3*x*y + (x - 2)^3 + 0.25").unwrap()] {
        assert_eq!(parse_curve(&format_curve(&f)).unwrap(), f);
    }
}

#[test]
fn conic_has_order_two() {
    let r = run_pipeline(&config("x^2 + y^2 - 1")).unwrap();
    assert_eq!(r.status, RunStatus::Complete);
    assert_eq!(r.lassos.len(), 2);
    assert_eq!(r.order.as_ref().unwrap().value, Some(2));
    assert_eq!(r.verdict.as_deref(), Some("Z/2"));
    assert_eq!(exit_code(&Ok(r)), 0);
}

#[test]
fn non_generic_pencil_is_rejected_and_shear_fixes_it() {
    let err = run_pipeline(&config("x*y - 1")).unwrap_err();
    assert!(matches!(err, Error::Degenerate(_)));
    assert_eq!(exit_code(&Err(err)), 1);
    assert!(check_generic(&parse_curve("x*y - 1").unwrap()).is_err());
    let mut cfg = config("x*y - 1");
    cfg.shear = Some(parse_rational("1").unwrap());
    let r = run_pipeline(&cfg).unwrap();
    assert_eq!(r.abelianization.unwrap().invariants, ["2"]);
}

#[test]
fn structured_report_follows_schema() {
    let r = run_pipeline(&config("y^3 - 3*y + x^3 - x")).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, ReportFormat::Structured)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["status"], "complete");
    assert_eq!(v["abelianization"]["invariants"], serde_json::json!(["3"]));
    let roots = v["discriminant"]["roots"].as_array().unwrap();
    assert_eq!(roots.len(), r.discriminant.as_ref().unwrap().roots.len());
    assert!(roots.iter().all(|x| x["radius"].as_f64().is_some_and(|e| e > 0.0 && e < 1e-6)));
    let text = String::from_utf8(emit_report(&r, ReportFormat::Text)).unwrap();
    assert!(text.contains("abelianization Z/3"));
}

#[test]
fn empty_report_is_a_valid_document() {
    let v: serde_json::Value =
        serde_json::from_slice(&emit_report(&Report::empty(), ReportFormat::Structured)).unwrap();
    assert_eq!(v["status"], "empty");
    assert!(v["lassos"].as_array().unwrap().is_empty());
    assert_eq!(String::from_utf8(emit_report(&Report::empty(), ReportFormat::Text)).unwrap(), "status: empty\n");
}

#[test]
fn cached_runs_are_byte_identical() {
    let mut cfg = config("y^3 - 3*y + x^3 - x");
    cfg.format = ReportFormat::Structured;
    let plain = emit_report(&run_pipeline(&cfg).unwrap(), cfg.format);
    cfg.cache_dir = Some(tmp("pipeline-cache"));
    let cold = emit_report(&run_pipeline(&cfg).unwrap(), cfg.format);
    let files = std::fs::read_dir(cfg.cache_dir.as_ref().unwrap()).unwrap().count();
    let warm = emit_report(&run_pipeline(&cfg).unwrap(), cfg.format);
    assert_eq!(files, run_pipeline(&cfg).unwrap().lassos.len());
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);
}

#[test]
fn trajectories_are_dumped_per_lasso() {
    let mut cfg = config("x^2 + y^2 - 1");
    let dir = tmp("pipeline-dump");
    cfg.dump_trajectories = Some(dir.clone());
    let r = run_pipeline(&cfg).unwrap();
    let mut names: Vec<String> =
        std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), r.lassos.len());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join(&names[0])).unwrap()).unwrap();
    assert_eq!(v["lasso"], 1);
    assert!(!v["trajectory"]["samples"].as_array().unwrap().is_empty());
}

#[test]
fn invalid_configuration_is_an_error() {
    let mut cfg = config("x^2 + y^2 - 1");
    cfg.epsilon = Some(q(-1, 2));
    assert!(matches!(run_pipeline(&cfg), Err(Error::InvalidInput(_))));
    let mut cfg = config("x^2 + y^2 - 1");
    cfg.quotients = vec!["q7".into()];
    assert!(run_pipeline(&cfg).is_err());
}
