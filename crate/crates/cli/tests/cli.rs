use std::process::{Command, Output};

fn monodromy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monodromy")).args(args).output().expect("binary runs")
}

#[test]
fn conic_text_report() {
    let out = monodromy(&["--expr", "x^2 + y^2 - 1", "--alexander"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("status: complete\n"));
    assert!(text.contains("order 2 (coset enumeration)"));
    assert!(text.contains("Alexander polynomial coefficients"));
}

#[test]
fn structured_output_is_json() {
    let out = monodromy(&["--expr", "y^3 - 3*y + x^3 - x", "--format", "structured", "--quotients", "z3,s3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["abelianization"]["invariants"], serde_json::json!(["3"]));
    assert_eq!(v["quotients"].as_array().unwrap().len(), 2);
    assert!(v["alexander"].is_null());
}

#[test]
fn shear_and_epsilon_flags() {
    let out = monodromy(&["--expr", "x*y - 1", "--shear", "-1", "--epsilon", "1/64"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("epsilon 1/64"));
}

#[test]
fn errors_exit_with_one() {
    assert_eq!(monodromy(&["--expr", "x*y - 1"]).status.code(), Some(1));
    assert_eq!(monodromy(&["--expr", "y^^2"]).status.code(), Some(1));
    assert_eq!(monodromy(&["--curve", "/nonexistent/curve.poly"]).status.code(), Some(1));
    assert_eq!(monodromy(&["--expr", "y^2 - x", "--precision-bits", "8"]).status.code(), Some(1));
}

#[test]
fn exhausted_coset_bound_is_inconclusive() {
    let out = monodromy(&["--expr", "x^2 + y^2 - 1", "--coset-bound", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("status: inconclusive"));
}
