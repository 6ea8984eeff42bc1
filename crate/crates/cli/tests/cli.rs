use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlab"))
        .args(args)
        .env("QLAB_THREADS", "2")
        .output()
        .expect("runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout_json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

const REL_DEFS: &str = r#"{
  "objects": [{"name": "X", "value": {"labels": ["a", "b"]}}],
  "morphisms": [
    {"name": "R", "value": {"source": {"labels": ["a", "b"]}, "target": {"labels": ["a", "b"]}, "pairs": [["a", "b"]]}},
    {"name": "T", "value": {"source": {"labels": ["a", "b"]}, "target": {"labels": ["a", "b"]}, "pairs": [["b", "a"]]}}
  ]
}"#;

#[test]
fn check_is_deterministic_per_seed() {
    let a = qlab(&["check", "rel", "quantaloid", "--seed", "7"]);
    let b = qlab(&["check", "rel", "quantaloid", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report = stdout_json(&a);
    assert!(report.to_string().contains("PASS"));
}

#[test]
fn shear_composite_is_the_identity_without_being_a_dagger_iso() {
    let defs = fixture("shear.json");
    let sr = stdout_json(&qlab(&["--instance", "qrel", "compute", "S∘R", "--defs", &defs]));
    let id = stdout_json(&qlab(&["--instance", "qrel", "compute", "id(H)", "--defs", &defs]));
    assert_eq!(sr, id);
    let rr = stdout_json(&qlab(&["--instance", "qrel", "compute", "R†∘R", "--defs", &defs]));
    assert_ne!(rr, id);
}

#[test]
fn powerset_of_a_singleton() {
    let v = stdout_json(&qlab(&["power", "rel", r#"{"labels":["a"]}"#]));
    assert_eq!(v["members"], serde_json::json!([[], ["a"]]));
    assert_eq!(v["ni"]["pairs"], serde_json::json!([[["a"], "a"]]));
    assert_eq!(v["singleton"], serde_json::json!([["a", ["a"]]]));
}

#[test]
fn output_parses_back_as_input() {
    let first = stdout_json(&qlab(&["--instance", "rel", "compute", "R ∘ T ∨ R", "--defs", REL_DEFS]));
    let defs = serde_json::json!({"morphisms": [{"name": "M", "value": first}]}).to_string();
    let again = stdout_json(&qlab(&["--instance", "rel", "compute", "M", "--defs", &defs]));
    assert_eq!(first, again);
    assert_eq!(first["pairs"], serde_json::json!([["a", "b"], ["b", "b"]]));
}

#[test]
fn kernel_and_negation_in_rel() {
    let k = stdout_json(&qlab(&["--instance", "rel", "kernel", "R", "--defs", REL_DEFS]));
    assert_eq!(k["kernel"]["labels"], serde_json::json!(["b"]));
    let n = stdout_json(&qlab(&["--instance", "rel", "neg", "R", "--defs", REL_DEFS]));
    assert_eq!(n["pairs"], serde_json::json!([["a", "a"], ["b", "a"], ["b", "b"]]));
}

#[test]
fn embeddings_keep_the_pairs() {
    let r = r#"{"source":{"labels":["a"]},"target":{"labels":["b","c"]},"pairs":[["a","c"]]}"#;
    let v = stdout_json(&qlab(&["--instance", "vrel:chain3-min", "embed", r]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);
    let q = stdout_json(&qlab(&["--instance", "qrel", "embed", r]));
    assert_eq!(q["blocks"][0]["to"], serde_json::json!("c"));
}

#[test]
fn errors_exit_with_status_two() {
    assert_eq!(qlab(&["frobnicate"]).status.code(), Some(2));
    let bad = qlab(&["--instance", "rel", "compute", "R ∘ ∘", "--defs", REL_DEFS]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("column 5"));
    let dup = r#"{"objects":[{"name":"X","value":{"labels":[]}},{"name":"X","value":{"labels":[]}}]}"#;
    assert_eq!(qlab(&["--instance", "rel", "compute", "id(X)", "--defs", dup]).status.code(), Some(2));
    let kernel = qlab(&["--instance", "vrel:bool2", "kernel", "R", "--defs", REL_DEFS]);
    assert_eq!(kernel.status.code(), Some(2));
    assert_eq!(qlab(&["check", "rel", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn every_anchor_is_listed() {
    let o = qlab(&["check", "--list"]);
    assert!(o.status.success());
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.lines().count() >= 30);
    assert!(text.contains("kernels"));
}
