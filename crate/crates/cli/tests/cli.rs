use std::path::PathBuf;
use std::process::{Command, Output};

use affschub::typea::{TensorPoly, TensorPolyDocument};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affschub"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn n3_table_matches_golden_files() {
    for w in ["e", "0", "1", "2", "1,0", "2,1", "2,1,0"] {
        let out = run(&["poly", "affine-schubert", "--n", "3", "--w", w]);
        assert_eq!(out.status.code(), Some(0));
        let name = format!("affine_schubert_n3_{}.txt", w.replace(',', "_"));
        assert_eq!(out.stdout, golden(&name), "{name}");
    }
}

#[test]
fn k_theory_example_matches_golden_files() {
    let out = run(&["poly", "affine-grothendieck", "--n", "3", "--w", "2,1", "--degree", "6"]);
    assert_eq!(out.stdout, golden("affine_grothendieck_n3_2_1_d6.txt"));
    let out = run(&["poly", "stable-grothendieck", "--n", "3", "--w", "2", "--degree", "4", "--basis", "s"]);
    assert_eq!(out.stdout, golden("stable_grothendieck_n3_2_d4_schur.txt"));
    let out = run(&["poly", "stable-grothendieck", "--n", "3", "--w", "2,1", "--degree", "5", "--basis", "s"]);
    assert_eq!(out.stdout, golden("stable_grothendieck_n3_2_1_d5_schur.txt"));
}

#[test]
fn tensor_json_round_trips() {
    let out = run(&["poly", "affine-schubert", "--n", "3", "--w", "2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "affschub/1");
    let doc: TensorPolyDocument = serde_json::from_value(v["tensor"].clone()).unwrap();
    let p = TensorPoly::from_document(&doc).unwrap();
    assert_eq!(p.to_string(), "h2 + h1*x1 + x1^2");
    assert_eq!(serde_json::to_value(p.to_document()).unwrap(), v["tensor"]);
}

#[test]
fn coproduct_verification_succeeds() {
    let out = run(&["verify", "coproduct", "--theory", "H", "--type", "A", "--rank", "2", "--max-length", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert!(!text.is_empty());
}

#[test]
fn verification_reports_are_json() {
    let out = run(&["verify", "divisor", "--theory", "K", "--max-translation", "4", "--format", "json", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    let r = &v["reports"][0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["type"], "A2");
    assert!(r.get("counterexample").is_none());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["verify", "coproduct", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "affine-schubert", "--w", "x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // not Grassmannian
    assert_eq!(run(&["peterson", "--rank", "1", "--w", "1"]).status.code(), Some(2));
    // degree below the length
    assert_eq!(run(&["poly", "affine-stanley", "--w", "2,1", "--degree", "1"]).status.code(), Some(2));
}

#[test]
fn help_prints_usage() {
    let out = run(&["verify", "coproduct", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("Usage"));
}

#[test]
fn budget_override_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_affschub"))
        .args(["ball", "--max-length", "4"])
        .env("AFFSCHUB_BALL_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn peterson_in_affine_a1() {
    let out = run(&["peterson", "--rank", "1", "--w", "0", "--max-length", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(1) A[s0] + (1) A[s1] + (2*w1) A[s0s1]");
}

#[test]
fn positivity_passes_for_n4() {
    let out = run(&["positivity", "--n", "4", "--max-length", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn commands_are_deterministic() {
    let args = ["localize", "--theory", "K", "--w", "1,0", "--max-length", "3", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
