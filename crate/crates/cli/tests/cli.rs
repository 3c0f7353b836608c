//! End-to-end runs of the `besselprod` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_besselprod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn gen_csv_core_series() {
    let o = run(&["gen", "--family", "exp-J", "--nu", "0", "--p", "0", "-N", "4", "--exact", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "index,value\n0,1\n1,0\n2,-1/4\n3,0\n4,1/64\n");
}

#[test]
fn gen_reports_pi_multiples() {
    let o = run(&["gen", "--family", "arccos-J", "--nu", "1", "--p", "1", "-N", "2", "--exact", "--format", "csv"]);
    assert!(stdout(&o).lines().any(|l| l == "2,(-1/16)·π"));
    let o = run(&["gen", "--family", "arccos-J", "--nu", "1", "--p", "1", "-N", "2", "--exact"]);
    let v = json(&o);
    assert_eq!(v["coefficients"][2]["pi_multiple"]["re_num"], "-1");
    assert_eq!(v["coefficients"][2]["pi_multiple"]["re_den"], "16");
}

#[test]
fn gen_json_round_trips_through_the_library() {
    for exact in [true, false] {
        let mut args = vec!["gen", "--family", "power-I", "--nu", "1/3+1/5i", "--p", "3/4-1/2i", "--theta", "-2/3", "-N", "30"];
        if exact {
            args.push("--exact");
        }
        let o = run(&args);
        let text = stdout(&o);
        let seq = besselprod::format::from_json_str(&text).unwrap();
        assert_eq!(besselprod::format::to_json_string(&seq) + "\n", text);
    }
}

#[test]
fn out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let o = run(&["gen", "--family", "cos-I", "--nu", "2/3", "--p", "1/2", "-N", "10", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let seq = besselprod::format::from_json_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(seq.coeffs.len(), 11);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["gen", "--family", "nope-J", "--nu", "0", "--p", "0", "-N", "4"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "exp-J", "--p", "0", "-N", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "exp-J", "--nu", "-3/2", "--p", "0", "-N", "4"]).status.code(), Some(3));
    assert_eq!(run(&["gen", "--family", "power-J", "--nu", "1", "--p", "2", "-N", "4"]).status.code(), Some(3));
    assert_eq!(run(&["gen", "--family", "exp-J", "--nu", "x", "--p", "0", "-N", "4"]).status.code(), Some(3));
    assert_eq!(run(&["gen", "--family", "exp-J", "--nu", "0", "--p", "0", "-N", "4", "--precision", "16"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_single_family_passes() {
    let o = run(&["verify", "--family", "power-J", "--exact", "--max-n", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["status"] == "sign_flip(1)"));
}

#[test]
fn verify_fails_for_unreconciled_families() {
    let o = run(&["verify", "--family", "arcsin-I", "--exact", "--max-n", "20"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["status"] == "unresolved" && r["source"] == "oracle_fallback"));
}

#[test]
fn reconcile_reports_correction() {
    let o = run(&["reconcile", "--family", "sin-J"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["status"], "index_offset(1/2)");
    assert_eq!(v["correction"]["kind"], "index_offset");
}

#[test]
fn eval_reports_residual() {
    let o = run(&["eval", "--family", "power-J", "--nu", "1/3", "--p", "2", "--theta", "1/2", "--z", "1/4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["rel_err"].as_f64().unwrap() <= 1e-20);
    let re = v["value"]["re"].as_str().unwrap();
    assert!(re.starts_with("4.23684315301990630644677798077303") && re.ends_with("e-1"), "{re}");
    // Default safety factor: |z| must stay below half the radius 1/|θ| = 2.
    let o = run(&["eval", "--family", "power-J", "--nu", "1/3", "--p", "2", "--theta", "1/2", "--z", "1.5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["eval", "--family", "power-J", "--nu", "1/3", "--p", "2", "--theta", "1/2", "--z", "1.5", "--no-safety"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["eval", "--family", "exp-J", "--nu", "1/3", "--p", "1", "--z", "-1/2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bench_small_sizes() {
    let o = run(&["bench", "--family", "exp-I", "--sizes", "256,320,384,448"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["sizes"].as_array().unwrap().len(), 4);
    assert_eq!(v["fitted_exponents"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["bench", "--family", "exp-I", "--sizes", "256,512"]).status.code(), Some(3));
}
