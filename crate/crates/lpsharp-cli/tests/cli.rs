//! End-to-end tests of the binary: flag handling, CSV/JSON shape, exit-status
//! contract, determinism, and the scenario file format.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpsharp"))
        .args(args)
        .env_remove("LP_SHARP_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn csv_rows(output: &Output) -> Vec<Vec<String>> {
    stdout(output)
        .lines()
        .skip(1)
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

fn tmp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("lpsharp-cli-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn exponents_reference_row() {
    let out = run(&["exponents", "--N", "3", "--p", "4"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    let values: Vec<f64> = rows[0].iter().map(|v| v.parse().unwrap()).collect();
    assert_eq!(values[0], 3.0);
    assert_eq!(values[1], 4.0);
    assert_eq!(values[2], 0.375);
    assert!((values[3] - 3.0 / 7.0).abs() < 1e-12);
    assert!((values[4] - 1.0 / 3.0).abs() < 1e-12);
    assert!((values[5] - 0.386852807).abs() < 1e-8);
}

#[test]
fn exponents_out_of_domain_cells_are_empty() {
    let out = run(&["exponents", "--N", "2", "--p", "4"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows[0][5], "", "nec_bound is undefined at N=2");
    assert_eq!(rows[0][2], "4.0000000000000002e-1");
}

#[test]
fn verify_p2_identity_run_passes() {
    let out = run(&["verify", "--ineq", "p2", "--iters", "1000", "--seed", "7"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1000);
    assert!(rows.iter().all(|r| r[7] == "true"));
}

#[test]
fn verify_header_names_columns() {
    let out = run(&["verify", "--ineq", "main", "--iters", "2"]);
    let text = stdout(&out);
    assert!(text.starts_with("label,N,p,r,lhs,rhs,slack,holds\n"));
}

#[test]
fn scan_at_sharp_exponent_holds() {
    let out = run(&[
        "scan", "--N", "3", "--p", "4", "--r", "0.375", "--steps", "1000",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1001);
    for row in &rows {
        let k: f64 = row[1].parse().unwrap();
        assert!(k >= 1.0 - 1e-12, "K dipped below 1: {k}");
    }
}

#[test]
fn scan_above_threshold_fails_with_exit_one() {
    let out = run(&[
        "scan", "--N", "3", "--p", "4", "--r", "0.5", "--steps", "200",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let rows = csv_rows(&out);
    assert!(rows.iter().any(|r| r[1].parse::<f64>().unwrap() < 1.0));
}

#[test]
fn env_tolerance_override_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_lpsharp"))
        .args([
            "scan", "--N", "3", "--p", "4", "--r", "0.5", "--steps", "200",
        ])
        .env("LP_SHARP_TOL", "1.0")
        .output()
        .unwrap();
    assert!(out.status.success(), "huge tolerance should rescue the run");

    let bad = Command::new(env!("CARGO_BIN_EXE_lpsharp"))
        .args(["scan", "--N", "3", "--p", "4"])
        .env("LP_SHARP_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn search_r_fuzz_is_deterministic_and_json() {
    let args = [
        "search-r", "--mode", "fuzz", "--N", "3", "--p", "4", "--seed", "11", "--iters", "300",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(
        first.stdout, second.stdout,
        "same seed must give identical bytes"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(json["target"], "main");
    assert_eq!(json["seed"], 11);
    assert_eq!(json["iterations"], 300);
    assert!(json["certificate"]["weights"].is_array());
}

#[test]
fn search_r_scalar_recovers_exponent() {
    let out = run(&["search-r", "--mode", "scalar", "--N", "2", "--p", "4"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let r_star = json["r_star"].as_f64().unwrap();
    assert!((r_star - 0.4).abs() <= 1e-3);
    assert!(json["certificate"]["x"].as_f64().is_some());
}

#[test]
fn search_r_fuzz_flags_violations() {
    // far above the sharp exponent the fuzzer must find a counterexample
    let out = run(&[
        "search-r", "--mode", "fuzz", "--N", "3", "--p", "4", "--r", "1.9", "--iters", "2000",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_runs_are_deterministic() {
    let args = ["verify", "--ineq", "main", "--iters", "50", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_scalar_grid_modes() {
    for ineq in ["pre", "nf5", "nf5B", "final"] {
        let out = run(&[
            "verify", "--ineq", ineq, "--N", "3", "--p", "4", "--iters", "50",
        ]);
        assert!(out.status.success(), "{ineq} grid should hold");
        assert!(csv_rows(&out).len() > 40);
    }
    // an inadmissible exponent must be caught on the grid
    let out = run(&[
        "verify", "--ineq", "nf5B", "--N", "3", "--p", "4", "--r", "0.5", "--iters", "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_pair_modes_hold() {
    for ineq in ["clarkson", "tri5", "pair"] {
        let out = run(&["verify", "--ineq", ineq, "--iters", "100", "--seed", "5"]);
        assert!(out.status.success(), "{ineq} should hold on random pairs");
    }
}

#[test]
fn scenario_file_drives_verify() {
    let path = tmp_path("scenario");
    std::fs::write(&path, "2 2 4\n1 1\n1 0\n0 1\n").unwrap();
    let out = run(&[
        "verify",
        "--ineq",
        "main",
        "--scenario",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "main");
    assert_eq!(rows[0][1], "2");
    assert_eq!(rows[0][2], "4");
    // disjoint supports: both sides equal 2, the default r is r_main(2,4)
    assert_eq!(rows[0][3], "0.4");
    assert!((rows[0][4].parse::<f64>().unwrap() - 2.0).abs() < 1e-14);
    assert!((rows[0][5].parse::<f64>().unwrap() - 2.0).abs() < 1e-14);
}

#[test]
fn malformed_scenario_is_a_usage_error() {
    let path = tmp_path("bad-scenario");
    std::fs::write(&path, "2 2\n1 1\n1 0\n0 1\n").unwrap();
    let out = run(&[
        "verify",
        "--ineq",
        "main",
        "--scenario",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pair_subcommand_emits_full_suite() {
    let out = run(&["pair", "--seed", "1", "--iters", "3"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 15, "five bounds per pair");
    let labels: Vec<&str> = rows.iter().take(5).map(|r| r[0].as_str()).collect();
    assert_eq!(labels, ["carb", "carb+", "carb++", "tri5", "clarkson"]);
}

#[test]
fn demo_limit_converges() {
    let out = run(&["demo-limit", "--seed", "3", "--N-max", "10000"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    let last = rows.last().unwrap();
    assert_eq!(last[0], "10000");
    let finite: f64 = last[1].parse().unwrap();
    let limit: f64 = last[2].parse().unwrap();
    assert!((finite - limit).abs() / limit <= 1e-3);
}

#[test]
fn output_file_written_only_on_success() {
    let path = tmp_path("report");
    std::fs::remove_file(&path).ok();
    let out = run(&[
        "verify",
        "--ineq",
        "main",
        "--iters",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("label,"));
    std::fs::remove_file(&path).ok();

    // a domain error must not leave a partial file behind
    let bad = run(&["scan", "--N", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!path.exists(), "no partial file on error");
}

#[test]
fn bad_flags_exit_with_usage_error() {
    let out = run(&["verify", "--ineq", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}
