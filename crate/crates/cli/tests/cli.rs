use std::process::{Command, Output};

use serde_json::Value;

fn lagwron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagwron"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn phi_prints_the_degree_six_polynomial() {
    let out = lagwron(&["phi", "--lambda", "3,1", "--mu", "2", "--beta", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["polynomial"], "y^6 - 8*y^5 + 20*y^4 - 32*y^3 + 24*y^2");
    assert_eq!(v["coefficients"][2], "24");
}

#[test]
fn symbolic_phi_keeps_beta() {
    let out = lagwron(&["phi", "--lambda", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("power,coefficient\n"));
    assert!(text.contains('β'), "{text}");
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["phi", "--lambda", "3,x"][..],
        &["phi", "--lambda", "1,2"],
        &["spectrum", "--lambda", "1", "--beta", "1/0"],
        &["verify", "no-such-suite"],
        &[
            "blz-residual",
            "--lambda",
            "1",
            "--beta",
            "0.3",
            "--tol",
            "-1",
        ],
        &["qkdv", "--degree", "3", "--check", "nothing"],
    ] {
        assert_eq!(lagwron(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_all_small_passes() {
    let out = lagwron(&["verify", "all", "--max-size", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(
        v["suites"].as_array().unwrap().len(),
        lagwron::verify::SUITES.len()
    );
}

#[test]
fn failed_verification_exits_one_with_report() {
    let out = lagwron(&["verify", "numeric-blz", "--max-size", "3", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert!(!v["failures"][0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn conjecture_misses_only_warn() {
    let out = lagwron(&[
        "verify",
        "numeric-root-sum-sq",
        "--max-size",
        "3",
        "--tol",
        "1e-30",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["conjecture"][0]["name"], "numeric-root-sum-sq");
    assert!(String::from_utf8_lossy(&out.stderr).contains("conjecture"));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["verify", "spectra-qq", "--max-size", "3"][..],
        &["roots", "--lambda", "3,1", "--beta", "-7/10"],
        &[
            "qq-check", "--lambda", "2,1", "--beta", "0.3", "--jobs", "2",
        ],
    ] {
        assert_eq!(lagwron(args).stdout, lagwron(args).stdout, "{args:?}");
    }
    let seq = lagwron(&["blz-count", "8", "--beta", "1/2", "--jobs", "1"]);
    let par = lagwron(&["blz-count", "8", "--beta", "1/2"]);
    assert_eq!(seq.stdout, par.stdout);
    assert_eq!(json(&seq)["count"], 22);
}

#[test]
fn floats_have_seventeen_digits() {
    let v = lagwron(&["blz-residual", "--lambda", "2,1", "--beta", "0.3"]);
    let text = String::from_utf8(v.stdout).unwrap();
    assert!(text.contains("\"tol\":9.9999999999999995e-8"), "{text}");
}

#[test]
fn reduce_reaches_the_worked_example() {
    let v = json(&lagwron(&[
        "reduce", "--beta", "1", "--lambda", "3,1", "--mu", "2",
    ]));
    assert_eq!(v["exponent"], 2);
    assert_eq!(v["reduced"]["beta"], "3");
    assert_eq!(v["reduced"]["lambda"], "2,1,1");
    assert_eq!(v["reduced"]["mu"], "");
}

#[test]
fn checks_report_and_exit_zero() {
    for args in [
        &["bset", "5"][..],
        &["verma-report", "4", "--beta", "-3"],
        &[
            "qkdv", "--degree", "4", "--check", "virasoro", "--beta", "3/7",
        ],
        &["qkdv", "--degree", "4", "--check", "diag"],
        &["newton-check", "--lambda", "2,1", "--beta", "5/3"],
        &["spectrum", "--lambda", "1", "--beta", "2"],
        &["sseval", "--lambda", "3,1", "--format", "text"],
    ] {
        let out = lagwron(args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let v = json(&lagwron(&["qkdv", "--degree", "4", "--check", "identity"]));
    assert_eq!(v["passed"], true);
    assert!(v["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n.as_str().unwrap().contains("I3")));
}
