//! End-to-end tests of the command-line binary.

use std::process::{Command, Output};

fn hypercross(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercross"))
        .args(args)
        .env_remove("HYPERCROSS_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn dims_lists_admissible_dimensions() {
    let out = hypercross(&["dims", "--max", "100"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 3 7\n");
}

#[test]
fn cross_of_zero_is_zero() {
    let out = hypercross(&["cross", "-n", "3", "0,0,0", "1,2,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0,0,0\n");
}

#[test]
fn cross_basis_product() {
    let out = hypercross(&["cross", "-n", "3", "1,0,0", "0,1,0"]);
    assert_eq!(stdout(&out), "0,0,1\n");
    let out = hypercross(&["cross", "-n", "7", "1,0,0,0,0,0,0", "0,1,0,0,0,0,0"]);
    assert_eq!(stdout(&out), "0,0,0,0,0,0,1\n");
}

#[test]
fn mul_quaternion_units() {
    let out = hypercross(&["mul", "-k", "2", "0,1,0,0", "0,0,1,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0,0,0,1\n");
}

#[test]
fn table_contains_convention_header() {
    let out = hypercross(&["table", "-k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# e_i * e_j"));
    assert!(text.contains("cross(omega, r) = V_n(r) * omega"));
    // row e1: e1*e1 = -e0, e1*e2 = +e3
    let row1 = text.lines().nth(2).unwrap();
    assert!(row1.starts_with("+1  -0  +3  -2"));
}

#[test]
fn transform_examples() {
    let out = hypercross(&["transform", "--kind", "ks", "1,0,0,0"]);
    assert_eq!(stdout(&out), "0,0,1\n");
    let out = hypercross(&["transform", "--kind", "lc", "1,1"]);
    assert_eq!(stdout(&out), "0,2\n");
    let out = hypercross(&["transform", "--kind", "r8r5", "1,0,0,0,0,0,0,0"]);
    assert_eq!(stdout(&out), "0,0,0,0,1\n");
}

#[test]
fn rotate_quarter_turn() {
    let out = hypercross(&[
        "rotate",
        "-n",
        "3",
        "--axis",
        "0,0,1",
        "--theta",
        "1.5707963267948966",
        "1,0,0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let coords: Vec<f64> = text.trim().split(',').map(|c| c.parse().unwrap()).collect();
    assert!(coords[0].abs() < 1e-12);
    assert!((coords[1] + 1.0).abs() < 1e-12);
    assert!(coords[2].abs() < 1e-12);
}

#[test]
fn inertia_matrix_rows() {
    let out = hypercross(&["inertia", "0,0,1"]);
    assert_eq!(stdout(&out), "1,0,0\n0,1,0\n0,0,0\n");
}

#[test]
fn hurwitz_matrix_size_two() {
    let out = hypercross(&["hurwitz", "-m", "2", "2,3"]);
    assert_eq!(stdout(&out), "2,3\n-3,2\n");
}

#[test]
fn json_outputs_are_single_objects() {
    for args in [
        vec!["--json", "cross", "-n", "3", "1,0,0", "0,1,0"],
        vec!["--json", "dims", "--max", "10"],
        vec!["--json", "crossmat", "-n", "3", "1,0,0"],
        vec!["--json", "transform", "--kind", "ks", "1,0,0,0"],
        vec![
            "--json",
            "verify",
            "--suite",
            "eq15",
            "--samples",
            "10",
            "--seed",
            "1",
        ],
        vec!["--json", "table", "-k", "1"],
        vec!["--json", "mul", "-k", "0", "3", "4"],
    ] {
        let out = hypercross(&args);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        let text = stdout(&out);
        let value: serde_json::Value =
            serde_json::from_str(text.trim()).expect("valid JSON on stdout");
        assert!(value.get("command").is_some(), "{args:?}");
    }
}

#[test]
fn json_transform_reports_structural_zeros() {
    let out = hypercross(&["--json", "transform", "--kind", "r8r5", "1,0,0,0,0,0,0,0"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["structural_zeros"], 3);
    assert_eq!(v["result"].as_array().unwrap().len(), 5);
}

#[test]
fn precision_flag_controls_significant_digits() {
    let out = hypercross(&["--precision", "4", "transform", "--kind", "lc", "1.1,2.2"]);
    assert_eq!(stdout(&out), "-3.63,4.84\n");
}

#[test]
fn malformed_vector_reports_position_and_exits_2() {
    let out = hypercross(&["cross", "-n", "3", "1,x,3", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("component 2"), "{err}");
}

#[test]
fn wrong_dimension_exits_2() {
    let out = hypercross(&["cross", "-n", "3", "1,2", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hypercross(&["crossmat", "-n", "5", "1,2,3,4,5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("[3, 7]"));
    let out = hypercross(&[
        "rotate", "-n", "3", "--axis", "0,0,0", "--theta", "1", "1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let out = hypercross(&["dims", "--maximum", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_suite_passes() {
    let out = hypercross(&[
        "verify",
        "--suite",
        "eq15",
        "--samples",
        "1000",
        "--tol",
        "1e-10",
        "--seed",
        "42",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("PASS eq15"), "{text}");
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = hypercross(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_impossible_tolerance_exits_1() {
    let out = hypercross(&[
        "verify",
        "--suite",
        "eq16",
        "--samples",
        "20",
        "--tol",
        "1e-300",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL eq16"));
}

#[test]
fn verify_seed_env_var_is_default() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_hypercross"))
        .args(["verify", "--suite", "eq15", "--samples", "25"])
        .env("HYPERCROSS_SEED", "97")
        .output()
        .unwrap();
    let with_flag = hypercross(&[
        "verify",
        "--suite",
        "eq15",
        "--samples",
        "25",
        "--seed",
        "97",
    ]);
    assert_eq!(with_env.stdout, with_flag.stdout);
}

#[test]
fn bench_reports_timings_and_checksum() {
    let out = hypercross(&["bench", "--level", "2", "--iters", "500"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("recursive:"));
    assert!(text.contains("table:"));
    assert!(text.contains("checksum:"));
}
