use std::collections::HashSet;
use std::process::{Command, Output};

use serde_json::Value;

fn pqcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqcolor")).args(args).env_remove("PQCOLOR_BUDGET").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = pqcolor(args);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn color_prints_canonical_encodings() {
    let run = |extra: &[&str]| {
        let mut args = vec!["color", "--params", "1,2,4", "--v", "0010110", "--w", "0011100"];
        args.extend_from_slice(extra);
        stdout(&pqcolor(&args)).trim().to_string()
    };
    assert_eq!(run(&["--variant", "eta", "--d", "0"]), "(4:0,1)");
    assert_eq!(run(&["--variant", "eta", "--d", "1"]), "(2:10,11)");
    assert_eq!(run(&["--variant", "full"]), "{[(2:10,11);(1:10,11)]|[Z;(2:0,1);(2:0,1);Z]}");
}

#[test]
fn equal_vectors_get_the_zero_color() {
    let out = pqcolor(&["color", "--params", "1,2,4", "--v", "0101", "--w", "0101", "--variant", "full"]);
    assert_eq!(stdout(&out).trim(), "{[Z]|[Z;Z]}");
}

#[test]
fn mubayi_color() {
    let out = pqcolor(&["color", "--variant", "mubayi", "--m", "3", "--t", "2", "--v", "1,2", "--w", "1,3"]);
    assert_eq!(stdout(&out).trim(), "({2,3}:2:01)");
}

#[test]
fn table_is_deterministic_and_matches_census() {
    let args = ["table", "--params", "1,2,4", "--alpha", "4", "--variant", "eta"];
    let first = stdout(&pqcolor(&args));
    assert_eq!(first, stdout(&pqcolor(&args)));
    assert_eq!(first.lines().count(), 120);
    let distinct: HashSet<&str> = first.lines().map(|l| l.rsplit('\t').next().unwrap()).collect();
    let (_, census) = json(&["census", "--params", "1,2,4", "--alpha", "4"]);
    assert_eq!(census["colors"].as_u64().unwrap(), distinct.len() as u64);
    assert_eq!(distinct.len(), 24);

    let small = stdout(&pqcolor(&["table", "--params", "1,2,4", "--alpha", "2", "--variant", "eta"]));
    assert_eq!(small.lines().count(), 6);
}

#[test]
fn verify_exit_codes() {
    let (code, report) = json(&["verify", "--params", "1,2,4", "--alpha", "4", "--p", "4", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(report["passed"], true);
    assert_eq!(report["subsets_checked"], 1820);
    assert_eq!(report["schema_version"], "1");

    let (code, report) = json(&["verify", "--mubayi", "3,3", "--p", "26", "--q", "25"]);
    assert_eq!(code, 2);
    assert_eq!(report["passed"], false);
    assert_eq!(report["violations"][0]["subset"].as_array().unwrap().len(), 26);

    let out = pqcolor(&["verify", "--params", "1,3,4", "--alpha", "4", "--p", "4", "--q", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3 does not divide 4"));
}

#[test]
fn verify_reports_are_reproducible() {
    let args = [
        "verify",
        "--params",
        "1,2,4,8",
        "--alpha",
        "7",
        "--strong",
        "5",
        "--mode",
        "sampled",
        "--seed",
        "3",
        "--samples",
        "20000",
    ];
    let (_, a) = json(&args);
    let mut with_workers = args.to_vec();
    with_workers.extend_from_slice(&["--workers", "1"]);
    let (_, b) = json(&with_workers);
    assert_eq!(a, b);
}

#[test]
fn mixing_universes_is_rejected() {
    let out = pqcolor(&["verify", "--params", "1,2,4", "--alpha", "4", "--mubayi", "3,3", "--p", "4", "--q", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--mubayi"));
}

#[test]
fn budget_comes_from_flag_or_environment() {
    let args = ["verify", "--params", "1,2,4", "--alpha", "4", "--p", "4", "--q", "3"];
    let out = Command::new(env!("CARGO_BIN_EXE_pqcolor")).args(args).env("PQCOLOR_BUDGET", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1820"));

    let mut flagged = args.to_vec();
    flagged.extend_from_slice(&["--budget", "10"]);
    assert_eq!(pqcolor(&flagged).status.code(), Some(1));
}

#[test]
fn params_for_sixteen_vertices() {
    let (code, v) = json(&["params", "--n", "16", "--p", "1"]);
    assert_eq!(code, 0);
    assert_eq!((v["beta"].as_u64(), v["alpha"].as_u64()), (Some(2), Some(4)));
    assert_eq!(v["chain"], "1,2,4");
}

#[test]
fn oracle_finds_two_colors_for_a_triangle() {
    let (code, v) = json(&["oracle", "--n", "3", "--p", "3", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["f"], 2);
    assert_eq!(v["witness_verified"], true);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn three_cube_counterexample() {
    let (code, v) = json(&["counterexample", "--three-cube"]);
    assert_eq!(code, 0);
    assert_eq!(v["colors"], 21);
    assert_eq!(v["violated"], serde_json::json!([26, 25]));
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(pqcolor(&["--help"]).status.code(), Some(0));
    assert_eq!(pqcolor(&["--version"]).status.code(), Some(0));
    assert_eq!(pqcolor(&["no-such-command"]).status.code(), Some(1));
}
