use std::process::{Command, Output};

use serde_json::Value;

fn tppa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tppa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn compose_reports_loops() {
    let out = tppa(&["compose", "[[1,2],[-1,-2]]", "[[1,2],[-1,-2]]"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["diagram"], "[[1,2],[-1,-2]]");
    assert_eq!(v["xi_power"], 1);
}

#[test]
fn mult_agrees_three_ways() {
    let out = tppa(&["mult", "--lambda", "(2,1)", "--k", "4", "--n", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    // S(4,3) f^(2,1) = 6 * 2
    assert_eq!(v["paths"], 12);
    assert_eq!(v["stirling_formula"], 12);
    assert_eq!(v["character"], 12);
}

#[test]
fn rsk_round_trip() {
    let out = tppa(&["rsk", "--tableau", "[[[1,2],[3]]]"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let path = serde_json::to_string(&v["path"]).unwrap();
    let back = tppa(&["rsk", "--path", &path, "--n", "3"]);
    assert!(back.status.success(), "{}", String::from_utf8_lossy(&back.stderr));
    assert_eq!(json(&back)["tableau"], serde_json::json!([[[1, 2], [3]]]));
}

#[test]
fn verify_rook_suite_passes() {
    let out = tppa(&["verify", "--suite", "rook", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(tppa(&["compose", "x", "y"]).status.code(), Some(2));
    assert_eq!(tppa(&["compose", "[[1,-1]]", "[[1,-1],[2,-2]]"]).status.code(), Some(2));
    assert_eq!(tppa(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(tppa(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(tppa(&["schur-weyl", "--n", "3", "--k", "9"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "bratteli", "--graph", "rhat", "--n", "3", "--k", "3", "--format", "json",
        ][..],
        &["jm", "--t", "5/2", "--n", "3"][..],
        &["dims", "--n", "3", "--t", "2"][..],
    ] {
        let a = tppa(args);
        let b = tppa(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn dot_output_names_graph() {
    let out = tppa(&["bratteli", "--graph", "ihat", "--t", "2", "--format", "dot"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph ihat {"));
}
