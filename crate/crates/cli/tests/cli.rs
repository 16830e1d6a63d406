use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superalg")).args(args).output().expect("binary runs")
}

fn doc(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn kan_of_the_one_dimensional_algebra() {
    let out = run(&["kan", "--params", "Mat(1|0)"]);
    assert_eq!(out.status.code(), Some(0));
    let d = doc(&out);
    assert_eq!(d["result"]["dims"], serde_json::json!({"-1": [1, 0], "0": [1, 0], "1": [1, 0]}));
    assert_eq!(d["status"], "ok");
}

#[test]
fn jordan_check_mat11() {
    let out = run(&["jordan", "check", "--params", "Mat(1|1)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(doc(&out)["result"]["jordan_identity"]["ok"], true);
}

#[test]
fn perturbed_gl2_is_not_homological() {
    let out = run(&["homological-check", "--in", &data("gl2_perturbed.json")]);
    assert_eq!(out.status.code(), Some(1));
    let d = doc(&out);
    assert_eq!(d["status"], "failed");
    assert!(d["result"]["witness"]["monomial"].is_string());
    assert_eq!(run(&["homological-check", "--params", "gl(2)"]).status.code(), Some(0));
}

#[test]
fn scalar_cross_ratio() {
    let out = run(&["crossratio", "--variant", "det", "--in", &data("scalar_0123.json")]);
    assert_eq!(out.status.code(), Some(0));
    let coeffs = &doc(&out)["result"]["coeffs"];
    assert_eq!(coeffs[0][0]["c"], "-1/3");
    assert_eq!(coeffs[1][0]["c"], "-1/1");
}

#[test]
fn exit_codes_for_bad_input() {
    let out = run(&["algebra", "check", "--in", &data("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(doc(&out)["error"]["kind"], "invalid_input");
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(run(&["algebra", "build", "--params", "nonsense(1)"]).status.code(), Some(2));
    assert_eq!(run(&["algebra", "check", "--in", &data("does_not_exist.json")]).status.code(), Some(2));
    assert_eq!(run(&["jordan", "build", "--params", "Mat(9|9)"]).status.code(), Some(3));
}

#[test]
fn degree_cap_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_superalg"))
        .args(["kan", "--params", "Mat(1|0)"])
        .env("SUPERALG_DEGREE_CAP", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jobs_and_out_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kan.json");
    let out = run(&["--out", path.to_str().unwrap(), "run", "--job", &data("job_kan.json")]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(written["verb"], "kan");
    assert_eq!(written["result"]["dims"]["0"], serde_json::json!([1, 0]));
}

#[test]
fn runs_are_byte_identical() {
    let jobs: [&[&str]; 3] = [
        &["--seed", "11", "invariance", "--variant", "ber", "--params", "(1|1)", "--samples", "10"],
        &["run", "--job", &data("job_invariance.json")],
        &["kan", "--params", "Q(2|2)"],
    ];
    for args in jobs {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}
