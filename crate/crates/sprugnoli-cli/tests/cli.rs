//! End-to-end checks of the installed binary: cross-format output stability,
//! exit codes for each failure class, and the fixture verifier.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sprugnoli"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("stdout should be utf-8")
}

#[test]
fn build_pretty_is_exact_and_stable() {
    let args = [
        "build",
        "--family",
        "sprugnoli",
        "--g",
        "1/(1-x)",
        "--f1",
        "x*(1+x)/(1-x)",
        "--f2",
        "x/(1-x^2)",
        "--dim",
        "5",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "1 0 0 0 0\n1 1 0 0 0\n1 3 1 0 0\n1 5 1 1 0\n1 7 2 3 1\n"
    );
    let again = run(&args);
    assert_eq!(out.stdout, again.stdout, "bytes must not vary between runs");
}

#[test]
fn build_json_has_schema_fields() {
    let out = run(&[
        "build", "--family", "riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--dim", "4",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["family"], "riordan");
    assert_eq!(doc["dim"], 4);
    assert_eq!(doc["entries"][3], serde_json::json!(["1", "3", "3", "1"]));
}

#[test]
fn apply_prints_the_acted_sequence() {
    let out = run(&[
        "apply",
        "--family",
        "sprugnoli",
        "--g",
        "1/(1-x)",
        "--f1",
        "x*(1+x)/(1-x)",
        "--f2",
        "x/(1-x^2)",
        "--seq",
        "1/(1-x-x^2)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1,2,6,11,26,45,100,170,370\n");
}

#[test]
fn exit_codes_separate_failure_classes() {
    // missing required flag: usage error
    let out = run(&["build", "--family", "riordan", "--g", "1/(1-x)"]);
    assert_eq!(out.status.code(), Some(1));

    // unparseable expression
    let out = run(&[
        "build", "--family", "riordan", "--g", "2x", "--f", "x/(1-x)",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // a window wider than the truncation supports
    let out = run(&[
        "build", "--family", "riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--dim", "40",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // g(0) = 0 violates group membership
    let out = run(&["build", "--family", "riordan", "--g", "x", "--f", "x/(1-x)"]);
    assert_eq!(out.status.code(), Some(2));

    // products are undefined for stretched arrays
    let out = run(&[
        "mul", "--family", "stretched", "--g", "1/(1-x)", "--f", "x^2/(1-x)", "--rhs-g",
        "1/(1-x)", "--rhs-f", "x^2/(1-x)",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_runs_the_fixture_registry() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("19 passed, 0 failed"), "got: {text}");

    let out = run(&["verify", "pnorm"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2 passed, 0 failed"));

    // a filter matching nothing is an internal mismatch, not silence
    let out = run(&["verify", "no-such-fixture"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["verify", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("further-examples") && text.contains("pnorm"), "got: {text}");
}
