//! End-to-end tests of the `paraq` binary: exit codes, report schema,
//! determinism, and file output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paraq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

#[test]
fn verify_single_point_passes() {
    let out = run(&["verify", "--spin", "1", "--order", "2", "--delta", "1/3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("all "));
    assert!(text.contains("checks passed"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn bad_arguments_exit_2() {
    // negative order rejected by the parser
    let out = run(&["verify", "--spin", "1", "--order", "-1", "--delta", "1/3"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed spin
    let out = run(&["verify", "--spin", "abc", "--order", "1", "--delta", "1/3"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed rational
    let out = run(&["verify", "--spin", "1", "--order", "1", "--delta", "1/0"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_schema() {
    let out = run(&[
        "verify", "--spin", "1/2", "--order", "1", "--delta", "1/2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(doc["artifact_version"].is_string());
    let checks = doc["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string());
        assert!(c["params"].is_object());
        let status = c["status"].as_str().unwrap();
        assert!(status == "pass" || status == "fail");
        assert!(c["witness"].is_object() || c["witness"].is_null());
        assert_eq!(status, "pass");
    }
}

#[test]
fn verify_default_grid_deterministic() {
    // the full default grid is heavier; run it once in JSON and once more to
    // confirm byte-identical output
    let a = run(&["verify", "--format", "json"]);
    let b = run(&["verify", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!stdout(&a).is_empty());
}

#[test]
fn psi_lists_polynomials() {
    let out = run(&["psi", "--kmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("psi_0(H) = H"));
    assert!(text.contains("psi_1(H) = (H^3 - H)/6"));
    assert!(text.contains("psi_2(H) = (3*H^5 - 10*H^3 + 7*H)/360"));
}

#[test]
fn rmatrix_prints_entries_and_passes() {
    let out = run(&["rmatrix", "--spin", "1/2", "--delta", "1/2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    // the δθ entries of the 4×4 matrix, with δ factored out
    assert!(text.contains("1·δθ"));
    assert!(text.contains("-1·δθ"));
    assert!(text.contains("yang_baxter"));
    assert!(text.contains("PASS"));
}

#[test]
fn cbh_composes_and_checks() {
    let out = run(&[
        "cbh", "--order1", "1", "--order2", "1", "--delta1", "1/2", "--delta2", "1/3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("θ1·θ2 : 1/6"));
    assert!(text.contains("cbh_exp_identity"));

    // orders with a wrong kept-chain coefficient must exit 1
    let out = run(&[
        "cbh", "--order1", "3", "--order2", "1", "--delta1", "1/2", "--delta2", "1/3",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn limits_prints_relation() {
    let out = run(&["limits", "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[J+,J-] -> H^3"));
    assert!(text.contains("Higgs"));

    // two-parameter evaluation
    let out = run(&[
        "limits", "--order", "3", "--q", "2", "--order1", "1", "--spin", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("17/5"));

    // vanishing denominator is a usage error
    let out = run(&["limits", "--order", "2", "--q", "1", "--order1", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("paraq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--spin",
        "1/2",
        "--order",
        "0",
        "--delta",
        "1/2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc["checks"].as_array().is_some());
    std::fs::remove_dir_all(&dir).unwrap();
}
