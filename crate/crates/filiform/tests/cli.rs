//! End-to-end checks of the command-line front end: exit codes, JSON
//! determinism, and the point-file contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_filiform"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn usage_error_is_exit_1() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["variety", "12"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn variety_9_json_contains_single_generator() {
    let out = run(&["variety", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["published"].as_array().unwrap().len(), 1);
    assert_eq!(doc["derived"].as_array().unwrap().len(), 1);
    assert!(doc["published"][0]["poly"]
        .as_str()
        .unwrap()
        .contains("a[2,6]*a[3,8]"));
}

#[test]
fn repeated_invocations_are_byte_identical() {
    for args in [
        vec!["variety", "10"],
        vec!["iso-eqs", "--n", "9", "--stage", "prop-g"],
        vec!["export", "--what", "scripts", "--format", "json"],
        vec!["verify", "prop_dim9", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn check_point_verifies_claims() {
    let dir = std::env::temp_dir().join("filiform-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    // the first witness point with its claims
    let good = dir.join("good.json");
    std::fs::write(
        &good,
        r#"{"n": 9, "values": ["1","-1","0","0","0","1","1","0","1"],
           "claims": {"open_set": "U9"}}"#,
    )
    .unwrap();
    let out = run(&["check-point", good.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["all_claims_hold"], serde_json::Value::Bool(true));

    // a point off the variety exits 2 (a26 = 1, a38 = 0 makes the F9 relation -3)
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"n": 9, "values": ["1","0","0","0","0","1","0","0","0"]}"#,
    )
    .unwrap();
    let out = run(&["check-point", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // wrong tuple length is a usage error
    let short = dir.join("short.json");
    std::fs::write(&short, r#"{"n": 9, "values": ["1","2"]}"#).unwrap();
    let out = run(&["check-point", short.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn deform_at_time_zero_returns_base_bracket() {
    let out = run(&["deform", "--n", "9", "--t", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let deformed = doc["deformed"].clone();
    let base: filiform::liecore::BilinearMap = serde_json::from_value(deformed).unwrap();
    assert_eq!(base, filiform::vergne::generic_filiform(9).mu);
}

#[test]
fn verify_script_target_passes() {
    let out = run(&["verify", "lemma_m11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_points_reports_published_defect() {
    // the sixth published witness point fails one equation, so the points
    // target exits 2 and names the offending value
    let out = run(&["verify", "points", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failing: Vec<&str> = doc["summary"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == serde_json::Value::Bool(false))
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["point/6@11/C11_2"]);
}

#[test]
fn export_brackets_latex_matches_published_rows() {
    let out = run(&[
        "export", "--what", "brackets", "--n", "9", "--format", "latex",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\\mu(x_{1}, x_{6}) &=& ( a_{1,4} - 3a_{2,6} + a_{3,8} )x_{8}"));
    assert!(text.contains("\\mu(x_{3}, x_{4}) &=& a_{3,8}x_{8}"));
}

#[test]
fn export_equations_dim7_is_empty() {
    let out = run(&[
        "export",
        "--what",
        "equations",
        "--n",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["derived"].as_array().unwrap().len(), 0);
}

#[test]
fn parallel_and_serial_verification_agree() {
    let serial = run(&["verify", "all", "--format", "json", "--jobs", "1"]);
    let parallel = run(&["verify", "all", "--format", "json", "--jobs", "4"]);
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(serial.status.code(), parallel.status.code());
    // the known data defect makes the aggregate fail
    assert_eq!(serial.status.code(), Some(2));
}
