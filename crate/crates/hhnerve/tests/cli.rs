//! Exit-code contract and ingestion behavior of the `hhnerve` binary:
//! 0 = verified, 1 = usage/ingestion/budget, 2 = mathematical failure.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhnerve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhnerve"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn passing_commands_exit_zero() {
    for args in [
        vec!["group-info", "--group", "klein"],
        vec!["hochschild", "--group", "c3", "--field", "F3"],
        vec!["nerve", "--group", "s3", "--kind", "right"],
        vec!["derivations", "--group", "q8", "--field", "F2"],
        vec!["compare", "--group", "d4"],
        vec!["burghelea", "--group", "s3", "--field", "F2"],
        vec!["benson-check", "--group", "s3"],
        vec!["full-report", "--group", "c4", "--field", "F2"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 0, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn full_report_passes_on_the_whole_corpus() {
    for group in ["c1", "c2", "c3", "c4", "c5", "klein", "s3", "d4", "q8"] {
        for field in ["Q", "F2", "F3"] {
            let out = run(&[
                "full-report", "--group", group, "--field", field, "--max-degree", "3",
            ]);
            assert_eq!(code(&out), 0, "{group}/{field}: {}", stderr(&out));
        }
    }
}

#[test]
fn benson_check_abelian_reports_equality() {
    let out = run(&["benson-check", "--group", "c3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("= 9"), "{text}");
    assert!(text.contains("equal (abelian)"), "{text}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["hochschild"],                                  // no group source
        vec!["hochschild", "--group", "zzz"],                // unknown builtin
        vec!["hochschild", "--group", "s9"],                 // unsupported parameter
        vec!["hochschild", "--group", "c2", "--field", "F4"],// 4 is not prime
        vec!["hochschild", "--group", "c2", "--max-degree", "0"],
        vec!["group-info", "--group", "c2", "--format", "csv"],
        vec!["derivations", "--group", "c2", "--field", "Z"],
        vec!["no-such-command"],
        vec!["compare", "--group", "c2", "--corrupt-sign", "nonsense"],
        vec!["hochschild", "--cayley-file", "/no/such/file.json"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 1, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn budget_refusal_exits_one_and_names_the_size() {
    let out = run_env(
        &["hochschild", "--group", "q8", "--max-degree", "3"],
        "HHNERVE_BUDGET_MB",
        "0",
    );
    assert_eq!(code(&out), 1);
    let err = stderr(&out);
    assert!(err.contains("budget"), "{err}");
    assert!(err.contains("order 8"), "{err}");
    assert!(err.contains("degree-3"), "{err}");
    // the flag overrides the environment
    let out = run_env(
        &["hochschild", "--group", "q8", "--budget-mb", "512"],
        "HHNERVE_BUDGET_MB",
        "0",
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn cayley_file_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2.json");
    std::fs::write(
        &path,
        r#"{"order": 2, "table": [[0, 1], [1, 0]], "labels": ["e", "s"]}"#,
    )
    .unwrap();
    let out = run(&["group-info", "--cayley-file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("order: 2"));
}

#[test]
fn non_associative_table_rejected_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // a loop (Latin square with identity 0 and two-sided inverses) that is
    // not associative: (1*1)*2 = 0*2 = 2 but 1*(1*2) = 1*3 = 4
    std::fs::write(
        &path,
        r#"{"order": 5, "table": [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]}"#,
    )
    .unwrap();
    let out = run(&["hochschild", "--cayley-file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let err = stderr(&out);
    assert!(err.contains("associat"), "{err}");
}

#[test]
fn corrupt_sign_exits_two_with_witness() {
    let out = run(&["compare", "--group", "c4", "--corrupt-sign", "2:5"]);
    assert_eq!(code(&out), 2);
    let combined = format!("{}{}", stdout(&out), stderr(&out));
    assert!(combined.contains("fails at degree 2"), "{combined}");
    // out-of-range corruption targets are usage errors, not math failures
    let out = run(&["compare", "--group", "c4", "--corrupt-sign", "9:0"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn json_output_is_deterministic_and_free_of_timing() {
    let args = [
        "full-report",
        "--group",
        "d4",
        "--field",
        "F2",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout, "JSON must be byte-identical across runs");
    let text = stdout(&a);
    assert!(!text.contains("elapsed"), "timing belongs on stderr only");
    assert!(stderr(&a).contains("elapsed"), "timing reported on stderr");
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["verification"]["all_passed"], true);
}

#[test]
fn csv_is_available_for_betti_tables() {
    let out = run(&[
        "hochschild", "--group", "c2", "--field", "F2", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("hochschild_homology,F2,0,"), "{text}");
    assert_eq!(text.lines().count(), 6, "{text}");
}

#[test]
fn dumps_and_dot_have_expected_shape() {
    let out = run(&["hochschild", "--group", "c2", "--dump-matrix", "1"]);
    assert_eq!(code(&out), 0);
    // header: rows cols nnz; C2 is abelian so d_1 = 0
    assert_eq!(stdout(&out), "2 4 0\n");

    let out = run(&["nerve", "--group", "c2", "--kind", "adjoint", "--dot"]);
    assert_eq!(code(&out), 0);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"), "{dot}");
    assert_eq!(dot.matches("subgraph cluster_").count(), 2, "{dot}");

    let out = run(&["nerve", "--group", "c2", "--kind", "bar", "--dump-complex"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("dims 1 2 4 8\n"));
}

#[test]
fn integral_homology_reports_torsion() {
    let out = run(&[
        "nerve", "--group", "c2", "--kind", "bar", "--field", "Z", "--format", "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // H_*(C2; Z) = Z, Z/2, 0 in degrees 0..2
    assert_eq!(parsed["homology"]["dimensions"], serde_json::json!([1, 0, 0]));
    assert_eq!(
        parsed["homology"]["torsion"],
        serde_json::json!([[], ["2"], []])
    );
}
