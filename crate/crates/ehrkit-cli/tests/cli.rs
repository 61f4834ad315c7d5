//! End-to-end tests that drive the compiled `ehrkit` binary and inspect its
//! streams and exit codes.

use std::process::{Command, Output};

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ehrkit"));
    // Keep runs hermetic: the harness environment must not leak ceilings or
    // budgets into the assertions below.
    cmd.env_remove("EHRKIT_BUDGET")
        .env_remove("EHRKIT_MAX_N")
        .env_remove("EHRKIT_JOBS");
    cmd
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary should run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no exit code (killed by signal?)")
}

#[test]
fn ehrhart_json_record_has_schema_fields() {
    let out = run(&["ehrhart", "hypersimplex", "1", "3"]);
    assert_eq!(code_of(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).expect("valid JSON");
    assert_eq!(v["family"], "hypersimplex");
    assert_eq!(v["k"], 1);
    assert_eq!(v["n"], 3);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["coefficients"], serde_json::json!(["1", "3/2", "1/2"]));
    assert!(v.get("evaluations").is_none(), "no --eval, so no evaluations key");
}

#[test]
fn ehrhart_json_round_trips() {
    let out = run(&["ehrhart", "independence", "3", "3"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let v: serde_json::Value = serde_json::from_str(text.trim()).expect("valid JSON");
    assert_eq!(v["coefficients"], serde_json::json!(["1", "3", "3", "1"]));
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, reparsed);
}

#[test]
fn ehrhart_reports_requested_evaluations() {
    let out = run(&["ehrhart", "half-open", "2", "5", "--eval", "1"]);
    assert_eq!(code_of(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).expect("valid JSON");
    assert_eq!(v["family"], "half_open");
    assert_eq!(v["dim"], 4);
    assert_eq!(v["evaluations"], serde_json::json!([[1, "6"]]));
}

#[test]
fn half_open_family_accepts_both_spellings() {
    let dashed = run(&["ehrhart", "half-open", "2", "4"]);
    let underscored = run(&["ehrhart", "half_open", "2", "4"]);
    assert_eq!(code_of(&dashed), 0);
    assert_eq!(code_of(&underscored), 0);
    assert_eq!(stdout_of(&dashed), stdout_of(&underscored));
}

#[test]
fn ehrhart_verify_confirms_closed_form() {
    let out = run(&["ehrhart", "hypersimplex", "2", "4", "--verify"]);
    assert_eq!(code_of(&out), 0);
    assert!(
        stderr_of(&out).contains("matches a brute-force sweep"),
        "confirmation goes to stderr"
    );
}

#[test]
fn ehrhart_rejects_out_of_range_level() {
    let out = run(&["ehrhart", "hypersimplex", "5", "3"]);
    assert_eq!(code_of(&out), 2);
    assert!(!stderr_of(&out).is_empty());

    let out = run(&["ehrhart", "hypersimplex", "0", "3"]);
    assert_eq!(code_of(&out), 2);

    let out = run(&["ehrhart", "independence", "0", "4"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn ehrhart_verify_respects_budget_flag_and_env() {
    let out = run(&["ehrhart", "independence", "2", "4", "--verify", "--budget", "2"]);
    assert_eq!(code_of(&out), 4);
    assert!(!stderr_of(&out).is_empty());

    let out = binary()
        .args(["ehrhart", "independence", "2", "4", "--verify"])
        .env("EHRKIT_BUDGET", "2")
        .output()
        .expect("binary should run");
    assert_eq!(code_of(&out), 4);
}

#[test]
fn ehrhart_plain_format_prints_polynomial() {
    let out = run(&["ehrhart", "hypersimplex", "1", "3", "--format", "plain"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("hypersimplex (1, 3):"));
    assert!(text.contains("1 + 3/2 t + 1/2 t^2"));
}

#[test]
fn ehrhart_plain_format_lists_evaluations() {
    let out = run(&[
        "ehrhart",
        "independence",
        "1",
        "3",
        "--format",
        "plain",
        "--eval",
        "2",
    ]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("independence (1, 3):"));
    assert!(text.contains("t = 2: 10"));
}

#[test]
fn lah_prints_single_values() {
    for (args, expect) in [
        (["lah", "0", "3", "2"], "3"),
        (["lah", "1", "3", "2"], "3"),
        (["lah", "5", "3", "2"], "0"),
        (["lah", "-1", "3", "2"], "0"),
    ] {
        let out = run(&args);
        assert_eq!(code_of(&out), 0, "args: {args:?}");
        assert_eq!(stdout_of(&out).trim(), expect, "args: {args:?}");
    }
}

#[test]
fn verify_with_tiny_ceiling_passes_vacuously() {
    let out = run(&["verify", "--max-n", "1"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("[verify] lah-vs-enumeration: ok"));
    assert!(text.contains(" 0 failed"));
}

#[test]
fn verify_at_moderate_ceiling_passes() {
    let out = run(&["verify", "--max-n", "4"]);
    assert_eq!(code_of(&out), 0, "stdout:\n{}", stdout_of(&out));
    assert!(stdout_of(&out).contains(" 0 failed"));
}

#[test]
fn verify_with_tight_budget_reports_exit_four() {
    let out = run(&["verify", "--max-n", "7", "--budget", "1000"]);
    assert_eq!(code_of(&out), 4, "stdout:\n{}", stdout_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("budget-limited"));
    assert!(text.contains(" 0 failed"), "budget limits are not failures");
}

#[test]
fn table_csv_uses_single_header_and_long_rows() {
    let out = run(&["table", "hypersimplex", "4", "--format", "csv"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,k,n,degree,coefficient");
    // Slices (1,2), (1,3), (1,4), (2,4): reflected levels are omitted.
    assert_eq!(lines.len(), 1 + 2 + 3 + 4 + 4);
    assert_eq!(lines[1], "hypersimplex,1,2,0,1");
    assert_eq!(lines[2], "hypersimplex,1,2,1,1");
    assert!(lines[13].starts_with("hypersimplex,2,4,3,"));
    assert!(!text.contains("hypersimplex,3,4"), "k > n - k is omitted");
}

#[test]
fn table_json_emits_one_record_per_line() {
    let out = run(&["table", "independence", "2", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let records: Vec<serde_json::Value> = text
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line is a JSON record"))
        .collect();
    assert_eq!(records.len(), 3);
    let keys: Vec<(u64, u64)> = records
        .iter()
        .map(|v| (v["k"].as_u64().unwrap(), v["n"].as_u64().unwrap()))
        .collect();
    assert_eq!(keys, vec![(1, 1), (1, 2), (2, 2)]);
    for v in &records {
        assert_eq!(v["family"], "independence");
    }
    assert_eq!(records[0]["coefficients"], serde_json::json!(["1", "1"]));
}

#[test]
fn output_is_deterministic_across_runs_and_thread_counts() {
    let first = run(&["table", "half-open", "5", "--format", "json"]);
    let second = run(&["table", "half-open", "5", "--format", "json"]);
    assert_eq!(code_of(&first), 0);
    assert_eq!(stdout_of(&first), stdout_of(&second));

    let serial = run(&["--jobs", "1", "ehrhart", "hypersimplex", "2", "5", "--verify"]);
    let parallel = run(&["--jobs", "4", "ehrhart", "hypersimplex", "2", "5", "--verify"]);
    assert_eq!(code_of(&serial), 0);
    assert_eq!(code_of(&parallel), 0);
    assert_eq!(stdout_of(&serial), stdout_of(&parallel));
}
