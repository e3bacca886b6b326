//! End-to-end checks of the cyclex binary: exit-code contract, report
//! determinism across worker counts, and command composition.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cyclex() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclex"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = cyclex()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cyclex");
    // The child may exit before reading (usage errors); a broken pipe here
    // is fine.
    let _ = child.stdin.as_mut().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn construct_emits_known_encodings() {
    let out = cyclex().args(["construct", "mKa+Kb", "4", "2", "3"]).output().unwrap();
    assert!(out.status.success());
    // 11 vertices: header 'J' = 74 = 11 + 63.
    assert!(stdout_of(&out).starts_with('J'));

    let out = cyclex().args(["construct", "H", "1", "1", "2", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_t1_on_k5_holds() {
    // K5 in graph6.
    let out = run_with_stdin(&["check", "--statement", "T1"], "D~{\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("holds"), "{text}");
    assert!(text.contains("applicable 1"), "{text}");
}

#[test]
fn tight_example_passes_t1_but_fails_strict_variant() {
    let fixture = cyclex()
        .args(["construct", "mKa+Kb", "5", "2", "4"])
        .output()
        .unwrap();
    let g6 = stdout_of(&fixture);

    let ok = run_with_stdin(&["check", "--statement", "T1"], &g6);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout_of(&ok));

    let bad = run_with_stdin(&["check", "--statement", "T1-strict"], &g6);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout_of(&bad).contains("COUNTEREXAMPLE"));
}

#[test]
fn decode_errors_counted_not_fatal() {
    let out = run_with_stdin(&["check", "--statement", "T1"], "not-a-graph\nD~{\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("decode errors 1"));
}

#[test]
fn json_reports_identical_across_worker_counts() {
    let mut corpus = String::new();
    for line in ["D~{", "C~", "EhEG", "D??"] {
        corpus.push_str(line);
        corpus.push('\n');
    }
    let a = run_with_stdin(
        &["check", "--statement", "M", "--statement", "F", "--workers", "1", "--format", "json"],
        &corpus,
    );
    let b = run_with_stdin(
        &["check", "--statement", "M", "--statement", "F", "--workers", "7", "--format", "json"],
        &corpus,
    );
    assert_eq!(stdout_of(&a), stdout_of(&b));
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn workers_env_fallback() {
    let mut child = cyclex()
        .args(["check", "--statement", "F", "--format", "json"])
        .env("CYCLEX_WORKERS", "3")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"D~{\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
}

#[test]
fn invariants_on_c6() {
    let out = run_with_stdin(&["invariants"], "EhEG\n");
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(
        text.contains("n=6 delta=2 kappa=2 alpha=3 c=6 dominating=true"),
        "{text}"
    );
}

#[test]
fn invariants_empty_input_is_ok() {
    let out = run_with_stdin(&["invariants"], "");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn construct_pipes_into_check() {
    // The hunt command flags the strict variant on the tight example but
    // reports nothing on the true statement.
    let fixture = cyclex().args(["construct", "mKa+Kb", "5", "2", "4"]).output().unwrap();
    let g6 = stdout_of(&fixture);
    let hunt = run_with_stdin(&["hunt", "--statement", "Conj2", "--format", "json"], &g6);
    // delta = 5, kappa = 4: 4*5 - 4 - 4 = 12 = c, conjecture holds here.
    assert_eq!(hunt.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&hunt)).unwrap();
    assert_eq!(report["aggregate"]["counterexamples"], 0);
    assert_eq!(report["schema_version"], 1);
}

#[test]
fn reduced_selftest_passes_and_corruption_fails() {
    let out = cyclex().args(["selftest", "--max-n", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    assert_eq!(stdout_of(&out).matches("PASS").count(), 4);

    let out = cyclex()
        .args(["selftest", "--max-n", "6", "--corrupt-bounds"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("FAIL scheme-soundness"));
}

#[test]
fn missing_input_file_is_usage_error() {
    let out = cyclex()
        .args(["check", "--statement", "T1", "--input", "/nonexistent/file.g6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_statement_is_usage_error() {
    let out = run_with_stdin(&["check", "--statement", "T99"], "D~{\n");
    assert_eq!(out.status.code(), Some(2));
}
