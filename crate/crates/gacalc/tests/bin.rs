//! End-to-end checks against the compiled binary: process exit codes
//! and stream routing, which the in-process CLI tests cannot observe.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gacalc(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gacalc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary should start");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary should finish")
}

#[test]
fn eval_success_exits_zero() {
    let out = gacalc(&["eval", "e[2]*e[1]"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"-e[1,2]\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn eval_failure_exits_one_via_stderr() {
    let out = gacalc(&["eval", "1 +"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(out.stderr.starts_with(b"error: byte 3:"));
}

#[test]
fn usage_error_exits_two() {
    let out = gacalc(&["eval"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn check_reports_membership_through_the_exit_code() {
    assert_eq!(
        gacalc(&["check", "2,0", "e[0]*e[1]"], "").status.code(),
        Some(0)
    );
    assert_eq!(gacalc(&["check", "0,1", "e[0]"], "").status.code(), Some(1));
}

#[test]
fn repl_runs_a_piped_session() {
    let out = gacalc(&["repl"], "e[0] + e[1]\nans*ans\nquit\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "ga> e[0] + e[1]\nga> 2\nga> "
    );
}
