mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::PAPER;

fn projtree(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_projtree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn reads_file_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paper.txt");
    std::fs::write(&path, PAPER).unwrap();
    let from_file = projtree(&["count", "--root", "5", path.to_str().unwrap()], "");
    let from_dash = projtree(&["count", "--root", "5", "-"], PAPER);
    let from_stdin = projtree(&["count", "--root", "5"], PAPER);
    assert_eq!(from_file.stdout, b"4\n");
    assert_eq!(from_file.stdout, from_dash.stdout);
    assert_eq!(from_file.stdout, from_stdin.stdout);
}

#[test]
fn exit_statuses() {
    assert_eq!(
        projtree(&["check", "--root", "5"], PAPER).status.code(),
        Some(0)
    );
    assert_eq!(
        projtree(&["check", "--root", "6"], PAPER).status.code(),
        Some(1)
    );
    assert_eq!(
        projtree(&["check", "--root", "60"], PAPER).status.code(),
        Some(2)
    );
    let bad = projtree(&["conflicts"], "n 2\n1 1\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2: loop arc"));
    let missing = projtree(&["conflicts", "/nonexistent/graph.txt"], "");
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn oracle_is_labelled() {
    let out = projtree(&["enumerate", "--root", "1", "--oracle"], "n 3\n1 2\n2 3\n");
    assert_eq!(out.stdout, b"1 2, 2 3\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("exponential-time"));
}
