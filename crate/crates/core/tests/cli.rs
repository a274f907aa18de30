//! End-to-end tests of the command-line binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn trithoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trithoff")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

#[test]
fn seq_prints_terms() {
    let out = trithoff(&["seq", "tribonacci", "--count", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 0 1 1 2 4 7 13\n");
}

#[test]
fn seq_json() {
    let out = trithoff(&["--json", "seq", "fibternary", "--count", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["terms"], serde_json::json!(["0", "1", "3", "9", "10"]));
}

#[test]
fn array_window() {
    let out = trithoff(&["array", "--rows", "3", "--cols", "-2..4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 0 1 || 1 2  4  7\n0 1 2 || 3 6 11 20\n1 1 3 || 5 9 17 31\n");
}

#[test]
fn locate_row_multiple() {
    let out = trithoff(&["--json", "locate", "2,4,8@2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["row"], 7);
    assert_eq!(v["first_column"], "14");
}

#[test]
fn canonize_pads_when_needed() {
    let out = trithoff(&["canonize", "1030"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("zeros added 2"), "{text}");
    assert!(text.contains("canonical 1000001"), "{text}");
    assert!(text.contains("value 45"), "{text}");
}

#[test]
fn word_prefix() {
    let out = trithoff(&["word", "--count", "20"]);
    assert_eq!(stdout(&out), "abacabaabacababacaba\n");
}

#[test]
fn verify_passes_and_no_meta_is_stable() {
    let a = trithoff(&["--json", "--no-meta", "verify", "multiples"]);
    let b = trithoff(&["--json", "--no-meta", "verify", "multiples"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("elapsed_ms"));
    let with_meta = trithoff(&["--json", "verify", "multiples"]);
    assert!(stdout(&with_meta).contains("elapsed_ms"));
}

#[test]
fn oeis_fixture_matches() {
    let dir = data_dir();
    let out = trithoff(&["oeis", "A003265", "--offline", "--cache-dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn oeis_mismatch_exits_one() {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("b003265-wrong.txt");
    std::fs::write(&path, "1 1\n2 3\n3 6\n").unwrap();
    let out = trithoff(&["oeis", "A003265", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(trithoff(&["bogus"]).status.code(), Some(2));
    assert_eq!(trithoff(&["oeis", "A999999", "--offline"]).status.code(), Some(2));
    assert_eq!(trithoff(&["locate", "1,2"]).status.code(), Some(2));
    let garbled = data_dir().join("garbled.txt");
    let out = trithoff(&["oeis", "A003265", "--file", garbled.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":4:"));
    let missing = trithoff(&["oeis", "A003265", "--offline", "--cache-dir", "/nonexistent"]);
    assert_eq!(missing.status.code(), Some(2));
}
