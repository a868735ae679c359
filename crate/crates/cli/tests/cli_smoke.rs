//! End-to-end checks of the `r2k` binary: output shapes and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn r2k(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_r2k"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn bracket_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = r2k(dir.path(), &["bracket", "L(2)", "L(-2)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "4*L(0) + 1/2*C");
}

#[test]
fn bracket_parse_error_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = r2k(dir.path(), &["bracket", "L(2", "L(-2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn apply_aut_with_shift() {
    let dir = tempfile::tempdir().unwrap();
    let out = r2k(dir.path(), &["apply-aut", "--a", "2", "L(0)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "L(0) + 2*H(0) + 2/3*C");
}

#[test]
fn invert_aut_shows_oracle_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let out = r2k(
        dir.path(),
        &["invert-aut", "--f", "1", "--xi", "-1", "--eps", "1", "--a", "0", "--b", "2", "--law", "both"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("derived:"));
    assert!(text.contains("paper:"));
    assert!(text.contains("derived inverts, paper FAILS"));
}

#[test]
fn compose_aut_flags_disagreement() {
    let dir = tempfile::tempdir().unwrap();
    let out = r2k(
        dir.path(),
        &[
            "compose-aut",
            "--left",
            "f=1;xi=1;eps=1;a=1;b=1",
            "--right",
            "f=1;xi=1;eps=-1;a=0;b=1",
            "--law",
            "both",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("disagree"));
}

#[test]
fn derivation_table_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("d.json");
    let out = r2k(
        dir.path(),
        &[
            "make-der", "--kind", "odd-inner", "--xi0", "2", "--xi1", "-3",
            "--gamma", "1", "--window", "3", "--out", table.to_str().unwrap(),
        ],
    );
    assert_eq!(out.status.code(), Some(0));

    let out = r2k(dir.path(), &["check-der", "--table", table.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));

    let out = r2k(dir.path(), &["decompose-der", "--table", table.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "odd-inner: xi0 = 2, xi1 = -3, gamma = 1"
    );
}

#[test]
fn audit_respects_config_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // generic rank-2 config with JSON output
    std::fs::write(
        dir.path().join("r2k.json"),
        r#"{"rank": 2, "mode": "generic", "window": 1, "format": "json"}"#,
    )
    .unwrap();
    let out = r2k(dir.path(), &["audit", "--suite", "structure"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["meta"]["rank"], 2);

    // bad config is a usage error
    std::fs::write(dir.path().join("bad.json"), r#"{"rank": 0, "mode": "rational"}"#).unwrap();
    let out = r2k(dir.path(), &["--config", "bad.json", "audit", "--suite", "structure"]);
    assert_eq!(out.status.code(), Some(2));
}
