//! End-to-end CLI tests via the built binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_eigencones")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn CLI")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_counts_and_exit_codes() {
    let out = run(&["eigencone", "gen", "--type", "A2", "--criterion", "bk"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("12 inequalities for A2"));
    assert!(text.contains("P1 6, P2 6"));
    assert!(text.contains("x1 + z2 + z3 <= 0"));

    // Unknown flags and empty argv are usage errors (exit 2).
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eigencone", "gen", "--type", "A2", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // Unsupported type is a usage error too.
    let out = run(&["eigencone", "gen", "--type", "E6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_json_schema_fields_and_determinism() {
    let out = run(&["eigencone", "gen", "--type", "B2", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["type"], "B2");
    assert_eq!(doc["s"], 3);
    assert_eq!(doc["criterion"], "bk");
    let ineqs = doc["inequalities"].as_array().unwrap();
    assert_eq!(ineqs.len(), 18);
    for i in ineqs {
        assert!(i["parabolic"].is_u64());
        assert_eq!(i["words"].as_array().unwrap().len(), 3);
        assert_eq!(i["covectors"].as_array().unwrap().len(), 3);
    }
    // Byte-identical on a second run.
    let again = run(&["eigencone", "gen", "--type", "B2", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn member_and_violations() {
    let dir = std::env::temp_dir().join("eigencones-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(
        &good,
        r#"{"coords": "eps", "points": [[0,0,0],[0,0,0],[0,0,0]]}"#,
    )
    .unwrap();
    let out = run(&["eigencone", "member", "--type", "B3", "--points", good.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("member"));

    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"coords": "eps", "points": [[10,0,0],[1,1,0],[1,1,1]]}"#,
    )
    .unwrap();
    let out = run(&["eigencone", "member", "--type", "C3", "--points", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not a member"));

    // Rationals as "p/q" strings parse exactly.
    let frac = dir.join("frac.json");
    std::fs::write(
        &frac,
        r#"{"coords": "x", "points": [["1/2","1/3"],["1/2","1/3"],[0,0]]}"#,
    )
    .unwrap();
    let out = run(&["eigencone", "member", "--type", "B2", "--points", frac.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn bk_table_diff_golden() {
    let out = run(&["bk", "table", "--type", "B2", "--parabolic", "2", "--diff-golden"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("eps_s o eps_s = t eps_rs"));
    assert!(text.contains("3/3 cells match"));

    // The documented typo cells make the G2 P1 diff a reported mismatch.
    let out = run(&["bk", "table", "--type", "G2", "--parabolic", "1", "--diff-golden"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("7/9 cells match"));
    assert!(text.contains("documented typo"));
}

#[test]
fn schubert_dump_formats() {
    let out = run(&[
        "schubert", "dump", "--type", "B3", "--parabolic", "2", "--basis", "epsilon",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["type"], "B3");
    assert_eq!(doc["basis"], "epsilon");
    assert_eq!(doc["classes"].as_array().unwrap().len(), 12);

    let out = run(&[
        "schubert", "dump", "--type", "A2", "--parabolic", "1", "--basis", "x",
        "--format", "text",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("[X_w] basis"));
}

#[test]
fn horn_and_lr() {
    let out = run(&["horn", "set", "--r", "2", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("triples"));

    let out = run(&["lr", "--lam", "2,1", "--mu", "2,1", "--nu", "3,2,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");

    let dir = std::env::temp_dir().join("eigencones-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let triple = dir.join("triple.json");
    std::fs::write(
        &triple,
        r#"{"a1": [1, -1], "a2": [1, -1], "a3": [3, -3]}"#,
    )
    .unwrap();
    let out = run(&["horn", "member", "--file", triple.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not a member"));
}

#[test]
fn horn_cache_dir() {
    let dir = std::env::temp_dir().join("eigencones-horn-cache");
    let _ = std::fs::remove_dir_all(&dir);
    let out = Command::new(bin())
        .args(["horn", "set", "--r", "1", "--n", "3"])
        .env("EIGENCONES_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(Path::new(&dir).join("horn_1_3_strict.json").exists());
    // Second run reads the cache and prints the same thing.
    let again = Command::new(bin())
        .args(["horn", "set", "--r", "1", "--n", "3"])
        .env("EIGENCONES_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn tensor_commands() {
    let out = run(&["tensor", "mult", "--type", "C2", "--lam", "0,1", "--mu", "0,1", "--nu", "0,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = run(&["tensor", "rigidity", "--r", "2", "--bound", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 violations"));

    let out = run(&["tensor", "satscan", "--type", "C2", "--bound", "1", "--dmax", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lambda,mu,nu,restoring_multipliers"));
    assert!(text.contains("0 1,0 1,0 1,2 4"));
}
