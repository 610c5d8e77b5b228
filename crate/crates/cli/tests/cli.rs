use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn symchar(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symchar"))
        .args(args)
        .env("SYMCHAR_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(cache: &Path, args: &[&str]) -> String {
    let out = symchar(cache, args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn code(cache: &Path, args: &[&str]) -> i32 {
    symchar(cache, args).status.code().unwrap()
}

#[test]
fn chartable_csv_s3() {
    let dir = tempfile::tempdir().unwrap();
    let text = ok(dir.path(), &["chartable", "3", "--format", "csv"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda\\mu,3,2.1,1.1.1");
    assert_eq!(lines[1], "3,1,1,1");
    assert_eq!(lines[2], "2.1,-1,0,2");
    assert_eq!(lines[3], "1.1.1,1,-1,1");
    assert_eq!(lines.len(), 4);
}

#[test]
fn chartable_trivial_group() {
    let dir = tempfile::tempdir().unwrap();
    let v: Value = serde_json::from_str(&ok(dir.path(), &["chartable", "1", "--format", "json"])).unwrap();
    assert_eq!(v["order"], serde_json::json!([[1]]));
    assert_eq!(v["values"], serde_json::json!(["1"]));
}

#[test]
fn chartable_json_roundtrips_and_hits_cache() {
    let dir = tempfile::tempdir().unwrap();
    let first = ok(dir.path(), &["chartable", "7", "--format", "json"]);
    assert!(dir.path().join("chartable_v1_7.json").exists());
    let second = ok(dir.path(), &["chartable", "7", "--format", "json", "--workers", "1"]);
    assert_eq!(first, second);
    let table = symchar::cache::table_from_json(&first).unwrap();
    assert_eq!(table.dim(), 15);
    assert_eq!(table, symchar::MnEngine::new().table(7, 1).unwrap());
}

#[test]
fn chartable_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = ok(dir.path(), &["chartable", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 6);
}

#[test]
fn eval_methods_agree() {
    let dir = tempfile::tempdir().unwrap();
    for method in ["mn", "formula", "recursion"] {
        assert_eq!(ok(dir.path(), &["eval", "--lambda", "6,1", "--mu", "7", "--method", method]), "-1\n");
    }
    assert_eq!(ok(dir.path(), &["eval", "--lambda", "5,2", "--mu", "7"]), "0\n");
    assert_eq!(ok(dir.path(), &["eval", "--lambda", "7,4", "--mu", "5,3,2,1"]), "-1\n");
}

#[test]
fn eval_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(dir.path(), &["eval", "--lambda", "3", "--mu", "2,1,1"]), 2);
    assert_eq!(code(dir.path(), &["eval", "--lambda", "3,0", "--mu", "3"]), 2);
    assert_eq!(code(dir.path(), &["eval", "--lambda", "3,x", "--mu", "3"]), 2);
    assert_eq!(code(dir.path(), &["eval", "--lambda", "2,2,2", "--mu", "6", "--method", "formula"]), 2);
    assert_eq!(code(dir.path(), &["eval", "--lambda", "2,2,2", "--mu", "6", "--method", "recursion"]), 2);
    let out = symchar(dir.path(), &["eval", "--lambda", "3", "--mu", "2,1,1"]);
    assert!(out.stdout.is_empty());
}

#[test]
fn vanishing_pairs_reports() {
    let dir = tempfile::tempdir().unwrap();
    let v: Value =
        serde_json::from_str(&ok(dir.path(), &["vanishing-pairs", "7", "--format", "json"])).unwrap();
    assert_eq!(v["n"], 7);
    assert_eq!(v["k_value"], 2);
    assert_eq!(v["pairs"], serde_json::json!([[[7], [6, 1]]]));
    assert_eq!(v["matches_theorem"], true);
    assert_eq!(v["vacuous"], false);

    let unpruned: Value = serde_json::from_str(&ok(
        dir.path(),
        &["vanishing-pairs", "7", "--format", "json", "--no-prune"],
    ))
    .unwrap();
    assert_eq!(unpruned["pairs"], v["pairs"]);
    assert_eq!(unpruned["pruning_stats"]["pruned_parity"], 0);

    let v3: Value =
        serde_json::from_str(&ok(dir.path(), &["vanishing-pairs", "3", "--format", "json"])).unwrap();
    assert_eq!(v3["matches_theorem"], Value::Null);
    assert_eq!(v3["k_value"], 1);

    let v2: Value =
        serde_json::from_str(&ok(dir.path(), &["vanishing-pairs", "2", "--format", "json"])).unwrap();
    assert_eq!(v2["vacuous"], true);

    assert_eq!(code(dir.path(), &["vanishing-pairs", "0"]), 2);
}

#[test]
fn structure_constants() {
    let dir = tempfile::tempdir().unwrap();
    let text = ok(dir.path(), &["structure-constant", "--mu", "2,1", "--nu", "2,1", "--gamma", "1^3", "--verify"]);
    assert_eq!(text, "character-sum: 3\nbrute-force: 3\n");
    assert_eq!(ok(dir.path(), &["structure-constant", "--mu", "2,1,1", "--nu", "2,1,1", "--gamma", "2,1,1"]), "0\n");
    assert_eq!(ok(dir.path(), &["structure-constant", "--mu", "4", "--nu", "4", "--gamma", "2,2"]), "2\n");
}

#[test]
fn structure_constant_limits() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["structure-constant", "--mu", "9", "--nu", "9", "--gamma", "9", "--verify"];
    assert_eq!(code(dir.path(), &args), 4);
    assert_eq!(code(dir.path(), &["structure-constant", "--mu", "3", "--nu", "2,1", "--gamma", "2,2"]), 2);
    // the limit flag is honoured
    assert_eq!(
        code(dir.path(), &["--brute-force-limit", "4", "structure-constant", "--mu", "5", "--nu", "5", "--gamma", "5", "--verify"]),
        4
    );
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let text = ok(dir.path(), &["verify", "--suite", "all", "--n-min", "1", "--n-max", "7"]);
    assert!(!text.contains("FAIL"));
    assert!(text.trim_end().ends_with('s'));
    assert_eq!(code(dir.path(), &["verify", "--n-min", "5", "--n-max", "3"]), 2);
    assert_eq!(code(dir.path(), &["verify", "--suite", "bogus", "--n-min", "1", "--n-max", "3"]), 2);
}

#[test]
fn corrupt_cache_is_an_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("chartable_v1_5.json"), "{not json").unwrap();
    let out = symchar(dir.path(), &["chartable", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn workers_flag_validated() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(dir.path(), &["--workers", "0", "chartable", "3"]), 2);
    let a = ok(dir.path(), &["--workers", "1", "vanishing-pairs", "8", "--format", "json"]);
    let b = ok(dir.path(), &["--workers", "4", "vanishing-pairs", "8", "--format", "json"]);
    assert_eq!(a, b);
}
