use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shifted-burnside"))
        .args(args)
        .env_remove("BE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn numbers(v: &Value) -> [u64; 4] {
    ["gen", "st_prime", "dim", "prod"].map(|k| v[k].as_u64().unwrap())
}

#[test]
fn c4_q8_text_table() {
    let text = stdout(&["report", "--g", "C4", "--t", "Q8"]);
    for line in ["Gen: 58", "St': 46", "Dim: 52", "Prod: 32"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
    }
}

#[test]
fn c4_c4_json() {
    let v = json(&["report", "--g", "C4", "--t", "C4", "--format", "json"]);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["g"], "C4");
    assert_eq!(numbers(&v), [22, 16, 16, 14]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut want = ["schema", "g", "t", "gen", "st_prime", "dim", "prod", "per_h", "timings_ms"];
    want.sort();
    let mut got = keys.clone();
    got.sort();
    assert_eq!(got, want);
    for h in v["per_h"].as_array().unwrap() {
        for k in ["h", "candidate_classes", "pairs", "factored_here"] {
            assert!(!h[k].is_null(), "per_h entry lacks {k}");
        }
    }
    for k in ["lattice", "scan", "rank"] {
        assert!(v["timings_ms"][k].is_u64());
    }
}

#[test]
fn coprime_pair_has_equal_counts() {
    let v = json(&["report", "--g", "C3", "--t", "C4", "--format", "json"]);
    assert_eq!(numbers(&v), [6; 4]);
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&["report", "--g", "S3", "--t", "C2"]);
    let v = json(&["report", "--g", "S3", "--t", "C2", "--format", "json"]);
    let from_text: Vec<u64> = ["Gen: ", "St': ", "Dim: ", "Prod: "]
        .iter()
        .map(|p| text.lines().find_map(|l| l.strip_prefix(p)).unwrap().parse().unwrap())
        .collect();
    assert_eq!(from_text, numbers(&v).to_vec());
}

#[test]
fn json_round_trips() {
    let raw = stdout(&["report", "--g", "V4", "--t", "C2", "--format", "json"]);
    let v: Value = serde_json::from_str(&raw).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
}

#[test]
fn threads_and_modes_do_not_change_numbers() {
    let base = json(&["report", "--g", "C4", "--t", "Q8", "--format", "json", "--threads", "1"]);
    for extra in [&["--threads", "2"][..], &["--threads", "3"], &["--fast"]] {
        let mut args = vec!["report", "--g", "C4", "--t", "Q8", "--format", "json"];
        args.extend_from_slice(extra);
        let v = json(&args);
        assert_eq!(numbers(&v), numbers(&base), "{extra:?}");
    }
    let one = json(&["report", "--g", "C4", "--t", "Q8", "--format", "json", "--threads", "1"]);
    assert_eq!(one["per_h"], base["per_h"]);
}

#[test]
fn cache_dir_changes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let plain = json(&["report", "--g", "D8", "--t", "C2", "--format", "json"]);
    for _ in 0..2 {
        let cached = json(&["report", "--g", "D8", "--t", "C2", "--format", "json", "--cache-dir", path]);
        assert_eq!(numbers(&cached), numbers(&plain));
        assert_eq!(cached["per_h"], plain["per_h"]);
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn catalog_listing() {
    let text = stdout(&["catalog"]);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert!(rows.iter().any(|r| r[0] == "Q8" && r[1] == "8"));
    let order8: Vec<&str> = rows.iter().filter(|r| r[1] == "8").map(|r| r[0]).collect();
    assert_eq!(order8.len(), 5, "{order8:?}");
    let small = rows.iter().filter(|r| r[1].parse::<usize>().unwrap() <= 15).count();
    assert_eq!(small, 28);
}

#[test]
fn unknown_group_fails_with_catalog() {
    let out = run(&["report", "--g", "C99", "--t", "C1"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("C99") && err.contains("Q8"), "{err}");
}

#[test]
fn verify_suite_passes_and_rejects_unknown() {
    let text = stdout(&["verify", "--suite", "star-axioms", "--seed", "7"]);
    assert!(text.contains("PASS"), "{text}");
    assert!(!run(&["verify", "--suite", "nope"]).status.success());
}
