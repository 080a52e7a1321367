//! End-to-end checks of the binary: exit codes, determinism, config file
//! precedence, and the verify driver.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cuspidal"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn roots_counts() {
    let out = run(&["roots", "--cartan", "D4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 12);
    let out = run(&["roots", "--cartan", "A2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 3);
}

#[test]
fn words_a2_emits_two() {
    let out = run(&["words", "--cartan", "A2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["truncated"], false);
    assert_eq!(v["words"][0], serde_json::json!([1, 2, 1]));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["roots", "--cartan", "B7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["pbw", "--cartan", "A2"]); // missing --weight
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["roots", "--no-such-flag"]); // clap usage error
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_word_exits_2() {
    let out = run(&["pbw", "--cartan", "A2", "--word", "1,1,2", "--weight", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["gbasis", "--cartan", "A2", "--weight", "2,2", "--word", "1,2,1"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_a2_passes() {
    let out = run(&["verify", "--cartan", "A2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 9);
    for r in reports {
        assert_ne!(r["status"], "Fail", "{r}");
    }
    // summary output carries no timing, so it is byte-stable
    let again = run(&["verify", "--cartan", "A2"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn config_file_flags_win() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("cuspidal_cli_test_config.txt");
    std::fs::write(&path, "cartan=A3\ncap=1\n").unwrap();
    // config supplies cartan
    let out = run(&["words", "--config", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cartan"], "A3");
    assert_eq!(v["truncated"], true); // cap=1 from the file
    // explicit flag beats the file
    let out = run(&["words", "--config", path.to_str().unwrap(), "--cartan", "A2", "--cap", "10"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cartan"], "A2");
    assert_eq!(v["count"], 2);
    std::fs::remove_file(&path).ok();
}

#[test]
fn qdata_detects_violations() {
    let out = run(&["qdata", "--cartan", "A2", "--arrows", "1>2", "--phi", "0,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"].as_array().unwrap().len(), 1);
}

#[test]
fn output_file_flag() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("cuspidal_cli_test_roots.json");
    let out = run(&["roots", "--cartan", "A2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], 3);
    std::fs::remove_file(&path).ok();
}
