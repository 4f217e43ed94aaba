//! End-to-end checks of the `circmagic` binary: exit codes, JSON-line
//! shape, and the labeling file round trip.

use serde_json::Value;
use std::process::Command;

fn circmagic(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_circmagic"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn parse_lines(stdout: &str) -> Vec<Value> {
    stdout
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).expect("each stdout line is a JSON record"))
        .collect()
}

#[test]
fn admissible_emits_one_self_describing_record() {
    let (code, stdout, _) = circmagic(&["admissible", "24:1,2,3"]);
    assert_eq!(code, 0);
    let records = parse_lines(&stdout);
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert_eq!(r["schema"], 1);
    assert_eq!(r["kind"], "admissible");
    let js: Vec<i64> = r["payload"]["admissible"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["j"].as_i64().unwrap())
        .collect();
    assert_eq!(js, vec![3, 8, 9, 15, 16, 21]);
}

#[test]
fn decide_exit_codes_cover_yes_no_unknown_usage() {
    assert_eq!(circmagic(&["decide", "1540:2,152,385"]).0, 0);
    assert_eq!(circmagic(&["decide", "7:1,2,3"]).0, 1);
    assert_eq!(
        circmagic(&["decide", "24:1,2,3", "--budget-nodes", "2"]).0,
        3
    );
    let (code, _, stderr) = circmagic(&["decide", "24:1,2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
}

#[test]
fn label_verify_round_trip_on_disk() {
    let dir = std::env::temp_dir().join("circmagic-bin-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ml6.json");
    let (code, stdout, _) = circmagic(&["label", "Ml[6]", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = &parse_lines(&stdout)[0];
    assert_eq!(r["payload"]["kappa"], 75);
    assert_eq!(r["payload"]["set"], "24:1,6,11");

    let (code, stdout, _) = circmagic(&["verify", "24:1,6,11", "--labeling", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(parse_lines(&stdout)[0]["payload"]["kappa"], 75);

    // the same labels on a different order-24 graph are not magic
    let (code, stdout, _) = circmagic(&["verify", "24:1,2,3", "--labeling", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(parse_lines(&stdout)[0]["payload"]["magic"], false);
}

#[test]
fn label_by_set_falls_back_to_search() {
    let (code, stdout, _) = circmagic(&["label", "24:1,2,3"]);
    assert_eq!(code, 0);
    let r = &parse_lines(&stdout)[0];
    assert_eq!(r["payload"]["source"], "search");
    assert_eq!(r["payload"]["kappa"], 75);
    // definitively non-magic input exits 1
    assert_eq!(circmagic(&["label", "18:1,5,7"]).0, 1);
}

#[test]
fn search_and_scan_records() {
    let (code, stdout, _) = circmagic(&["search", "12:1,3,5"]);
    assert_eq!(code, 0);
    assert_eq!(parse_lines(&stdout)[0]["payload"]["outcome"], "found");

    let (code, _, _) = circmagic(&["search", "15:1,2,4"]);
    assert_eq!(code, 1);

    let (code, stdout, _) = circmagic(&["scan", "--nmax", "10", "--jobs", "2"]);
    assert_eq!(code, 0);
    let records = parse_lines(&stdout);
    assert!(records.len() >= 4);
    for r in &records {
        assert_eq!(r["kind"], "scan");
        assert_ne!(r["payload"]["agree"], Value::Bool(false));
    }
}

#[test]
fn enumerate_table_format() {
    let (code, stdout, _) = circmagic(&["enumerate", "--n", "1540", "--families", "--format", "table"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("T1b[5,7,11]"));
    assert!(stdout.contains("9 family instances"));
}

#[test]
fn selftest_passes() {
    let (code, stdout, _) = circmagic(&["selftest"]);
    assert_eq!(code, 0, "selftest failed:\n{stdout}");
    let r = &parse_lines(&stdout)[0];
    assert_eq!(r["payload"]["failed"], 0);
}

#[test]
fn prefilter_non_existence_is_independent_of_the_hard_cap() {
    // kernel-based non-existence is theorem-backed, so lowering the cap
    // below the order must not turn it into a budget stop
    let out = Command::new(env!("CARGO_BIN_EXE_circmagic"))
        .args(["search", "15:1,2,4"])
        .env("CIRCMAGIC_HARD_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(
        String::from_utf8_lossy(&out.stdout).lines().next().unwrap(),
    )
    .unwrap();
    assert_eq!(v["payload"]["outcome"], "exhausted");
}
