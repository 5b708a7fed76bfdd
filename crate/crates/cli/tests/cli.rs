use std::process::{Command, Output};

use serde_json::Value;

fn goppa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goppa"))
        .args(args)
        .output()
        .unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let out = goppa(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn json_err(args: &[&str]) -> Value {
    let out = goppa(args);
    assert_eq!(out.status.code(), Some(1), "{args:?}");
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn curve_reports() {
    let v = json_ok(&["curve", "--p", "3", "--e", "1", "--s", "2"]);
    assert_eq!(v["q"], 3);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["affine_points"], 15);
    assert_eq!(v["total"], 16);
    assert_eq!(v["maximal"], true);
    assert_eq!(
        json_ok(&["curve", "--p", "5", "--e", "1", "--s", "3"])["total"],
        66
    );
    let e = json_err(&["curve", "--p", "5", "--e", "1", "--s", "4"]);
    assert_eq!(e["error"]["kind"], "invalid_curve");
    assert_eq!(
        json_err(&["curve", "--p", "4"])["error"]["kind"],
        "invalid_field"
    );
}

#[test]
fn curve_points_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pts.csv");
    json_ok(&["curve", "--p", "3", "--points", path.to_str().unwrap()]);
    let csv = std::fs::read_to_string(path).unwrap();
    assert_eq!(csv.lines().next(), Some("x,y"));
    assert_eq!(csv.lines().count(), 16);
}

#[test]
fn code_reports() {
    let v = json_ok(&["code", "--p", "3", "--m", "4"]);
    assert_eq!(
        (v["n"].as_u64(), v["k"].as_u64(), v["designed_d"].as_i64()),
        (Some(15), Some(4), Some(11))
    );
    assert_eq!(v["d"], 11);
    assert_eq!(v["d_exact"], true);
    let z = json_ok(&["code", "--p", "3", "--m", "-1"]);
    assert_eq!(z["k"], 0);
    assert_eq!(z["paper_case"], 1);
    assert!(z["d"].is_null());
    let five = json_ok(&["code", "--p", "5", "--m", "6", "--distance", "bound"]);
    assert_eq!(five["agrees_with_paper"], false);
    assert_eq!(
        (five["k"].as_u64(), five["formula_value"].as_i64()),
        (Some(4), Some(3))
    );
    assert_eq!(five["d_exact"], false);
    let guard = json_err(&["code", "--p", "3", "--m", "9", "--distance", "exhaustive"]);
    assert_eq!(guard["error"]["kind"], "enumeration_guard");
    assert_eq!(guard["error"]["limit"], 10_000_000);
}

#[test]
fn code_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    json_ok(&[
        "code",
        "--p",
        "3",
        "--m",
        "4",
        "--export",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("9 15 4"));
    let rows: Vec<Vec<u32>> = lines
        .map(|l| l.split(' ').map(|t| t.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    assert!(rows
        .iter()
        .all(|r| r.len() == 15 && r.iter().all(|&a| a < 9)));
}

#[test]
fn scan_csv() {
    let out = goppa(&["scan", "--p", "3", "--m-max", "16"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("m,k,designed_d,self_orthogonal,paper_predicts")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 17);
    for r in &rows {
        let m: i64 = r[0].parse().unwrap();
        assert_eq!(r[4] == "true", m <= 7);
    }
    let golden = include_str!("../../core/tests/golden/scan_q3.csv");
    assert_eq!(text, golden);
    assert_eq!(
        json_err(&["scan", "--p", "3", "--m-max", "18"])["error"]["kind"],
        "out_of_range"
    );
}

#[test]
fn quantum_report_and_refusal() {
    let v = json_ok(&["quantum", "--p", "3", "--m", "0"]);
    assert_eq!(
        (v["n"].as_u64(), v["logical"].as_u64(), v["k"].as_u64()),
        (Some(15), Some(13), Some(1))
    );
    assert_eq!(v["commutes"], true);
    assert_eq!(v["stabilizer_rank"], 2);
    let e = json_err(&["quantum", "--p", "3", "--m", "14"]);
    assert_eq!(e["error"]["kind"], "not_self_orthogonal");
    assert!(e["error"]["gram_nonzero"].as_u64().unwrap() > 0);
    let e = json_err(&["quantum", "--p", "5", "--m", "18"]);
    assert_eq!(e["error"]["kind"], "not_self_orthogonal");
}

#[test]
fn simulate_is_deterministic() {
    let args = [
        "simulate", "--p", "3", "--m", "0", "--prob", "0.05", "--trials", "1000", "--seed", "2024",
    ];
    let a = goppa(&args);
    let b = goppa(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["word_errors"], 0);
    assert_eq!(v["trials"], 1000);
    assert_eq!(v["channel"]["rng"], "ChaCha8Rng::seed_from_u64");
    let clean = json_ok(&[
        "simulate", "--p", "3", "--m", "4", "--kind", "erasure", "--prob", "0", "--trials", "50",
    ]);
    assert_eq!(clean["word_errors"], 0);
    assert_eq!(
        json_err(&["simulate", "--p", "3", "--m", "0", "--prob", "1.5"])["error"]["kind"],
        "out_of_range"
    );
}

#[test]
fn table_output() {
    let out = goppa(&["curve", "--p", "3", "--table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("total") && l.ends_with("16")));
}
