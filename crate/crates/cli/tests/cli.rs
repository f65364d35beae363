use std::path::PathBuf;
use std::process::{Command, Output};

use amf_cli::commands::DIMS_HEADER;
use amf_cli::record::DatabaseRecord;
use serde_json::Value;

fn amf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amf"))
        .args(args)
        .env_remove("AMF_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(amf(&[]).status.code(), Some(2));
    assert_eq!(amf(&["basis", "--l", "9..3"]).status.code(), Some(2));
    assert_eq!(amf(&["hecke", "--l", "6", "--p", "4"]).status.code(), Some(2));
    assert_eq!(amf(&["--workers", "0", "dims"]).status.code(), Some(2));
    assert_eq!(amf(&["divide", "--by", "f3", "--poly", "x1^^2"]).status.code(), Some(2));
    assert_eq!(amf(&["cm-points", "--disc", "5"]).status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(amf(&["--help"]).status.code(), Some(0));
}

#[test]
fn empty_degree_gives_empty_records() {
    let o = amf(&["basis", "--l", "5", "--variant", "both-signs", "--format", "json"]);
    assert!(o.status.success());
    let records: Vec<DatabaseRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 2);
    assert!(records.iter().all(|r| r.dim == 0 && r.basis.is_empty()));
}

#[test]
fn minus_twelve_is_one_dimensional() {
    let o = amf(&["basis", "--l", "12", "--variant", "minus"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("l=12 : dim H_{12,-} = 1  [main]\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("f_{12,-}")).count(), 1);
}

#[test]
fn both_algorithms_agree() {
    let o = amf(&["basis", "--l", "3..12", "--algorithm", "both", "--format", "json"]);
    assert!(o.status.success());
    let records: Vec<DatabaseRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 20);
    assert!(records.iter().all(|r| r.algorithm == "main+ecoord" && r.is_consistent()));
}

#[test]
fn json_round_trip_and_determinism() {
    let args = ["basis", "--l", "6..9", "--format", "json"];
    let a = amf(&args);
    let b = amf(&["--workers", "1", "basis", "--l", "6..9", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout, "output depends on worker count");
    let emitted: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let records: Vec<DatabaseRecord> = serde_json::from_value(emitted.clone()).unwrap();
    assert_eq!(serde_json::to_value(&records).unwrap(), emitted);
    let reparsed: Vec<DatabaseRecord> = serde_json::from_str(&serde_json::to_string(&records).unwrap()).unwrap();
    assert_eq!(reparsed, records);
}

#[test]
fn dims_table_header() {
    let o = amf(&["dims", "--l-max", "12"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(DIMS_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r.ends_with("yes")));
    assert_eq!(
        rows[12].split_whitespace().take(4).collect::<Vec<_>>(),
        ["12", "3", "2", "1"]
    );
}

#[test]
fn hecke_t2_signs_at_six() {
    let o = amf(&["hecke", "--l", "6", "--p", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = v.to_string();
    assert!(text.contains(r#"[["1"]]"#), "{text}");
    assert!(text.contains(r#"[["-1"]]"#), "{text}");
}

#[test]
fn verify_x_fixture_passes() {
    let o = amf(&["verify", &fixture("x_forms.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_e_fixture_reports_single_relation() {
    let o = amf(&["verify", &fixture("e_forms.json")]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let failed: Vec<&str> = text.lines().filter(|l| l.trim_start().starts_with("FAIL ")).collect();
    assert_eq!(failed.len(), 1, "{text}");
    assert!(failed[0].contains("f_12+(2)"));
    assert!(failed[0].contains("[1/2048, 747/4096]"));
}

#[test]
fn congruence_sweep() {
    let o = amf(&["congruence", "--l", "4..40"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("certificates: 19 of 19"), "{text}");
    let pairs: Vec<&str> = text.lines().filter(|l| l.contains(" (b")).collect();
    assert_eq!(pairs.len(), 2, "{text}");
    assert!(pairs[0].starts_with("l=30 ") && pairs[1].starts_with("l=38 "));
}

#[test]
fn cm_points_for_minus_eleven() {
    let o = amf(&["cm-points", "--disc", "-11", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 24);
    assert!(points.iter().all(|p| p["sum_odd"] == Value::Bool(true)));
}

#[test]
fn divide_round_trip() {
    let o = amf(&["basis", "--l", "9", "--variant", "minus", "--format", "json"]);
    let records: Vec<DatabaseRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    let f9 = records[0].basis[0].poly.to_string();
    let d = amf(&["divide", "--by", "f6minus", "--poly", &f9]);
    assert!(d.status.success(), "{}", String::from_utf8_lossy(&d.stderr));
    let q = stdout(&d);
    assert!(!q.trim().is_empty());

    let bad = amf(&["divide", "--by", "f3", "--poly", "x1^3"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn export_db_writes_consistent_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("db.json");
    let p = path.to_string_lossy().into_owned();
    let o = amf(&["export-db", "--l", "3..8", "--hecke", "2,3", "--certificates", "--output", &p]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let records: Vec<DatabaseRecord> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(records.len(), 12);
    for r in &records {
        assert!(r.is_consistent());
        let primes = r.hecke.as_ref().map_or(0, Vec::len);
        assert_eq!(primes, if r.dim == 0 { 0 } else { 2 });
    }
    let certified: Vec<u32> = records.iter().filter(|r| r.certificate.is_some()).map(|r| r.l).collect();
    assert_eq!(certified, [4, 6, 8]);
}
