use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).env_remove("SCHUBERT_PRIME").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = schubert(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn enumerate_small_grassmannians() {
    let r = json(&["-g", "2", "4", "enumerate"]);
    assert_eq!(r["summary"]["problems"], 1);
    assert_eq!(r["rows"][0]["id"], "(1)^4");
    assert_eq!(r["rows"][0]["degree"], 2);

    let csv = ok(&["-g", "2", "5", "enumerate", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("id,degree,essential"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn degree_of_one_problem() {
    let r = json(&["degree", "-g", "2", "5", "-P", "(1)^6"]);
    assert_eq!(r["rows"][0]["degree"], 5);
    let r = json(&["-g", "4", "9", "degree", "-P", "(3)*(2,1,1)^3*(4,1)"]);
    assert_eq!(r["rows"][0]["degree"], 6);
    assert!(!schubert(&["-g", "2", "5", "degree", "-P", "(1)^5"]).status.success());
}

#[test]
fn prime_environment_is_validated_at_startup() {
    for bad in ["12", "two", "2", "-7"] {
        let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
            .args(["-g", "2", "4", "enumerate"])
            .env("SCHUBERT_PRIME", bad)
            .output()
            .unwrap();
        assert!(!out.status.success(), "accepted {bad}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("SCHUBERT_PRIME"));
    }
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["-g", "2", "4", "frobenius", "-P", "(1)^4", "-m", "50"])
        .env("SCHUBERT_PRIME", "101")
        .output()
        .unwrap();
    assert!(out.status.success());
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["config"]["prime"], 101);
}

#[test]
fn essential_scan_explains_reductions() {
    let r = json(&["-g", "3", "6", "essential-scan"]);
    let rows = r["rows"].as_array().unwrap();
    assert!(rows.iter().all(|row| row["essential"].as_bool().unwrap() == row["reduced_by"].is_null()));
    assert!(rows.iter().any(|row| !row["reduced_by"].is_null()));
    assert_eq!(r["summary"]["problems"], rows.len());
}

#[test]
fn frobenius_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let [a, b, c] = ["a.json", "b.json", "c.json"].map(|f| dir.path().join(f));
    let run = |seed: &str, out: &Path| {
        ok(&["-g", "2", "4", "frobenius", "-P", "(1)^4", "-m", "300", "--seed", seed, "--workers", "2", "--out", out.to_str().unwrap()])
    };
    run("5", &a);
    run("5", &b);
    run("6", &c);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let same = schubert(&["diff", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(same.status.success() && same.stdout.is_empty());
    let other = schubert(&["diff", a.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(other.status.code(), Some(1));
    let text = String::from_utf8(other.stdout).unwrap();
    assert!(text.contains("$.config.seed"));
    assert!(text.contains("histogram"));

    // the group verdict does not depend on the seed
    let (ra, rc) = (read(&a), read(&c));
    assert_eq!(ra["summary"]["verdict"]["group"], rc["summary"]["verdict"]["group"]);
    assert_eq!(ra["summary"]["accepted"], 300);
}

#[test]
fn frobenius_csv_histogram() {
    let csv = ok(&["-g", "2", "5", "frobenius", "-P", "(1)^6", "-m", "2000", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("cycle_type,count,fraction_of_group_order"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.iter().map(|r| r[1].parse::<u64>().unwrap()).sum::<u64>(), 2000);
    let scaled: f64 = rows.iter().map(|r| r[2].parse::<f64>().unwrap()).sum();
    assert!((scaled - 120.0).abs() < 0.01, "{scaled}");
    assert!(rows.iter().any(|r| r[0] == "5"));
}

#[test]
fn vakil_scan_resumes_from_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.json");
    let resumed = dir.path().join("resumed.json");
    let base = ["-g", "3", "6", "--workers", "2", "vakil-scan"];
    ok(&[&base[..], &["--out", full.to_str().unwrap()]].concat());
    let report = read(&full);
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(report["summary"]["problems"], rows.len());
    assert!(!dir.path().join("full.json.checkpoint").exists());

    // a checkpoint holding the first rows of the same run
    let partial = serde_json::json!({
        "command": "vakil-scan",
        "config": report["config"],
        "rows": rows[..7],
    });
    let cp = dir.path().join("resumed.json.checkpoint");
    std::fs::write(&cp, partial.to_string()).unwrap();
    let out = schubert(&[&base[..], &["--out", resumed.to_str().unwrap(), "--resume", "--checkpoint-every", "5"]].concat());
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("resuming after 7"));
    assert_eq!(std::fs::read(&full).unwrap(), std::fs::read(&resumed).unwrap());
    assert!(!cp.exists());

    // a checkpoint from another configuration is refused
    let mut wrong = partial.clone();
    wrong["config"]["seed"] = 99.into();
    std::fs::write(&cp, wrong.to_string()).unwrap();
    let out = schubert(&[&base[..], &["--out", resumed.to_str().unwrap(), "--resume"]].concat());
    assert!(!out.status.success());
}

#[test]
fn classify_enriched_in_gr49() {
    let r = json(&["-g", "4", "9", "classify-enriched"]);
    assert_eq!(r["summary"]["total"], 149);
    let first = &r["rows"][0];
    for key in ["problem", "family", "base", "fiber", "degree"] {
        assert!(!first[key].is_null(), "{key}");
    }
    let g = &first["predicted_group"];
    assert_eq!(g["kind"], "wreath");
    assert!(g["m"].is_u64() && g["f"].is_u64() && g["order"].is_u64());

    let r = json(&["-g", "4", "9", "classify-enriched", "--family", "IIc"]);
    assert_eq!(r["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn pipeline_marks_gr48_enriched_imprimitive() {
    let r = json(&["-g", "4", "8", "pipeline"]);
    let s = &r["summary"];
    assert_eq!(s["enriched"], 14);
    assert_eq!(s["enriched_imprimitive"], 14);
    let rows = r["rows"].as_array().unwrap();
    let count = |f: &dyn Fn(&Value) -> bool| rows.iter().filter(|x| f(x)).count();
    assert_eq!(s["problems"], rows.len());
    assert_eq!(s["inconclusive"], count(&|x| x["vakil"]["verdict"] == "Inconclusive"));
    assert_eq!(count(&|x| x["fibration"]["family"] == "Derksen"), 1);
}

#[test]
fn pipeline_with_nothing_to_do_is_empty() {
    let r = json(&["-g", "1", "2", "pipeline"]);
    assert_eq!(r["rows"].as_array().unwrap().len(), 0);
    assert_eq!(r["summary"]["problems"], 0);
}

#[test]
fn pipeline_samples_inconclusive_problems() {
    let r = json(&["-g", "2", "4", "pipeline", "--frobenius", "-m", "100"]);
    // (1)^4 is certified, so nothing is sampled
    assert_eq!(r["summary"]["frobenius_runs"], 0);
    let r = json(&["-g", "3", "6", "pipeline", "--frobenius", "-m", "100", "--checkpoint-every", "10"]);
    let rows = r["rows"].as_array().unwrap();
    let sampled: Vec<&Value> = rows.iter().filter(|x| !x["frobenius"].is_null()).collect();
    assert_eq!(sampled.len(), r["summary"]["inconclusive"].as_u64().unwrap() as usize);
    assert!(sampled.iter().all(|x| x["frobenius"]["accepted"] == 100));
}

#[test]
fn missing_grassmannian_is_an_error() {
    let out = schubert(&["enumerate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("-g K N"));
}
