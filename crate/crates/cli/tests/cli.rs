use std::process::{Command, Output};

use serde_json::Value;

fn squarint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squarint"))
        .args(args)
        .env_remove("SQUARINT_PROFILE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn list_has_a_row_per_identity() {
    let o = squarint(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(rows.len() >= 30);
    let row = rows.iter().find(|r| r.starts_with("T5-DIRICHLET ")).unwrap();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cols, ["T5-DIRICHLET", "frullani/dirichlet", "asserted", "1e-9"]);
}

#[test]
fn list_filter_keeps_only_matches() {
    let out = stdout(&squarint(&["list", "--filter", "T9-*"]));
    let ids: Vec<&str> = out.lines().skip(1).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert!(!ids.is_empty());
    assert!(ids.iter().all(|id| id.starts_with("T9-")), "{ids:?}");
}

/// Checks the report fields and their types.
fn check_report_schema(r: &Value) {
    assert!(r["id"].is_string());
    for side in ["lhs", "rhs"] {
        assert!(r[side]["re"].is_f64() && r[side]["im"].is_f64(), "{side}: {r}");
    }
    assert!(r["absError"].is_f64());
    assert!(r["relError"].is_f64() || r["relError"].is_null());
    assert!(["PASS", "FAIL", "FLAGGED"].contains(&r["status"].as_str().unwrap()));
    assert!(r["engine"]["method"].is_string());
    assert!(r["engine"]["evals"].is_u64());
    assert!(r["engine"]["estimate"].is_f64());
    assert!(r["seed"].is_u64());
    assert!(["quick", "thorough"].contains(&r["profile"].as_str().unwrap()));
}

#[test]
fn verify_json_report() {
    let o = squarint(&["verify", "--id", "T1-EX3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    check_report_schema(r);
    assert_eq!(r["id"], "T1-EX3");
    assert_eq!(r["status"], "PASS");
    let lhs = r["lhs"]["re"].as_f64().unwrap();
    assert!((lhs - (2187.0f64 / 512.0).ln() / 50.0).abs() < 1e-7);
    // Shortest round-trip decimals survive text exactly.
    let text = serde_json::to_string(&r["lhs"]["re"]).unwrap();
    assert_eq!(text.parse::<f64>().unwrap(), lhs);
}

#[test]
fn sine_parts_pass() {
    let o = squarint(&["verify", "--filter", "RAM-*-SIN*", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for r in reports {
        check_report_schema(r);
        assert_eq!(r["status"], "PASS");
        assert!(r["lhs"]["re"].as_f64().unwrap().abs() < 1e-10);
    }
}

#[test]
fn unknown_id_is_a_usage_error() {
    let o = squarint(&["verify", "--id", "NOPE"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown identity `NOPE`"));
}

#[test]
fn flagged_records_exit_zero() {
    let o = squarint(&["verify", "--filter", "RAM-1-*"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("FLAGGED RAM-1-X3-HALF")));
    assert!(out.contains("0 FAIL"));
}

#[test]
fn eval_halfline_example() {
    let o = squarint(&["eval", "halfline", "(1,1,1)(2,1,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap().ends_with("0.34657359 - 0.34657359i"));
}

#[test]
fn eval_cube_example() {
    let o = squarint(&["eval", "cube", "k=2; mu=0,0; logw=1,1; j=1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["value"]["re"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!(v["engine"]["estimate"].as_f64().unwrap() < 1e-8);
}

#[test]
fn eval_divergent_and_malformed() {
    let o = squarint(&["eval", "halfline", "(1,1,1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("divergent"));
    let o = squarint(&["eval", "halfline", "(1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error at byte"));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let o = squarint(&["verify", "--id", "T5-DIRICHLET", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn report_file_and_seeded_repeat() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let p = dir.path().join(name);
        let o = squarint(&["verify", "--filter", "T1-*", "--seed", "11", "--format", "json", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        std::fs::read(p).unwrap()
    };
    let (a, b) = (run("a.json"), run("b.json"));
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["seed"], 11);
}

#[test]
fn profile_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_squarint"))
        .args(["verify", "--id", "T5-LOG", "--format", "json"])
        .env("SQUARINT_PROFILE", "thorough")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["profile"], "thorough");
    assert_eq!(v["reports"][0]["tolerance"].as_f64().unwrap(), 1e-6 / 100.0);
}

#[test]
fn bad_flag_values_are_usage_errors() {
    assert_eq!(squarint(&["verify", "--profile", "slow"]).status.code(), Some(2));
    assert_eq!(squarint(&["verify", "--budget-points", "0"]).status.code(), Some(2));
    assert_eq!(squarint(&["list", "--filter", "[unclosed"]).status.code(), Some(2));
}

#[test]
fn registry_export_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("registry.sx");
    let o = squarint(&["registry", "export", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = squarint(&["registry", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let n: usize = out.split(": ").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
    assert!(out.contains(&format!("{n} identical")), "{out}");

    std::fs::write(&path, "(identity \"X\" (loc \"a\") (tol 0) (trust asserted) (desc \"\") (lhs (const 1)) (rhs (const 1)))\n").unwrap();
    assert_eq!(squarint(&["registry", "check", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(squarint(&["registry", "check", dir.path().join("nope").to_str().unwrap()]).status.code(), Some(3));
}
