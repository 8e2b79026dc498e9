use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_regmatch"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every stdout line is JSON"))
        .collect()
}

const PETERSEN: &str = "IheA@GUAo";

#[test]
fn mu_of_c5() {
    let out = run(&["mu"], "Dhc\n");
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["record"], "mu");
    assert_eq!(r[0]["mu"], 2);
    assert_eq!(r[0]["matching"].as_array().unwrap().len(), 2);
}

#[test]
fn alpha_of_k4() {
    let r = records(&run(&["alpha"], "C~\n"));
    assert_eq!(r[0]["alpha"], 1);
    assert_eq!(r[0]["witness"].as_array().unwrap().len(), 1);
}

#[test]
fn decompose_c5() {
    let r = records(&run(&["decompose"], "Dhc\n"));
    assert_eq!(r[0]["d"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(r[0]["a"], serde_json::json!([]));
    assert_eq!(r[0]["c"], serde_json::json!([]));
    assert_eq!(r[0]["components"], serde_json::json!([[0, 1, 2, 3, 4]]));
}

#[test]
fn check_reports_and_skips() {
    let out = run(&["check"], &format!("Dhc\n{PETERSEN}\nCF\n"));
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 3);
    assert_eq!(r[0]["agree"], true);
    assert_eq!(r[0]["structural_verdict"], true);
    assert_eq!(r[0]["direct_verdict"], true);
    assert_eq!(r[1]["agree"], true);
    assert_eq!(r[1]["structural_verdict"], false);
    assert_eq!(r[1]["direct_verdict"], false);
    assert_eq!(r[2]["record"], "skip");
    assert_eq!(r[2]["reason"], "not regular");
    // C5 has degree 2.
    assert!(String::from_utf8_lossy(&out.stderr).contains("notice"));
}

#[test]
fn disconnected_is_skipped() {
    // Two disjoint triangles.
    let two_triangles = regmatch::to_graph6(
        &regmatch::Graph::build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
    );
    let r = records(&run(&["check"], &format!("{two_triangles}\n")));
    assert_eq!(r[0]["reason"], "disconnected");
}

#[test]
fn parse_errors_are_per_line() {
    let out = run(&["mu"], "Dhc\nnot graph6!\n\nC~\n");
    assert_eq!(out.status.code(), Some(2));
    let r = records(&out);
    assert_eq!(r.len(), 3);
    assert_eq!(r[1]["record"], "error");
    assert_eq!(r[1]["line"], 2);
    assert_eq!(r[2]["line"], 4);
    assert_eq!(r[2]["mu"], 2);
}

#[test]
fn files_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    let output = dir.path().join("out.jsonl");
    std::fs::write(&input, "Dhc\nC~\n").unwrap();
    let out = run(
        &[
            "alpha",
            "--in",
            input.to_str().unwrap(),
            "--out",
            output.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&output).unwrap();
    let alphas: Vec<Value> = written
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["alpha"].clone())
        .collect();
    assert_eq!(alphas, vec![Value::from(2), Value::from(1)]);
}

#[test]
fn missing_input_file_exits_2() {
    let out = run(&["mu", "--in", "/nonexistent/graphs.g6"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_exhaustive_cubic_8() {
    let out = run(&["verify", "--n", "8", "--r", "3", "--exhaustive"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.first().unwrap()["record"], "header");
    let summary = r.last().unwrap();
    assert_eq!(summary["record"], "summary");
    // 19355 labeled cubic graphs on 8 vertices, 35 of them two disjoint K4s.
    assert_eq!(summary["generated"], 19355);
    assert_eq!(summary["filtered_disconnected"], 35);
    assert_eq!(summary["processed"], 19320);
    assert_eq!(summary["disagreements"], 0);
    assert_eq!(summary["exit_status"], 0);
}

#[test]
fn verify_all_records_matches_summary() {
    let out = run(&["verify", "--n", "6", "--r", "3", "--all-records"], "");
    let r = records(&out);
    let audits: Vec<_> = r.iter().filter(|v| v["record"] == "audit").collect();
    let summary = r.last().unwrap();
    assert_eq!(audits.len() as u64, summary["processed"].as_u64().unwrap());
    assert_eq!(summary["audit_records"], audits.len());
    let equal = audits
        .iter()
        .filter(|a| a["report"]["direct_verdict"] == true)
        .count();
    assert_eq!(summary["equal"], equal);
}

#[test]
fn verify_parity_error() {
    let out = run(&["verify", "--n", "9", "--r", "3"], "");
    assert_eq!(out.status.code(), Some(2));
    let r = records(&out);
    assert_eq!(r[1]["record"], "error");
    assert_eq!(r.last().unwrap()["exit_status"], 2);
}

#[test]
fn verify_capacity_error() {
    let out = run(&["verify", "--n", "14", "--r", "3", "--exhaustive"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_random_is_reproducible() {
    let args = [
        "verify",
        "--n",
        "12",
        "--r",
        "3",
        "--random",
        "--count",
        "500",
        "--seed",
        "7",
        "--all-records",
    ];
    let first = run(&args, "");
    let second = run(&args, "");
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let summary = records(&first).pop().unwrap();
    assert_eq!(summary["generated"], 500);
    assert_eq!(summary["disagreements"], 0);
}

#[test]
fn verify_ingests_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("mixed.g6");
    std::fs::write(&input, format!("Dhc\n{PETERSEN}\nCF\n")).unwrap();
    let out = run(&["verify", "--in", input.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert!(r
        .iter()
        .any(|v| v["record"] == "skip" && v["reason"] == "not regular"));
    let summary = r.last().unwrap();
    assert_eq!(summary["processed"], 2);
    assert_eq!(summary["skipped"], 1);
    assert!(summary.get("generated").is_none());
}

#[test]
fn gen_writes_graph6() {
    let out = run(&["gen", "--n", "6", "--r", "3", "--exhaustive"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 70);
    for line in text.lines() {
        assert_eq!(regmatch::parse_graph6(line).unwrap().regularity(), Some(3));
    }
    let dedup = run(&["gen", "--n", "6", "--r", "3", "--dedup"], "");
    assert_eq!(String::from_utf8(dedup.stdout).unwrap().lines().count(), 2);
}

#[test]
fn gen_random_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("cubic.g6");
    let args = [
        "gen",
        "--n",
        "10",
        "--r",
        "4",
        "--random",
        "--count",
        "5",
        "--seed",
        "3",
        "--out",
        output.to_str().unwrap(),
    ];
    assert_eq!(run(&args, "").status.code(), Some(0));
    let text = std::fs::read_to_string(&output).unwrap();
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn gen_parity_error() {
    let out = run(&["gen", "--n", "5", "--r", "3"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
