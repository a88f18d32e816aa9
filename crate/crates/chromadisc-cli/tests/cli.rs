//! End-to-end tests of the chromadisc binary: output shapes, exit codes,
//! determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromadisc"))
        .args(args)
        .env_remove("CHROMADISC_BUDGET")
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromadisc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.stdout.starts_with(b"{") || out.stdout.starts_with(b"["),
        "stdout is not JSON: {:?}",
        String::from_utf8_lossy(&out.stdout)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn compute_cycle9() {
    let out = run(&["compute", "--family", "cycle:9"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["phi"], 2);
    assert_eq!(v["phi_hat"], 1);
    assert_eq!(v["chi"], 3);
}

#[test]
fn compute_mycielski4() {
    let out = run(&["compute", "--family", "mycielski:4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["phi"], 2);
    assert_eq!(v["phi_hat"], 2);
    assert_eq!(v["psi"], 4);
}

#[test]
fn compute_complete5() {
    let out = run(&["compute", "--family", "complete:5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["phi"], 0);
    assert_eq!(v["phi_hat"], 0);
}

#[test]
fn compute_witness_and_skip_flags() {
    let out = run(&["compute", "--family", "paw", "--witness"]);
    let v = json(&out);
    assert_eq!(v["report"]["phi"], 1);
    assert!(v["phi_witness"]["coloring"].is_array());
    assert!(v["phi_witness"]["subgraph"].is_array());
    assert_eq!(v["phi_witness"]["value"], 1);

    let out = run(&["compute", "--family", "paw", "--skip-discrepancy"]);
    let v = json(&out);
    assert!(v.get("phi").is_none());
    assert_eq!(v["chi"], 3);
}

#[test]
fn compute_from_graph6_and_edges() {
    let out = run(&["compute", "--graph6", "Bw"]);
    let v = json(&out);
    assert_eq!(v["n"], 3);
    assert_eq!(v["omega"], 3);

    let dir = std::env::temp_dir().join("chromadisc_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.edges");
    std::fs::write(&path, "5: 0-1,1-2,2-3,3-4,4-0\n").unwrap();
    let out = run(&["compute", "--edges", path.to_str().unwrap()]);
    let v = json(&out);
    assert_eq!(v["phi"], 1);
}

#[test]
fn compute_budget_exceeded_gives_partial_report_and_exit_3() {
    let out = run(&["compute", "--family", "mycielski:4", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert!(v.get("phi").is_none(), "partial report must omit phi");
    assert_eq!(v["chi"], 4);

    // Same through the environment variable.
    let out = Command::new(env!("CARGO_BIN_EXE_chromadisc"))
        .args(["compute", "--family", "mycielski:4"])
        .env("CHROMADISC_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn family_outputs_graph6() {
    let out = run(&["family", "paw"]);
    assert!(out.status.success());
    let g6 = String::from_utf8(out.stdout).unwrap();
    let g = chromadisc::Graph::from_graph6(g6.trim()).unwrap();
    assert_eq!(g.n(), 4);
    assert_eq!(g.edge_count(), 4);

    let out = run(&["family", "tight-phi:4,2"]);
    let g6 = String::from_utf8(out.stdout).unwrap();
    assert_eq!(chromadisc::Graph::from_graph6(g6.trim()).unwrap().n(), 8);
}

#[test]
fn family_unknown_is_usage_error() {
    let out = run(&["family", "dodecahedron"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn compute_bad_graph6_exits_2() {
    let out = run(&["compute", "--graph6", "B{"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_corpus_all_hold() {
    let out = run(&["verify", "--all-graphs-up-to", "4"]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows = json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 1 + 2 + 8 + 64);
    let out7 = run(&["verify", "--all-graphs-up-to", "7"]);
    assert_eq!(out7.status.code(), Some(2));
}

#[test]
fn verify_gr4_reports_profile_row() {
    let out = run(&["verify", "--family", "gr:4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph,bound,applicable"));
    assert!(text.contains("gr:4,optimal_profile_consistent,true"));
    // The JSON form carries the profile numbers.
    let out = run(&["verify", "--family", "gr:4"]);
    let rows = json(&out);
    let entries = rows[0]["result"]["entries"].as_array().unwrap();
    let profile = entries
        .iter()
        .find(|e| e["name"] == "optimal_profile_consistent")
        .expect("profile row present");
    let note = profile["note"].as_str().unwrap();
    assert!(note.contains("phi_c in [3, 3]"), "{note}");
    assert!(note.contains("phi_hat_c in [2, 2]"), "{note}");
    assert!(note.contains("exact (1, 1)"), "{note}");
}

#[test]
fn verify_nphard_path3() {
    let out = run(&["verify", "--family", "nphard:path:3"]);
    assert!(out.status.success());
    let rows = json(&out);
    assert_eq!(rows[0]["result"]["report"]["phi"], 2);
    assert_eq!(rows[0]["result"]["report"]["phi_hat"], 2);
}

#[test]
fn verify_budget_exceeded_flags_row_and_exits_3() {
    let out = run(&["verify", "--family", "gt:4", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    let rows = json(&out);
    assert!(rows[0]["error"].as_str().unwrap().contains("budget"));
}

#[test]
fn verify_gnp_members() {
    let out = run(&["verify", "--gnp", "10,0.5,42", "--gnp", "10,0.2,7"]);
    assert!(out.status.success());
    assert_eq!(json(&out).as_array().unwrap().len(), 2);
}

#[test]
fn convert_roundtrip() {
    let out = run_stdin(
        &["convert", "--from", "edges", "--to", "graph6"],
        "3: 0-1,1-2\n",
    );
    assert!(out.status.success());
    let g6 = String::from_utf8(out.stdout).unwrap();
    let back = run_stdin(&["convert", "--from", "graph6", "--to", "edges"], &g6);
    assert_eq!(String::from_utf8(back.stdout).unwrap().trim(), "3: 0-1,1-2");
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["compute", "--family", "gr:4", "--witness"],
        vec!["verify", "--all-graphs-up-to", "3", "--format", "csv"],
        vec!["family", "gnp:12,0.5,99"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "nondeterministic stdout for {args:?}");
    }
}
