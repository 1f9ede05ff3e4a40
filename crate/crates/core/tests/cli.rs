use std::fs;
use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-index")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn indices_of_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    fs::write(&path, "# P4\nn 4\n0 1\n1 2\n2 3\n").unwrap();
    let o = cli(&["indices", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["indices"]["sigma"], "2");
    assert_eq!(v["indices"]["harmonic"], "11/6");
    assert_eq!(v["is_tree"], true);
}

#[test]
fn bounds_subcommand_reports_violation() {
    let o = cli(&["bounds", "--seq", "(15,13,11,10,8,6,4)", "--conv", "table", "--sigma", "6318", "--id", "B14"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["verdict"], "VIOLATED");
    assert_eq!(v[0]["exact"], "7370");

    let all = cli(&["bounds", "--seq", "3,1,1,1", "--conv", "full"]);
    let v: serde_json::Value = serde_json::from_slice(&all.stdout).unwrap();
    assert!(v.as_array().unwrap().len() >= 20);
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["bounds", "--seq", "3,x", "--conv", "table"]).status.code(), Some(1));
    assert_eq!(cli(&["bounds", "--seq", "3,1", "--conv", "full"]).status.code(), Some(1));
    assert_eq!(cli(&["nonsense"]).status.code(), Some(1));
    assert_eq!(cli(&["extremal", "--n", "12"]).status.code(), Some(2));
    let holds = cli(&["audit", "--bound", "B09", "--n-range", "4..6", "--expect-holds"]);
    assert_eq!(holds.status.code(), Some(0));
    let violated = cli(&["audit", "--bound", "B14", "--n-range", "4..5", "--expect-holds"]);
    assert_eq!(violated.status.code(), Some(3));
    assert_eq!(cli(&["audit", "--bound", "B14", "--n-range", "4..5"]).status.code(), Some(0));
    assert_eq!(cli(&["audit", "--bound", "B77", "--n-range", "4..5"]).status.code(), Some(1));
}

#[test]
fn audit_json_shape_and_determinism() {
    let args = ["audit", "--bound", "B16", "--n-range", "5..7", "--workers", "1"];
    let one = cli(&args);
    let many = cli(&["audit", "--bound", "B16", "--n-range", "5..7", "--workers", "4"]);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, cli(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    for key in ["bound_id", "family", "instances", "holds", "violated", "undecidable", "witnesses"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for key in ["prufer", "degrees", "sigma", "value", "margin"] {
        assert!(v["witnesses"][0].get(key).is_some(), "{key}");
    }
    assert_eq!(v["instances"], 125 + 1296 + 16807);
}

#[test]
fn thm23_and_identity_audits() {
    let v: serde_json::Value =
        serde_json::from_slice(&cli(&["audit", "--bound", "thm23", "--n-range", "4"]).stdout).unwrap();
    assert_eq!(v["bound_id"], "THM23");
    assert_eq!(v["instances"], 16);
    let v: serde_json::Value =
        serde_json::from_slice(&cli(&["audit", "--bound", "identity", "--n-range", "2..7"]).stdout).unwrap();
    assert_eq!(v["violated"], 0);
    let v: serde_json::Value = serde_json::from_slice(
        &cli(&["audit", "--bound", "B12", "--n-range", "20", "--family", "paths", "--k", "1"]).stdout,
    )
    .unwrap();
    assert_eq!(v["violated"], 1);
    assert_eq!(v["witnesses"][0]["value"], 380.25);
}

#[test]
fn tables_are_deterministic() {
    let t1 = cli(&["tables", "--which", "1"]);
    assert_eq!(t1.stdout, cli(&["tables", "--which", "1"]).stdout);
    let text = stdout(&t1);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().nth(2).unwrap().contains(",34669.5,"));
    let consistent = stdout(&cli(&["tables", "--which", "1", "--consistent"]));
    assert!(consistent.lines().nth(2).unwrap().contains(",11556.5,"));

    let t2 = stdout(&cli(&["tables", "--which", "2"]));
    assert_eq!(t2.lines().count(), 11);
    assert!(t2.contains(",192,156622,63068,108775,4308189.06,203164.43,"));
}

#[test]
fn correlation_from_file_matches_in_memory() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t2.csv");
    fs::write(&csv, cli(&["tables", "--which", "2"]).stdout).unwrap();
    let from_file = cli(&["tables", "--which", "corr", "--in", csv.to_str().unwrap()]);
    let in_memory = cli(&["tables", "--which", "corr"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, in_memory.stdout);
}

#[test]
fn custom_sequence_file() {
    let dir = tempfile::tempdir().unwrap();
    let seqs = dir.path().join("seqs.txt");
    fs::write(&seqs, "# one row\n15,13,11,10,8,6,4\n").unwrap();
    let out = stdout(&cli(&["tables", "--which", "2", "--seq-file", seqs.to_str().unwrap()]));
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("6318"));
}

#[test]
fn plot_writes_svg_and_series() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t1.csv");
    fs::write(&csv, cli(&["tables", "--which", "1"]).stdout).unwrap();
    let svg = dir.path().join("fig2.svg");
    let o = cli(&["plot", "--kind", "fig2", "--in", csv.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(fs::read_to_string(&svg).unwrap().contains("<polyline"));
    let series = fs::read_to_string(dir.path().join("fig2.csv")).unwrap();
    assert_eq!(series.lines().count(), 1 + 4 * 9);
    assert!(series.contains("Theorem,1,30191\n"));

    let empty = dir.path().join("empty.csv");
    fs::write(&empty, "").unwrap();
    let out = dir.path().join("empty.svg");
    let o = cli(&["plot", "--kind", "fig3", "--in", empty.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = cli(&["plot", "--kind", "fig7", "--in", empty.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fit_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("line.csv");
    fs::write(&csv, "x,y\n1,3\n2,5\n3,7\n").unwrap();
    let o = cli(&["fit", "--y", "y", "--x", "x", "--in", csv.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let coef = v["fit"]["coefficients"][0].as_f64().unwrap();
    assert!((coef - 2.0).abs() < 1e-12);
    assert!((v["fit"]["intercept"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let t2 = dir.path().join("t2.csv");
    fs::write(&t2, cli(&["tables", "--which", "2"]).stdout).unwrap();
    let o = cli(&["fit", "--y", "sigma", "--x", "lb1,lb2", "--in", t2.to_str().unwrap()]);
    assert!(o.status.success());
    let o = cli(&["fit", "--y", "sigma", "--x", "nope", "--in", t2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn extremal_subcommand() {
    let v: serde_json::Value = serde_json::from_slice(&cli(&["extremal", "--n", "7"]).stdout).unwrap();
    assert_eq!(v["max_sigma"], 150);
    assert_eq!(v["min_sigma"], 2);
    let v: serde_json::Value =
        serde_json::from_slice(&cli(&["extremal", "--seq", "3,3,1,1,1,1"]).stdout).unwrap();
    assert_eq!(v["trees"], 6);
    assert_eq!(v["max_sigma"], 16);
}
