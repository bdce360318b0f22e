//! The command-line front end, in process and as a binary.

use std::process::Command;

use mixproj::cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

const DEMO: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/demo.graph");

fn mixproj(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("mixproj").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn build_text() {
    let (code, out, _) = mixproj(&["build", "-g", DEMO, "-s", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "source 4\nlevel 1: 1 3\nlevel 2: 2\nlevel 3: 7 8\nlevel 4: 5 6\n\
         pred 1: 4\npred 3: 4\npred 2: 1 3\npred 7: 2\npred 8: 2\npred 5: 8\npred 6: 8\n\
         unreachable: -\nstats: vertices_placed=7 adjacency_cells_read=15 levels_built=4\n"
    );
}

#[test]
fn build_bracket() {
    let (code, out, _) = mixproj(&["build", "-g", DEMO, "-s", "4", "-f", "bracket"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "4(1(2(7,8(5,6))),3(2(7,8(5,6))))\n");
    let (_, pretty, _) = mixproj(&["build", "-g", DEMO, "-s", "1", "-f", "bracket", "--pretty"]);
    assert_eq!(pretty, "1\n  2\n    3\n    7\n    8\n      5\n      6\n  4\n    3\n");
}

#[test]
fn build_bracket_respects_node_cap() {
    let (code, _, err) = mixproj(&["build", "-g", DEMO, "-s", "4", "-f", "bracket", "--node-cap", "5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains('5'), "{err}");
}

#[test]
fn path_text_and_json() {
    let (code, out, _) = mixproj(&["path", "-g", DEMO, "-s", "4", "-t", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "source 4\ntarget 5\ndistance 4\ncount 2\n4 1 2 8 5\n4 3 2 8 5\n");

    let (_, out, _) = mixproj(&["path", "-g", DEMO, "-s", "4", "-t", "5", "--limit", "1", "-f", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["paths"], serde_json::json!([[4, 1, 2, 8, 5]]));
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["truncated"], true);
}

#[test]
fn unreachable_target() {
    let arc_path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/arc-path.graph");
    let (code, out, _) = mixproj(&["path", "-g", arc_path, "-s", "3", "-t", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "source 3\ntarget 1\ndistance inf\ncount 0\n");
    let (_, out, _) = mixproj(&["sssp", "-g", arc_path, "-s", "2", "-f", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["dist"], serde_json::json!({"1": null, "2": 0, "3": 1}));
}

#[test]
fn apsp_parallel_is_identical() {
    let args = |t: &'static str| ["apsp", "--random", "40:0.1:0.5", "--seed", "9", "--parallel", t, "-f", "json"];
    let (_, one, _) = mixproj(&args("1"));
    let (_, eight, _) = mixproj(&args("8"));
    assert_eq!(one, eight);
}

#[test]
fn check_passes_and_detects_fault() {
    let (code, out, _) = mixproj(&["check", "-g", DEMO]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.ends_with("verified\n"));

    let (code, out, _) = mixproj(&["check", "-g", DEMO, "-s", "4", "--inject-fault", "2:1", "-f", "json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["verified"], false);
    let report = &doc["graphs"][0]["report"];
    assert_eq!(report["pred_mismatches"][0]["expected"], serde_json::json!([1, 3]));
    assert_eq!(report["pred_mismatches"][0]["actual"], serde_json::json!([1]));
    let targets: Vec<u64> =
        report["path_set_mismatches"].as_array().unwrap().iter().map(|m| m["vertex"].as_u64().unwrap()).collect();
    assert_eq!(targets, [2, 5, 6, 7, 8]);
}

#[test]
fn check_batch() {
    let (code, out, _) = mixproj(&["check", "--random", "8:0.4:0.5", "--seed", "100", "--batch", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 5);
    assert!(out.starts_with("random:8:0.4:0.5:100: "));
    assert!(out.contains("random:8:0.4:0.5:103: "));
}

#[test]
fn bench_is_deterministic_without_timing() {
    let (code, out, _) = mixproj(&["bench", "-g", DEMO, "-s", "4", "--no-timing"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("graph,order,links,source"));
    assert!(lines.next().unwrap().ends_with(",8,19,4,7,7,15,4,26,5,,,0"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["build", "-s", "1"][..],
        &["build", "-g", DEMO, "--random", "3:0.5:0.5", "-s", "1"],
        &["build", "-g", DEMO, "--seed", "3", "-s", "1"],
        &["build", "-g", DEMO, "-s", "9"],
        &["build", "-g", DEMO, "-s", "0"],
        &["sssp", "-g", DEMO, "-s", "1", "-f", "bracket"],
        &["build", "--random", "3:0.5", "-s", "1"],
        &["gen", "-n", "3", "--pair-prob", "1.5", "--orient-prob", "0"],
        &["check", "-g", DEMO, "--batch", "2"],
        &["frobnicate"],
    ] {
        let (code, out, err) = mixproj(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.graph");
    std::fs::write(&path, "n 3\ne 1 2\ne 2 2\n").unwrap();
    let (code, _, err) = mixproj(&["sssp", "-g", path.to_str().unwrap(), "-s", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains('3'), "{err}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_mixproj");
    let ok = Command::new(bin).args(["sssp", "-g", DEMO, "-s", "4"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8(ok.stdout).unwrap().starts_with("source 4\n"));
    let bad = Command::new(bin).args(["sssp", "-s", "4"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert!(help.status.success());
}
