use std::fs;
use std::process::{Command, Output};

fn superpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superpl")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn exit_codes() {
    let ok = superpl(&["--m", "2", "--n", "1", "--degree", "2", "--suite", "baxter"]);
    assert_eq!(ok.status.code(), Some(0));
    for bad in [
        vec!["--m", "2", "--n", "2"],
        vec!["--suite", "nope"],
        vec!["--degree", "6"],
        vec!["--degree", "1"],
        vec!["--format", "yaml"],
        vec!["--frobnicate"],
    ] {
        let out = superpl(&bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn single_suite_block_and_schema() {
    let out = superpl(&["--suite", "baxter", "--degree", "2"]);
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["pass"], true);
    assert_eq!(v["config"]["m"], 2);
    assert_eq!(v["config"]["suites"], serde_json::json!(["baxter"]));
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    let s = &suites[0];
    for key in ["name", "attempted", "passed", "failures", "witness", "notes"] {
        assert!(s.get(key).is_some(), "{key}");
    }
    assert!(s.get("wall_ms").is_none());
    assert_eq!(s["attempted"], s["passed"]);
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["--m", "1", "--n", "2", "--degree", "2", "--suite", "jacobi", "--suite", "duality", "--seed", "11"];
    let a = superpl(&args);
    let b = superpl(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let timed = superpl(&[&args[..], &["--timings"]].concat());
    assert!(String::from_utf8_lossy(&timed.stdout).contains("wall_ms"));
}

#[test]
fn config_file_defaults_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# defaults\nm = 1\nn = 2\ndegree = 2\nsuite = baxter, wzw\nformat = markdown\n").unwrap();
    let path = cfg.to_str().unwrap();
    let out = superpl(&["--config", path]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# Verification report"));
    assert!(text.contains("shape (1|2)"));
    assert!(text.contains("| wzw |"));

    let out = superpl(&["--config", path, "--format", "json", "--suite", "baxter"]);
    let v = json(&out);
    assert_eq!(v["suites"].as_array().unwrap().len(), 1);
    assert_eq!(v["config"]["n"], 2);

    fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(superpl(&["--config", path]).status.code(), Some(2));
}

#[test]
fn out_and_export_files() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let export = dir.path().join("constants.jsonl");
    let out = superpl(&[
        "--suite",
        "baxter",
        "--degree",
        "2",
        "--out",
        report.to_str().unwrap(),
        "--export-constants",
        export.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    let lines: Vec<serde_json::Value> = fs::read_to_string(&export)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let basis = lines.iter().filter(|r| r["record"] == "basis").count();
    assert_eq!(basis, 16);
    for source in ["double", "g-star", "b-star"] {
        assert!(lines.iter().any(|r| r["source"] == source), "{source}");
    }
    let first = &lines[0];
    assert_eq!(first["index"], 1);
    assert_eq!(first["a"].as_array().unwrap().len(), 3);
}

#[test]
fn unwritable_output_is_a_config_error() {
    let out = superpl(&["--suite", "baxter", "--out", "/nonexistent/dir/report.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_at_32_within_budget() {
    let dir = tempfile::tempdir().unwrap();
    let export = dir.path().join("c32.jsonl");
    let t = std::time::Instant::now();
    let out = superpl(&["--m", "3", "--n", "2", "--degree", "2", "--suite", "baxter", "--export-constants", export.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(t.elapsed().as_secs() < 60);
    let text = fs::read_to_string(&export).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("\"record\":\"basis\"")).count(), 48);
}
