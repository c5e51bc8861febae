use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use sqdepth_cli::{run_command, EXIT_INVALID, EXIT_OK};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sqdepth").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    let json = if out.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&out).expect("stdout is JSON")
    };
    (code, json, String::from_utf8(err).unwrap())
}

#[test]
fn analyze_example() {
    let (code, r, _) = run(&["analyze", &data("example.json")]);
    assert_eq!(code, EXIT_OK);
    for key in ["instance", "d", "rho", "alpha", "certificates", "depth", "sdepth", "witness", "consistent"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["depth"]["Q"], 3);
    assert_eq!(r["depth"]["GF(2)"], 3);
    assert_eq!(r["sdepth"], 3);
    assert_eq!(r["rho"]["2"], 4);
    assert_eq!(r["consistent"], true);
    assert_eq!(r["instance"], serde_json::json!({"n":4,"I":[[1],[3]],"J":[[1,4]]}));
}

#[test]
fn analyze_with_fields_and_pretty() {
    let (code, r, err) = run(&[
        "analyze",
        &data("example_prime.json"),
        "--field",
        "q",
        "--field",
        "gf:3",
        "--pretty",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["depth"]["Q"], 2);
    assert_eq!(r["depth"]["GF(3)"], 2);
    assert!(r["depth"].get("GF(2)").is_none());
    assert!(err.contains("fired: theorem_m t=2"), "{err}");
}

#[test]
fn depth_and_bounds() {
    let (code, r, _) = run(&["depth", &data("example.json"), "--field", "gf:2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["depth"], serde_json::json!({"GF(2)": 3}));

    let (code, r, _) = run(&["bounds", &data("example_prime.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["upper_bound"], 2);
    assert!(r.get("depth").is_none());
}

#[test]
fn sdepth_witness() {
    let (code, r, _) = run(&["sdepth", &data("example.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["sdepth"], 3);
    let witness = r["witness"].as_array().unwrap();
    assert!(witness.iter().all(|iv| iv["top"].as_array().unwrap().len() >= 3));
}

#[test]
fn strand_dump() {
    let (code, r, _) = run(&["strands", &data("example.json"), "--multidegree", "1,4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["strand"]["multidegree"], serde_json::json!([1, 4]));
    assert_eq!(r["homology"]["Q"]["1"], 1);

    let (_, r, _) = run(&["strands", &data("example.json")]);
    let h3 = &r["strand"]["boundaries"][2];
    assert_eq!(h3["rows"], 4);
    assert_eq!(h3["cols"], 2);
}

#[test]
fn validation_errors_exit_2() {
    let (code, out, err) = run(&["analyze", &data("duplicate.json")]);
    assert_eq!(code, EXIT_INVALID);
    assert!(out.is_null());
    assert!(err.contains("I[0]"), "{err}");

    let (code, _, err) = run(&["depth", &data("not_contained.json")]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("x2x4"), "{err}");

    let (code, _, _) = run(&["analyze", "/nonexistent/instance.json"]);
    assert_eq!(code, EXIT_INVALID);

    let (code, _, _) = run(&["analyze", &data("example.json"), "--bogus"]);
    assert_eq!(code, EXIT_INVALID);

    let (code, _, _) = run(&["depth", &data("example.json"), "--field", "gf:4"]);
    assert_eq!(code, EXIT_INVALID);

    let (code, _, _) = run(&["strands", &data("example.json"), "--multidegree", "5"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn scan_is_byte_identical_per_seed() {
    let args = ["scan", "--n", "5", "--count", "60", "--seed", "7"];
    let mut a = Vec::new();
    let mut b = Vec::new();
    assert_eq!(run_command(std::iter::once("sqdepth").chain(args), &mut a, &mut Vec::new()), 0);
    assert_eq!(run_command(std::iter::once("sqdepth").chain(args), &mut b, &mut Vec::new()), 0);
    assert_eq!(a, b);
    let r: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(r["entries"].as_array().unwrap().len(), 60);
    assert_eq!(r["theorem_violations"], serde_json::json!([]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sqdepth");
    let ok = Command::new(bin).args(["depth", &data("example.json")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["depth"]["Q"], 3);

    let bad = Command::new(bin).args(["analyze", &data("duplicate.json")]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn instance_file_from_tempdir() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("principal.json");
    std::fs::write(&path, r#"{"n":4,"I":[[1]],"J":[[1,2,3],[1,2,4],[1,3,4]]}"#).unwrap();
    let (code, r, _) = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["depth"]["Q"], 2);
    let el = r["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["kind"] == "proposition_el")
        .unwrap();
    assert_eq!(el["fired"], true);
}
