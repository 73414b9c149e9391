use std::path::PathBuf;

use wonderful::cli::{run, EXIT_FAIL, EXIT_INPUT, EXIT_OK};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data/descriptors");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["wonderful"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(name: &str, contents: &str) -> String {
    let mut p = std::env::temp_dir();
    p.push(format!("wonderful-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn non_strict_listing() {
    let (code, out, _) = call(&["classify-list", "--non-strict"]);
    assert_eq!(code, EXIT_OK);
    let labels: Vec<&str> = out.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(labels, ["1A(n=2)", "7B", "7C(n=2)", "13"]);
}

#[test]
fn family_filter_and_json() {
    let (code, out, _) = call(&["classify-list", "--family", "G", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let labels: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["label"].as_str().unwrap()).collect();
    assert!(labels.contains(&"15"));
    assert!(labels.iter().all(|l| ["13", "14", "15"].contains(l)));
}

#[test]
fn empty_table_lists_nothing() {
    let t = temp_file("empty.json", "[]");
    let (code, out, _) = call(&["classify-list", "--table", &t]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let bad = temp_file("bad-table.json", "[{\"label\": 3}]");
    let (code, _, err) = call(&["classify-list", "--table", &bad]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("schema"));
}

#[test]
fn strict_check_verdicts() {
    let (code, out, _) = call(&["strict-check", &data("p1xp1.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("NO"));
    assert!(out.contains("matches 2"));
    let (code, out, _) = call(&["strict-check", &data("p2.json")]);
    assert_eq!((code, out.lines().next()), (EXIT_OK, Some("YES")));
    let (_, out, _) = call(&["strict-check", &data("p2_sl2.json")]);
    assert!(out.starts_with("NO"));
    let (_, out, _) = call(&["strict-check", &data("flag_a2.json"), "--coeff-bound", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["immersible"], true);
    assert_eq!(v["module_weights"], serde_json::json!(["ω1 + ω2"]));
}

#[test]
fn malformed_descriptor_is_an_input_error() {
    let f = temp_file("bad.json", "{");
    assert_eq!(call(&["strict-check", &f]).0, EXIT_INPUT);
    let f = temp_file("invalid.json", r#"{"family": "A", "rank": 1, "variety_rank": 2, "sigma": [[1]], "sp": [], "colours": []}"#);
    let (code, _, err) = call(&["strict-check", &f]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("sigma"), "{err}");
    assert_eq!(call(&["strict-check", "/nonexistent/file.json"]).0, EXIT_INPUT);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(call(&["verify", "bogus"]).0, EXIT_INPUT);
    let (code, out, _) = call(&["verify", "1A2", "--grid", "5"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("PASS [published] jacobian degenerate"));
    let (code, out, _) = call(&["verify", "11"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, out, _) = call(&["verify", "15", "--json"]);
    assert_eq!(code, EXIT_FAIL);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["case"], "15");
}

#[test]
fn verify_reports_are_deterministic() {
    let a = call(&["verify", "9B", "--seed", "7"]);
    let b = call(&["verify", "9B", "--seed", "7", "--sequential"]);
    assert_eq!(a.1, b.1);
    assert!(a.1.contains("seed 7"));
    assert!(a.1.contains("jacobian rank"));
    assert!(!call(&["verify", "9B"]).1.contains("jacobian rank"));
}

#[test]
fn picard_reports() {
    let (code, out, _) = call(&["picard", &data("flag_a2.json"), "--coeffs", "1,1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("section weights: ω1 + ω2\n"));
    let (_, out, _) = call(&["picard", &data("p1xp1.json"), "--coeffs", "1,1"]);
    assert!(out.contains("section weights: 2ω1, 0"), "{out}");
    let (_, out, _) = call(&["picard", "--entry", "7B", "--n", "2", "--coeffs", "1"]);
    assert!(out.contains("very ample: true"));
    let (code, _, err) = call(&["picard", &data("p1xp1.json"), "--coeffs", "1"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("colours"));
    let (_, out, _) = call(&["picard", &data("p1xp1.json"), "--coeffs", "-1,1"]);
    assert!(out.contains("class: neither"));
}
