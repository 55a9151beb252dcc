use std::process::Command;

use signed_grassmannian::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("sgrass").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

const RUNNING: &str = "2 5 6 | -8 -7 -4 -1 3";

#[test]
fn covered_by_text_and_maya() {
    let (code, out, _) = call(&["covered-by", "--k", "3", RUNNING]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "B1\t2 5 6 | -8 -7 -4 1 3\n\
         B2\t2 5 6 | -8 -7 -3 -1 4\n\
         B3\t2 3 6 | -8 -7 -4 -1 5\n\
         B4\t2 5 7 | -8 -6 -4 -1 3\n\
         B4\t4 5 6 | -8 -7 -2 -1 3\n"
    );
    let (_, out, _) = call(&["covered-by", "--k", "3", "--format", "maya", RUNNING]);
    assert_eq!(out.lines().next(), Some("B1\txoxboobb"));
}

#[test]
fn covers_json() {
    let (code, out, _) = call(&["covers", "--k", "1", "--format", "json", "1 | 2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["type"], "B3");
    assert_eq!(v[0]["upper"]["u"], serde_json::json!([2]));
}

#[test]
fn classify_dual_and_maya() {
    let (_, out, _) = call(&["classify", "--k", "3", RUNNING, "4 5 6 | -8 -7 -2 -1 3"]);
    assert_eq!(out, "B4\n");
    let (_, out, _) = call(&["classify", "--k", "3", RUNNING, RUNNING]);
    assert_eq!(out, "none\n");
    let (_, out, _) = call(&["dual", "--k", "3", RUNNING]);
    assert_eq!(out, "2 5 6 | -3 1 4 7 8\n");
    let (_, out, _) = call(&["maya", "encode", "--k", "3", "--unicode", RUNNING]);
    assert_eq!(out, "•∘×•∘∘••\n");
    let (_, out, _) = call(&["maya", "decode", "xobxooxx"]);
    assert_eq!(out, "2 5 6 | -3 1 4 7 8\n");
}

#[test]
fn enumerate_formats() {
    let (_, out, _) = call(&["enumerate", "--n", "2", "--k", "1"]);
    assert_eq!(out, "1 | -2\n1 | 2\n2 | -1\n2 | 1\n");
    let (_, out, _) = call(&["enumerate", "--n", "2", "--k", "1", "--format", "maya"]);
    assert_eq!(out, "ob\nox\nbo\nxo\n");
    let (_, out, _) = call(&["enumerate", "--n", "3", "--k", "1", "--format", "json"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(v.len(), 12);
}

#[test]
fn validation_errors() {
    let (code, _, err) = call(&["length", "--k", "2", RUNNING]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, _) = call(&["length", "--k", "1", "-1 2"]);
    assert_eq!(code, 2, "not Grassmannian");
    let (code, _, _) = call(&["maya", "decode", "boz"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["enumerate", "--n", "2", "--k", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["enumerate", "--n", "2", "--k", "1", "--format", "xml"]);
    assert_eq!(code, 1);
}

#[test]
fn graph_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let json = dir.path().join("g.json");
    let (code, out, _) = call(&[
        "graph",
        "--n",
        "4",
        "--k",
        "2",
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
        "--b2-style",
        "color=blue",
        "--dual-links",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("edges: 37"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.contains("[color=blue]"));
    assert!(text.contains("dir=none"));
    let g = signed_grassmannian::BruhatGraph::from_json(&std::fs::read_to_string(&json).unwrap())
        .unwrap();
    assert_eq!(g.nodes().len(), 24);
}

#[test]
fn verify_reports_ok() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = call(&[
        "verify",
        "--max-n",
        "3",
        "--cache",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("OK"));
    assert_eq!(out.lines().count(), 1 + 9 + 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sgrass");
    let ok = Command::new(bin)
        .args(["length", "--k", "3", RUNNING])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("length: 34\n"));
    let usage = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    let guard = Command::new(bin)
        .args(["verify", "--max-n", "9"])
        .output()
        .unwrap();
    assert_eq!(guard.status.code(), Some(4));
}
