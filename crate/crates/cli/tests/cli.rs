use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use insdel_cli::CodeFile;
use insdel_core::constructions::{default_odd_length, palindrome_code};
use insdel_core::gf::Field;
use serde_json::Value;

fn insdel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_insdel")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn report(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn without_timing(path: &Path) -> String {
    let mut v = report(path);
    v.as_object_mut().unwrap().remove("timing");
    serde_json::to_string(&v).unwrap()
}

#[test]
fn construct_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pal.json");
    let o = insdel(&["construct", "palindrome", "--p", "7", "--e", "2", "--k", "2", "--out", out.to_str().unwrap(), "--quiet"]);
    assert_eq!(code(&o), 0);
    let (cf, _) = CodeFile::read(&out).unwrap();
    let f = Arc::new(Field::new(7, 2, None).unwrap());
    assert!(cf.to_code().unwrap().same_code(&palindrome_code(&f, 2).unwrap()));

    let out = dir.path().join("odd.json");
    let o = insdel(&["construct", "odd", "--p", "5", "--k", "3", "--out", out.to_str().unwrap(), "--quiet"]);
    assert_eq!(code(&o), 0);
    let f = Arc::new(Field::prime(5).unwrap());
    let (cf, _) = CodeFile::read(&out).unwrap();
    assert!(cf.to_code().unwrap().same_code(&default_odd_length(&f, 3).unwrap()));
}

#[test]
fn reports_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let code_path = dir.path().join("ex1.json");
    std::fs::write(&code_path, insdel_cli::registry::example("ex1-gf49").unwrap().code_file().to_json()).unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify-example", "ex-11-4-binary"],
        vec!["search", "--n", "5", "--k", "2", "--bound", "strict", "--ones", "require-out"],
        vec!["distance", code_path.to_str().unwrap()],
        vec!["certify", code_path.to_str().unwrap()],
    ];
    for (i, args) in cases.iter().enumerate() {
        let paths: Vec<_> = (0..2).map(|r| dir.path().join(format!("r{i}-{r}.json"))).collect();
        for p in &paths {
            let mut a = args.clone();
            a.extend(["--quiet", "--json", p.to_str().unwrap()]);
            insdel(&a);
        }
        assert_eq!(without_timing(&paths[0]), without_timing(&paths[1]), "{args:?}");
        assert!(report(&paths[0])["timing"]["elapsed_ms"].is_number());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&insdel(&["verify-example", "ex2-gf121", "--quiet"])), 0);
    assert_eq!(code(&insdel(&["search", "--n", "4", "--k", "2", "--bound", "half", "--expect", "table2", "--quiet"])), 0);
    assert_eq!(code(&insdel(&["verify-example", "no-such-example"])), 2);
    assert_eq!(code(&insdel(&["distance", "/nonexistent/code.json"])), 2);
    assert_eq!(code(&insdel(&["construct", "odd", "--p", "2", "--k", "3"])), 2);
    assert_eq!(code(&insdel(&["construct", "rs-example", "--p", "2", "--e", "5", "--n", "3"])), 2);
    assert_eq!(code(&insdel(&["--pairs-budget", "1000", "verify-example", "ex1-gf49"])), 3);
    assert_eq!(code(&insdel(&["--enum-budget", "10", "search", "--n", "5", "--k", "2", "--bound", "half"])), 3);
    let o = insdel(&["construct", "odd", "--p", "3", "--a", "1,0", "--quiet"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn malformed_code_files() {
    let dir = tempfile::tempdir().unwrap();
    for (i, text) in [
        "not json",
        r#"{"field":{"p":4,"e":1},"generator":[["1"]]}"#,
        r#"{"field":{"p":2,"e":1},"generator":[["1","0"],["1","0"]]}"#,
        r#"{"field":{"p":7,"e":2,"modulus":[1,0,1]},"generator":[["1"]]}"#,
    ]
    .iter()
    .enumerate()
    {
        let p = dir.path().join(format!("bad{i}.json"));
        std::fs::write(&p, text).unwrap();
        assert_eq!(code(&insdel(&["bounds", p.to_str().unwrap()])), 2, "{text}");
    }
}

#[test]
fn mismatch_is_reported_distinctly() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("ex1.json");
    let o = insdel(&["verify-example", "ex1-gf49", "--json", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("MISMATCH"));
    let r = report(&p);
    let claims = r["claims"].as_array().unwrap();
    let failed: Vec<&Value> = claims.iter().filter(|c| c["passed"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["kind"], "representation-mismatch");
    assert_eq!(r["result"]["exhibited"]["lcs"], 3);
    assert_eq!(r["result"]["brute_force"]["distance"], 4);
    assert_eq!(r["result"]["certificate"]["qualifying_distinct_count"], 3);
}

#[test]
fn table_comparison_reports_the_reversal() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t1.json");
    let o = insdel(&["search", "--n", "5", "--k", "2", "--bound", "strict", "--ones", "require-out", "--expect", "table1", "--json", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let r = report(&p);
    assert_eq!(r["result"]["count"], 18);
    let extra = r["result"]["reference"]["extra"].as_array().unwrap();
    assert_eq!(extra.len(), 1);
    assert_eq!(extra[0]["reversal_listed"], true);
    assert!(r["result"]["reference"]["missing"].as_array().unwrap().is_empty());
}

#[test]
fn json_to_stdout() {
    let o = insdel(&["verify-example", "ex-nonlinear", "--json", "-"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["brute_force"]["distance"], 8);
    assert_eq!(v["command"], "verify-example ex-nonlinear");
}
