use std::io::Read;
use std::process::{Command, Stdio};

use finaut::cli::{run, Outcome, GRAMMAR_HELP};
use serde_json::Value;

fn call(args: &[&str]) -> Outcome {
    let mut argv = vec!["finaut".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    run(&argv)
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn grammar_help() {
    let o = call(&["--seed-grammar-help"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, GRAMMAR_HELP);
}

#[test]
fn parse_errors_exit_2_with_grammar() {
    for args in [vec!["build", "cyclic("], vec!["aut", "order16(C17)"], vec!["verify", "table99"], vec!["frobnicate"], vec![]] {
        let o = call(&args);
        assert_eq!(o.code, 2, "{:?}", args);
        assert!(o.stderr.contains("Group spec grammar"), "{:?}", args);
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn failed_checks_exit_1() {
    let o = call(&["sylow2", "--p", "4"]);
    assert_eq!(o.code, 1);
    let v = json(&o);
    assert_eq!(v["summary"]["ok"], false);
    assert_eq!(v["checks"][0]["status"], "fail");
}

#[test]
fn build_reports_order_and_fingerprint() {
    let o = call(&["build", "fam16p2(C8xC2, 3, ab_b)"]);
    assert_eq!(o.code, 0);
    let v = json(&o);
    assert_eq!(v["results"]["order"], 144);
    assert_eq!(v["fingerprints"][0]["order"], 144);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["inputs"]["spec"], "fam16p2(C8xC2, 3, ab_b)");
}

#[test]
fn aut_identifies() {
    let v = json(&call(&["aut", "fam16p(D4xC2, 3, C2, c)"]));
    assert_eq!(v["results"]["aut_order"], 96);
    assert_eq!(v["identifications"][0]["label"], "Hol(Cp)×D4×C2");
    assert_eq!(v["identifications"][0]["by_isomorphism"], true);
}

#[test]
fn iso_and_tower() {
    let v = json(&call(&["iso", "order16(QD8)", "quasidihedral(16)"]));
    assert_eq!(v["results"]["isomorphic"], true);
    let v = json(&call(&["iso", "order16(QD8)", "dihedral(16)"]));
    assert_eq!(v["results"]["isomorphic"], false);
    let v = json(&call(&["tower", "cyclic(3)"]));
    assert_eq!(v["results"]["orders"], serde_json::json!([3, 2, 1]));
}

#[test]
fn solvers_and_sylow() {
    let v = json(&call(&["solve", "c16", "--p", "7,23"]));
    assert!(v["results"]["solutions"]["7"]["solutions"].as_array().unwrap().contains(&serde_json::json!([1, 3])));
    let v = json(&call(&["coxeter234", "--p", "103"]));
    assert_eq!(v["results"]["solutions"]["103"]["solutions"], serde_json::json!([]));
    assert_eq!(call(&["solve", "radical", "--p", "47"]).code, 2);
    let o = call(&["sylow2", "--p", "7,17"]);
    assert_eq!(o.code, 0);
    assert_eq!(json(&o)["results"]["sylow2"]["17"]["order"], 512);
}

#[test]
fn verify_rows_and_long_running_default() {
    let o = call(&["verify", "table8", "--rows", "x=16,x=5"]);
    assert_eq!(o.code, 0);
    let v = json(&o);
    assert!(v["summary"]["pass"].as_u64().unwrap() >= 3);
    assert_eq!(v["summary"]["skipped"], 1);
    let v = json(&call(&["verify", "tableA4", "--rows", "p<=31"]));
    assert_eq!(v["summary"]["informational"], 1);
    assert_eq!(v["summary"]["ok"], true);
}

#[test]
fn output_is_deterministic() {
    let strip = |o: Outcome| {
        let mut v = json(&o);
        v["elapsed_ms"] = Value::Null;
        v
    };
    let args = ["verify", "table3a", "--rows", "C8xC2 ab_b,Q2xC2 c_bc"];
    assert_eq!(strip(call(&args)), strip(call(&args)));
}

#[test]
fn binary_writes_json_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let file = std::fs::File::create(&path).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_finaut"))
        .args(["--pretty", "verify", "table10"])
        .stdout(Stdio::from(file))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let mut text = String::new();
    std::fs::File::open(&path).unwrap().read_to_string(&mut text).unwrap();
    assert!(text.contains("\n  \"tool\": \"finaut\""));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["summary"]["pass"], 4);

    let status = Command::new(env!("CARGO_BIN_EXE_finaut")).args(["build", "nope("]).stderr(Stdio::null()).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn reports_carry_every_schema_field() {
    let schema: Value = serde_json::from_str(include_str!("../docs/report.schema.json")).unwrap();
    let v = json(&call(&["verify", "table10"]));
    let obj = v.as_object().unwrap();
    let required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
    let mut want = required.clone();
    keys.sort_unstable();
    want.sort_unstable();
    assert_eq!(keys, want);
    for c in v["checks"].as_array().unwrap() {
        for k in schema["$defs"]["check"]["required"].as_array().unwrap() {
            assert!(c.get(k.as_str().unwrap()).is_some());
        }
    }
}
