use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gl3-serre"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn query(input: &str) -> Output {
    let mut child = bin()
        .arg("query")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn decompose_flags() {
    let o = run(&["decompose", "--n", "10", "--p", "7"]);
    assert!(o.status.success());
    assert_eq!(json(&o), serde_json::json!({"case": "I", "x": 3, "y": 1, "z": 0}));
}

#[test]
fn predict_lists_nine_weights() {
    let o = run(&["predict", "--p", "29", "--xi", "123", "--mu", "17,9,0"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["count"], 9);
    let labels: Vec<&str> = v["weights"].as_array().unwrap().iter().map(|w| w["label"].as_str().unwrap()).collect();
    assert!(labels.contains(&"F(15,8,0)"));
}

#[test]
fn orbit_form_matches_constructor_form() {
    let a = run(&["predict", "--p", "29", "--xi", "123", "--mu", "17,9,0"]);
    let rep = json(&a)["type"]["orbit_rep"].as_i64().unwrap().to_string();
    let b = run(&["predict", "--p", "29", "--orbit-rep", &rep]);
    assert_eq!(json(&a)["weights"], json(&b)["weights"]);
}

#[test]
fn cycle_dot() {
    let o = run(&["cycle", "--p", "29", "--xi", "123", "--mu", "17,9,0", "--start", "15,8,0", "--dot"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("// status: Complete"));
    assert_eq!(text.matches("shape=").count(), 9);
}

#[test]
fn cycle_json_round_trips() {
    let o = run(&["cycle", "--p", "29", "--xi", "123", "--mu", "17,9,0", "--start", "15,8,0"]);
    let v = json(&o);
    assert_eq!(v["status"], "complete");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 9);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn breuil_example() {
    let o = run(&["breuil", "--p", "7", "--r", "2", "--ri", "684,684,684", "--k0", "100"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["kappa0"], 214);
    assert_eq!(v["is_maximal"], true);
}

#[test]
fn eliminate_and_dims() {
    let o = run(&["eliminate", "--p", "29", "--xi", "132", "--mu", "17,10,4", "--weight", "36,16,4"]);
    let v = json(&o);
    assert_eq!(v["branch"], "intersection");
    assert_eq!(v["verdict"], "consistent");
    let o = run(&["dims", "--p", "7", "--weight", "6,0,0"]);
    assert_eq!(json(&o)["dim"], 28);
}

#[test]
fn stdin_query() {
    let o = query(r#"{"version":1,"command":"decompose","params":{"n":10,"p":7}}"#);
    assert!(o.status.success());
    assert_eq!(json(&o)["case"], "I");
    let o = query(r#"{"version":1,"command":"dims","params":{"weight":{"p":29,"F":[15,8,0]}}}"#);
    assert_eq!(json(&o)["dim"], 8 * 9 * 17 / 2);
}

#[test]
fn exit_codes() {
    let o = run(&["decompose", "--n", "3", "--p", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["error"]["kind"], "invalid_prime");
    let o = run(&["cycle", "--p", "29", "--xi", "123", "--mu", "17,9,0", "--start", "5,3,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["error"]["kind"], "hypothesis_violated");
    assert_eq!(query("{").status.code(), Some(2));
    assert_eq!(run(&["decompose", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn sweep_summary() {
    let o = run(&["sweep", "--suite", "decompose", "--p", "7,11"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    let o = run(&["sweep", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(1));
}
