use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use socle::SkewTableau;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn socle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_socle")).args(args).output().unwrap()
}

fn socle_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_socle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enum_example_shape() {
    let v = json(&socle(&[
        "enum",
        "--shape",
        "42/532/31",
        "--kind",
        "socle",
        "--format",
        "json",
    ]));
    assert_eq!(v["version"], 1);
    assert_eq!(v["command"], "enum");
    assert_eq!(v["result"]["count"], 2);
    let sigma2: Value = serde_json::from_str(&std::fs::read_to_string(fixture("sigma2.json")).unwrap()).unwrap();
    assert!(v["result"]["tableaux"].as_array().unwrap().contains(&sigma2));
}

#[test]
fn enum_text_is_derivable_from_json() {
    let args = ["enum", "--shape", "42/642/42", "--kind", "lr"];
    let t = text(&socle(&args));
    let v = json(&socle(&[&args[..], &["--format", "json"]].concat()));
    let mut rebuilt = format!("3 lr tableaux of shape {}\n", v["result"]["shape"].as_str().unwrap());
    for tab in v["result"]["tableaux"].as_array().unwrap() {
        rebuilt.push('\n');
        rebuilt.push_str(&SkewTableau::from_json(&tab.to_string()).unwrap().render_text());
    }
    assert_eq!(t, rebuilt);
}

#[test]
fn analyze_m2_shows_sigma2() {
    let path = fixture("M2.json");
    let v = json(&socle(&["analyze", path.to_str().unwrap(), "--format", "json"]));
    let sigma2: Value = serde_json::from_str(&std::fs::read_to_string(fixture("sigma2.json")).unwrap()).unwrap();
    let gamma2: Value = serde_json::from_str(&std::fs::read_to_string(fixture("gamma2_dual.json")).unwrap()).unwrap();
    assert_eq!(v["result"]["sigma"], sigma2);
    assert_eq!(v["result"]["gamma_dual"], gamma2);
    assert_eq!(v["result"]["shape"], "(4,2)/(5,3,2)/(3,1)");
    let t = text(&socle(&["analyze", path.to_str().unwrap()]));
    assert!(t.contains("Sigma    Gamma    Sigma*    Gamma*"), "{t}");
    assert!(t.contains("..4"));
    assert!(t.contains("Hom-matrix"));
    assert!(t.contains("defect"));
    // same embedding over F_3
    let v3 = json(&socle(&[
        "analyze",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--prime",
        "3",
    ]));
    assert_eq!(v3["result"]["prime"], 3);
    assert_eq!(v3["result"]["sigma"], sigma2);
}

#[test]
fn realize_then_analyze() {
    let sigma = std::fs::read_to_string(fixture("sigma2.json")).unwrap();
    for p in ["2", "3"] {
        let out = socle_stdin(&["realize", "-", "--prime", p], &sigma);
        assert_eq!(out.status.code(), Some(0));
        let emb = text(&out);
        let v = json(&socle_stdin(&["analyze", "-", "--format", "json"], &emb));
        let expected: Value = serde_json::from_str(&sigma).unwrap();
        assert_eq!(v["result"]["sigma"], expected);
        assert_eq!(v["result"]["prime"].to_string(), p);
    }
    let gamma = std::fs::read_to_string(fixture("gamma2_dual.json")).unwrap();
    let emb = text(&socle_stdin(&["realize", "-", "--kind", "lr"], &gamma));
    let v = json(&socle_stdin(&["analyze", "-", "--format", "json"], &emb));
    let expected: Value = serde_json::from_str(&gamma).unwrap();
    assert_eq!(v["result"]["gamma"], expected);
}

#[test]
fn convert_chain() {
    let sigma = std::fs::read_to_string(fixture("sigma2.json")).unwrap();
    let h = json(&socle_stdin(
        &["convert", "--from", "socle", "--to", "hom", "-", "--format", "json"],
        &sigma,
    ));
    let back = json(&socle_stdin(
        &["convert", "--from", "hom", "--to", "duallr", "-", "--format", "json"],
        &h["result"].to_string(),
    ));
    let gamma2: Value = serde_json::from_str(&std::fs::read_to_string(fixture("gamma2_dual.json")).unwrap()).unwrap();
    assert_eq!(back["result"], gamma2);
}

#[test]
fn switch_with_trace() {
    let path = fixture("sigma2.json");
    let v = json(&socle(&[
        "switch",
        path.to_str().unwrap(),
        "--trace",
        "--format",
        "json",
    ]));
    assert_eq!(v["result"]["swaps"], 8);
    assert_eq!(v["result"]["trace"].as_array().unwrap().len(), 9);
    let t = text(&socle(&["switch", path.to_str().unwrap(), "--trace"]));
    assert!(t.contains("step 8:"));
    assert!(t.contains("8 swaps"));
    let seeded = json(&socle(&[
        "switch",
        path.to_str().unwrap(),
        "--seed",
        "11",
        "--format",
        "json",
    ]));
    assert_eq!(seeded["result"]["tableau"], v["result"]["tableau"]);
}

#[test]
fn check_small_suites() {
    let out = socle(&["check", "--max-beta", "5", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out));
    let v = json(&socle(&[
        "check",
        "--max-beta",
        "4",
        "--suite",
        "counts",
        "--format",
        "json",
    ]));
    assert_eq!(v["result"]["suites"][0]["suite"], "counts");
    assert!(v["result"]["conjecture"].is_null());
}

#[test]
fn output_is_deterministic() {
    let a = socle(&[
        "check",
        "--max-beta",
        "5",
        "--suite",
        "switching",
        "--format",
        "json",
        "--seed",
        "4",
    ]);
    let b = socle(&[
        "check",
        "--max-beta",
        "5",
        "--suite",
        "switching",
        "--format",
        "json",
        "--seed",
        "4",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(socle(&["enum", "--shape", "42/53/31"]).status.code(), Some(1));
    assert_eq!(socle(&["lr-coeff"]).status.code(), Some(1));
    assert_eq!(socle(&["check", "--max-beta", "0"]).status.code(), Some(1));
    let out = socle_stdin(&["switch", "-"], "{\"alpha\":[1]}");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    // an LR-tableau passed as a socle tableau
    let gamma = std::fs::read_to_string(fixture("gamma2_dual.json")).unwrap();
    assert_eq!(socle_stdin(&["realize", "-"], &gamma).status.code(), Some(1));
}
