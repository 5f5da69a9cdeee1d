use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn monideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monideal")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn session() -> String {
    data("session.txt").display().to_string()
}

#[test]
fn session_primes() {
    let o = monideal(&["assprimes", &session()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("P0 = ⟨x1, x2, x3, x4⟩\n"));
    assert!(text.contains("P1 = ⟨x1, x2, x3, x4, x8⟩\n"));
}

#[test]
fn session_witness_with_offsets() {
    let o = monideal(&[
        "witness", &session(), "--prime", "x1,x2,x3,x4", "--offset", "x5=5", "--offset", "x6=5", "--offset", "x7=2",
        "--offset", "x8=5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("v = x2^6 x3^4 x4 x5^5 x6^5 x7^2 x8^13\n"), "{text}");
    assert!(text.ends_with("VERIFIED\n"));
}

#[test]
fn second_session_witness() {
    let o = monideal(&[
        "witness", &session(), "--prime", "1", "--component", "1", "--offset", "x5=2", "--offset", "x6=0",
        "--offset", "x7=8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("v = x1^2 x2^3 x4^4 x5^2 x7^8 x8\n"));
}

#[test]
fn several_components_need_a_choice() {
    let o = monideal(&["witness", &session(), "--prime", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("[0] ⟨x1^4, x2^7, x3^5, x4^2, x8^8⟩"));
    assert!(err.contains("[1] ⟨x1^3, x2^4, x3, x4^5, x8^2⟩"));
}

#[test]
fn failing_candidate_exits_2() {
    let file = data("uniqueness.txt").display().to_string();
    let o = monideal(&["verify", &file, "--prime", "x1,x2", "--v", "x3^5*x5^2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).ends_with("FAILED\n"));
}

#[test]
fn seeded_witnesses_are_deterministic() {
    let args = ["witness", &session(), "--prime", "0", "--seed", "7", "--format", "json"];
    let (a, b) = (monideal(&args), monideal(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    for key in ["ring", "ideal", "components", "associated_primes", "witness", "verified"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["verified"], Value::Bool(true));
    let offsets = doc["witness"]["offsets"].as_object().unwrap();
    assert_eq!(offsets.keys().collect::<Vec<_>>(), ["x5", "x6", "x7", "x8"]);
    assert!(offsets.values().all(|v| v.as_u64().unwrap() <= 8));
    assert_eq!(doc["witness"]["monomial"]["x2"], 6);
}

#[test]
fn json_components() {
    let o = monideal(&["decompose", &session(), "--format", "json"]);
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let comps = doc["components"].as_array().unwrap();
    assert_eq!(comps.len(), 3);
    assert_eq!(comps[0]["support"], serde_json::json!(["x1", "x2", "x3", "x4"]));
    assert_eq!(comps[0]["exponents"]["x2"], 7);
    assert_eq!(doc["witness"], Value::Null);
}

#[test]
fn stdin_and_parse_errors() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "ring n=2\nideal I = x1^2,\n    x1*x3").unwrap();
    let o = monideal(&["decompose", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":3:8: unknown variable 'x3'"), "{err}");

    let mut child = Command::new(env!("CARGO_BIN_EXE_monideal"))
        .args(["colon", "-", "--v", "x2"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"ring n=2\nideal I = x1*x2^2\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(I : v) = ⟨x1*x2⟩"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(monideal(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(monideal(&["witness", &session()]).status.code(), Some(1));
    assert_eq!(monideal(&["colon", &session(), "--v", "x1^0"]).status.code(), Some(1));
    assert_eq!(monideal(&["witness", &session(), "--prime", "7"]).status.code(), Some(1));
    assert_eq!(monideal(&["witness", &session(), "--prime", "0", "--offset", "x1=2"]).status.code(), Some(1));
    assert_eq!(monideal(&["--help"]).status.code(), Some(0));
}

#[test]
fn clutter_borel_and_symmetric_commands() {
    let file = data("graphs.txt").display().to_string();
    let o = monideal(&["clutter-base", &file, "--name", "P"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("⟨t2⟩: t_A = t1 t3 t4 VERIFIED"));

    let o = monideal(&["borel", &file, "--name", "B", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("BOREL TYPE\n"));
    assert!(stdout(&o).contains("agrees"));

    let o = monideal(&["borel", &session()]);
    assert!(stdout(&o).contains("NOT BOREL TYPE"));

    let o = monideal(&["symgen", &file, "--name", "S", "--break", "2", "--b", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("v = t1^2 t2^2 t3^2 t4^5"));
    assert_eq!(monideal(&["symgen", &file, "--name", "S", "--break", "3"]).status.code(), Some(1));
    assert_eq!(monideal(&["clutter-base", &file, "--name", "S"]).status.code(), Some(1));
}

#[test]
fn uniqueness_command() {
    let file = data("uniqueness.txt").display().to_string();
    let o = monideal(&["uniqueness", &file, "--prime", "x1,x2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NOT UNIQUE"));

    let mut unique = tempfile::NamedTempFile::new().unwrap();
    writeln!(unique, "ring n=2\nideal I = x1^2, x2^3").unwrap();
    let o = monideal(&["uniqueness", unique.path().to_str().unwrap()]);
    assert!(stdout(&o).contains("P0 = ⟨x1, x2⟩: UNIQUE v = x1 x2^2"), "{}", stdout(&o));
}
