//! End-to-end tests of the `delta-orbit` binary: exit codes, output
//! determinism and the field environment variable.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_delta-orbit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hom_matches_frozen_value() {
    let o = run(&[
        "hom", "--n", "8", "--alg", "d", "--I", "8-,5+,4-,3+,2-,1+", "--J", "8+,7-,6+,5-,4+,1-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("formula=3"), "{}", stdout(&o));
}

#[test]
fn ext_with_oracle_agrees() {
    let o = run(&[
        "ext", "--n", "8", "--alg", "d", "--I", "8-,5+,4-,3+,2-,1+", "--J", "8+,7-,6+,5-,4+,1-",
        "--oracle",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("formula=1") && s.contains("oracle=1") && s.contains("match=true"));
}

#[test]
fn parse_errors_exit_with_two() {
    let o = run(&["hom", "--n", "3", "--alg", "d", "--I", "3?", "--J", "2+"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["hom", "--n", "3", "--alg", "d", "--I", "9+", "--J", "2+"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["no-such-subcommand"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["richardson", "--d", "1,2,3"]); // not symmetric
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["sweep", "--n", "3", "--field", "fp:4"]); // composite modulus
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_clean_and_deterministic() {
    let a = run(&["sweep", "--n", "3", "--format", "json"]);
    let b = run(&["sweep", "--n", "3", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "byte-identical output");
    assert!(stdout(&a).contains("\"ok\":true"));
}

#[test]
fn json_output_is_deterministic_across_runs() {
    let args = [
        "show", "--n", "8", "--alg", "d", "--module", "E(8+,7-,6+,5-,4+,1-)", "--format", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["total_dim"], 54);
    assert_eq!(v["class"], "indecomposable");
}

#[test]
fn field_env_variable_is_honoured() {
    let o = bin()
        .args(["show", "--n", "3", "--alg", "d", "--module", "P(1+)", "--format", "json"])
        .env("DELTA_ORBIT_FIELD", "fp:7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"field\":\"fp:7\""), "{}", stdout(&o));
    // an explicit flag wins over the environment
    let o = bin()
        .args([
            "show", "--n", "3", "--alg", "d", "--module", "P(1+)", "--format", "json", "--field",
            "rat",
        ])
        .env("DELTA_ORBIT_FIELD", "fp:7")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("\"field\":\"rat\""), "{}", stdout(&o));
    // a bad value in the environment is a usage error
    let o = bin()
        .args(["show", "--n", "3", "--alg", "d", "--module", "P(1+)"])
        .env("DELTA_ORBIT_FIELD", "fp:2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn richardson_verify_passes() {
    let o = run(&["richardson", "--d", "1,3,5,3,5,3,1", "--verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"]["ok"], true);
    assert_eq!(v["variants"], 2);
}

#[test]
fn csv_output_has_header_and_rows() {
    let o = run(&["richardson", "--d", "1,3,5,4,5,3,1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "k,kind,f,g,e,I,J");
    assert_eq!(lines.len(), 4);
}
