use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

fn check(args: &[&str], file: &str, status: i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_gotzmann"))
        .arg("--json")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(status), "{args:?}");
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(stdout, golden(file), "{args:?}");
    let reparsed: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&reparsed).unwrap() + "\n",
        stdout
    );
}

#[test]
fn gotzmann_number() {
    check(&["gotzmann", "number", "2,3"], "gotzmann_number.json", 0);
}

#[test]
fn gotzmann_rep_without_representation() {
    check(&["gotzmann", "rep", "0,1"], "gotzmann_rep_no_rep.json", 1);
    let output = Command::new(env!("CARGO_BIN_EXE_gotzmann"))
        .args(["gotzmann", "rep", "0,1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8(output.stderr)
        .unwrap()
        .contains("NoGotzmannRepresentation"));
}

#[test]
fn chern_from_hp() {
    check(
        &["chern", "from-hp", "4,11/3,4,1/3"],
        "chern_from_hp.json",
        0,
    );
}

#[test]
fn usage_error_exit_status() {
    let output = Command::new(env!("CARGO_BIN_EXE_gotzmann"))
        .args(["macaulay", "rep"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}
