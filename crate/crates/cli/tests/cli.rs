use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use monocycle::boundary_ideal::boundary_ideal;
use monocycle::golod::golod4;
use monocycle::koszul::total_betti;
use monocycle::{FieldSpec, MonomialIdeal};
use serde_json::Value;
use tempfile::TempDir;

fn write_ideal(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn j_file(dir: &TempDir) -> PathBuf {
    write_ideal(dir, "J.ideal", "# four-cycle edge ideal\nn=4\nx1*x3\nx1*x4\nx2*x3\nx2*x4\n")
}

fn i3_file(dir: &TempDir) -> PathBuf {
    write_ideal(dir, "I3.ideal", "n=3\n[1,0,1]\nx2*x3\n")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monocycle")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golod4_on_j() {
    let dir = TempDir::new().unwrap();
    let o = run(&["golod4", "--ideal", path(&j_file(&dir))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Golod");
}

#[test]
fn x3_e12_is_not_a_boundary() {
    let dir = TempDir::new().unwrap();
    let o = run(&["is-boundary", "--ideal", path(&i3_file(&dir)), "--monomial", "x3", "--sigma", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a boundary"));
}

#[test]
fn witness_for_a_boundary() {
    let dir = TempDir::new().unwrap();
    let o = run(&["is-boundary", "--ideal", path(&i3_file(&dir)), "--monomial", "x3^2", "--sigma", "1,2", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("preimage: x3 e{1,2,3}"));
}

#[test]
fn non_cycle_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let o = run(&["is-boundary", "--ideal", path(&i3_file(&dir)), "--monomial", "x1", "--sigma", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "--ideal", path(&j_file(&dir)), "--char", "6"]).status.code(), Some(2));
    assert_eq!(run(&["golod4", "--ideal", path(&i3_file(&dir))]).status.code(), Some(2));
    let bad = write_ideal(&dir, "bad.ideal", "n=2\nx1\nx3\n");
    let o = run(&["betti", "--ideal", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn circuits_one_per_line() {
    let o = run(&["matroid", "circuits", "--n", "4", "--p", "2", "--sigma", "1,2", "--char", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "12,13,14\n12,23,24\n12,13,24,34\n12,14,23,34\n");
}

#[test]
fn symmetric_commands() {
    let o = run(&["symmetric", "vp", "--lambdas", "3,0,0,0;2,1,0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("p=4: fails"));
    assert_eq!(run(&["symmetric", "principal", "--lambda", "2,1,1,0"]).status.code(), Some(0));
    assert_eq!(run(&["symmetric", "principal", "--lambda", "2,1,0,0"]).status.code(), Some(1));
    assert_eq!(run(&["symmetric", "shifted", "--lambdas", "2,1,0;1,1,1"]).status.code(), Some(0));
}

#[test]
fn linquot_commands() {
    let dir = TempDir::new().unwrap();
    let i3 = i3_file(&dir);
    let o = run(&["linquot", "basis", "--ideal", path(&i3)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(x2*x3/x2) e2^e{1}"));
    assert!(stdout(&o).ends_with("verified\n"));
    let o = run(&["linquot", "check", "--ideal", path(&j_file(&dir))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("nice lifts: none"));
    let o = run(&["linquot", "betti", "--ideal", path(&j_file(&dir))]);
    assert_eq!(stdout(&o), "beta_1 = 4\nbeta_2 = 4\nbeta_3 = 1\n");
}

#[test]
fn output_does_not_depend_on_jobs() {
    let dir = TempDir::new().unwrap();
    let j = j_file(&dir);
    let one = stdout(&run(&["homology", "--ideal", path(&j), "--jobs", "1"]));
    let four = stdout(&run(&["homology", "--ideal", path(&j), "--jobs", "4"]));
    assert_eq!(one, four);
    assert!(one.contains("p=3 degree=[1,1,1,1] dim=1"));
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_slice(&run(&all).stdout).unwrap()
}

#[test]
fn json_reports_reverify() {
    let dir = TempDir::new().unwrap();
    let j = j_file(&dir);
    let i3 = i3_file(&dir);

    let v = json(&["boundary-ideal", "--ideal", path(&i3), "--sigma", "1,2"]);
    let ideal: MonomialIdeal = serde_json::from_value(v["ideal"].clone()).unwrap();
    let field: FieldSpec = serde_json::from_value(v["field"].clone()).unwrap();
    let sigma = serde_json::from_value(v["sigma"].clone()).unwrap();
    let again = serde_json::to_value(boundary_ideal(&ideal, sigma, field).unwrap()).unwrap();
    assert_eq!(v["boundary"], again);

    let v = json(&["golod4", "--ideal", path(&j)]);
    let ideal: MonomialIdeal = serde_json::from_value(v["ideal"].clone()).unwrap();
    assert_eq!(v["report"], serde_json::to_value(golod4(&ideal).unwrap()).unwrap());
    assert_eq!(v["verdict"], "Golod");

    let v = json(&["betti", "--ideal", path(&j), "--char", "2"]);
    let ideal: MonomialIdeal = serde_json::from_value(v["ideal"].clone()).unwrap();
    let field: FieldSpec = serde_json::from_value(v["field"].clone()).unwrap();
    assert_eq!(field, FieldSpec::prime(2).unwrap());
    assert_eq!(v["betti"], serde_json::to_value(total_betti(&ideal, field).unwrap()).unwrap());

    let v = json(&["homology", "--ideal", path(&j), "--multidegree", "1,1,1,1"]);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 5);
    assert_eq!(records[3], serde_json::json!({"degree": [1, 1, 1, 1], "p": 3, "dim": 1}));
}
