use std::io::Write;
use std::process::{Command, Output};

use bicyclic_ext::{EndoNormalForm, FnMap, MonoidPart, Triple, WindowMap};

fn bicyclic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn mul_prints_triple_notation() {
    let out = bicyclic(&["mul", "(2,1,[0))", "(3,4,[1))"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(4,4,[1))\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bicyclic(&["mul", "(1,2,[3))", "(0,0,[0))"]).status.code(), Some(2));
    assert_eq!(bicyclic(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(bicyclic(&["endo-apply", "--expr", "gamma[", "(0,0,[0))"]).status.code(), Some(2));
}

#[test]
fn factor_output() {
    let out = bicyclic(&["endo-factor", "--expr", "alpha[2,1];w^3"]);
    assert_eq!(stdout(&out), "alpha[2,1] ; w^3\ns=1 p=1 n=3\n");
}

#[test]
fn family_check_witness() {
    let out = bicyclic(&["family-check", "0,2"]);
    assert_eq!(stdout(&out), "not ω-closed: witness [0)∩(−1+[2)) = [1)\n");
}

#[test]
fn classify_map_file() {
    let e = EndoNormalForm::new(MonoidPart::Beta { k: 3, p: 1 }, 2).unwrap();
    let map = WindowMap::tabulate(&e, 8).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(map.to_json().as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();

    let out = bicyclic(&["endo-classify", "--map", path]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout(&out), "beta[3,1];w^2\n");

    let out = bicyclic(&["--json", "endo-classify", "--map", path]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["expr"], "beta[3,1];w^2");
    assert_eq!(v["predicates"]["injective"], true);
}

#[test]
fn classify_rejects_non_endomorphism() {
    let broken = WindowMap::tabulate(&FnMap(Some), 4)
        .unwrap()
        .with_entry(Triple::new(0, 0, 1), Triple::new(0, 0, 0))
        .unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(broken.to_json().as_bytes()).unwrap();
    let out = bicyclic(&["endo-classify", "--map", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an endomorphism"));
}

#[test]
fn classify_rejects_small_window() {
    let tiny = WindowMap::tabulate(&FnMap(Some), 1).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(tiny.to_json().as_bytes()).unwrap();
    let out = bicyclic(&["endo-classify", "--map", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_stream() {
    let out = bicyclic(&["--json", "verify", "--window", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let reports: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(reports.len() > 20);
    assert!(reports.iter().all(|r| r["violation_count"] == 0));
    assert_eq!(bicyclic(&["verify", "--window", "9"]).status.code(), Some(2));
}
