use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn tutte(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tutte")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tutte-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn wheel_file(dir: &std::path::Path) -> String {
    let p = dir.join("w5.graph");
    let o = tutte(&["gen", "--family", "wheel", "--n", "6", "-o", p.to_str().unwrap()]);
    assert!(o.status.success());
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_then_validate() {
    let dir = scratch("validate");
    let f = wheel_file(&dir);
    let o = tutte(&["validate", &f]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["circuit_graph"], true);
    assert_eq!(v["profile"]["kappa"], 3);
}

#[test]
fn validate_rejects_a_hidden_component() {
    let dir = scratch("hidden");
    let p = dir.join("bad.graph");
    // Square 1..4 with 5 and 6 joined only to 1 and 2.
    fs::write(&p, "planegraph v1\nn 6\n1: 2 5 6 4\n2: 3 6 5 1\n3: 4 2\n4: 1 3\n5: 1 2 6\n6: 5 2 1\nouter: 1 2 3 4\n")
        .unwrap();
    let o = tutte(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("HiddenComponent"));
}

#[test]
fn validate_rejects_garbage() {
    let dir = scratch("garbage");
    let p = dir.join("x.graph");
    fs::write(&p, "not a graph\n").unwrap();
    assert_eq!(tutte(&["validate", p.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn path_json_reports_thirds() {
    let dir = scratch("path");
    let f = wheel_file(&dir);
    let o = tutte(&["path", &f, "--mode", "two-edge", "--u", "1", "--v", "5", "--e", "3-4", "--f", "1-2", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["satisfied"], true);
    assert_eq!(v["report"]["bridge_count"], 0);
    assert!(v["report"]["budget_thirds"].is_i64());
    assert_eq!(v["path"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_with_oracle() {
    let dir = scratch("verify");
    let f = wheel_file(&dir);
    for args in [
        vec!["--mode", "edge", "--u", "1", "--v", "4", "--e", "2-3"],
        vec!["--mode", "vertex", "--u", "1", "--v", "4", "--z", "2"],
        vec!["--mode", "vertex-edge", "--u", "1", "--v", "5", "--z", "2", "--e", "3-4"],
        vec!["--mode", "cycle3", "--e", "1-6", "--f", "6-2", "--g", "2-1"],
    ] {
        let mut full = vec!["verify", f.as_str()];
        full.extend(args);
        full.push("--oracle");
        let o = tutte(&full);
        assert!(o.status.success(), "{full:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("ok"));
    }
}

#[test]
fn missing_flag_is_an_error() {
    let dir = scratch("missing");
    let f = wheel_file(&dir);
    let o = tutte(&["path", &f, "--mode", "two-edge", "--u", "1", "--v", "5", "--e", "3-4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--f"));
}

#[test]
fn stress_clean_and_mutated() {
    let dir = scratch("stress");
    let out = dir.join("fails");
    let base =
        ["stress", "--nmax", "8", "--count", "2", "--seed", "3", "--per-op", "3", "--out", out.to_str().unwrap()];
    let o = tutte(&base);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("violations 0"));
    assert!(!out.exists());

    let mut mutated = base.to_vec();
    mutated.extend(["--mutation", "trivial-bridges", "--json"]);
    let o = tutte(&mutated);
    assert_eq!(o.status.code(), Some(1));
    let s: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(s["violations"].as_u64().unwrap() > 0);
    let written = fs::read_dir(&out).unwrap().count();
    assert_eq!(written as u64, 2 * s["violations"].as_u64().unwrap());
}
