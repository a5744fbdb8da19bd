//! Command-line surface: listing, exit codes, output files and the cache.

use std::process::{Command, Output};

fn splinter(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splinter"))
        .args(args)
        .env("SPLINTER_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_and_filter() {
    let dir = tempfile::tempdir().unwrap();
    let all = splinter(&["list", "--format", "machine"], dir.path());
    assert!(all.status.success());
    let v: serde_json::Value = serde_json::from_slice(&all.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
    let cone = splinter(&["list", "cone", "--format", "machine"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&cone.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, vec!["quadric_cone", "general_type_cone"]);
}

#[test]
fn usage_and_validation_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let unknown_flag = splinter(&["list", "--bogus"], dir.path());
    assert_eq!(unknown_flag.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown_flag.stderr).contains("Usage"));
    assert_eq!(splinter(&["run", "nope"], dir.path()).status.code(), Some(2));
    assert_eq!(splinter(&["run", "quadric_cone", "--q", "3"], dir.path()).status.code(), Some(2));
    assert_eq!(splinter(&["run", "quadric_cone", "--p", "4"], dir.path()).status.code(), Some(2));
    assert_eq!(splinter(&["run", "hochster_family", "--p", "3", "--a", "7"], dir.path()).status.code(), Some(2));
}

#[test]
fn out_file_matches_machine_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = splinter(
        &["run", "--no-cache", "--format", "machine", "--out", out.to_str().unwrap(), "flag_audit", "--n-max", "4"],
        dir.path(),
    );
    assert!(o.status.success());
    assert_eq!(std::fs::read(&out).unwrap(), o.stdout);
    let table = splinter(&["run", "--no-cache", "flag_audit", "--n_max", "4"], dir.path());
    assert!(stdout(&table).contains("anticanonical_ample_all"));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["koszul_audit", "--d_max", "4"];
    let miss = splinter(&["cache", "get", args[0], args[1], args[2]], dir.path());
    assert!(miss.stdout.is_empty());
    assert!(splinter(&["cache", "put", args[0], args[1], args[2]], dir.path()).status.success());
    let hit = splinter(&["cache", "get", args[0], args[1], args[2]], dir.path());
    let fresh = splinter(&["run", "--no-cache", "--format", "machine", args[0], args[1], args[2]], dir.path());
    assert_eq!(hit.stdout, fresh.stdout);
    let cached = splinter(&["run", "--format", "machine", args[0], args[1], args[2]], dir.path());
    assert_eq!(cached.stdout, fresh.stdout);
    assert!(splinter(&["cache", "clear"], dir.path()).status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn mismatch_exit_code() {
    let bytes = splinter_cli::run_scenario(&splinter_cli::Scenario::new("hochster_char2", &[]).unwrap())
        .unwrap()
        .canonical_bytes();
    assert_eq!(splinter_cli::report_exit_code(&bytes), 0);
    let tampered = String::from_utf8(bytes).unwrap().replace("\"matched\": true", "\"matched\": false");
    assert_eq!(splinter_cli::report_exit_code(tampered.as_bytes()), 1);
}
