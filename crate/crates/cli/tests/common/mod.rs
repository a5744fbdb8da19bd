#![allow(dead_code)]

use std::path::PathBuf;

use splinter_cli::{run_scenario, Scenario};

/// Scenario runs frozen as golden reports: (file stem, name, params).
pub const CASES: &[(&str, &str, &[(&str, &str)])] = &[
    ("hochster_char2", "hochster_char2", &[]),
    ("hochster_family_p2_a3", "hochster_family", &[("p", "2"), ("a", "3")]),
    ("hochster_family_p3_a4", "hochster_family", &[("p", "3"), ("a", "4")]),
    ("hochster_family_p3_a5", "hochster_family", &[("p", "3"), ("a", "5")]),
    ("quadric_cone_p3", "quadric_cone", &[("p", "3"), ("window", "-9,-1")]),
    ("quadric_cone_p5", "quadric_cone", &[("p", "5"), ("window", "-9,-1")]),
    ("general_type_cone_d4", "general_type_cone", &[("p", "2"), ("n", "2"), ("d", "4")]),
    ("general_type_cone_d5", "general_type_cone", &[("p", "2"), ("n", "2"), ("d", "5")]),
    ("elliptic_cover_supersingular", "elliptic_cover", &[("p", "2"), ("a3", "1")]),
    ("punctured_plane", "punctured_plane", &[("p", "2"), ("e_max", "4")]),
    ("p1_pullback_audit", "p1_pullback_audit", &[]),
    ("truncation_random_d2", "truncation_random", &[("seed", "7"), ("trials", "100"), ("d", "2")]),
    ("truncation_random_d3", "truncation_random", &[("seed", "7"), ("trials", "100"), ("d", "3")]),
    ("flag_audit", "flag_audit", &[("n_max", "8")]),
    ("koszul_audit", "koszul_audit", &[("d_max", "8")]),
];

pub fn scenario(name: &str, params: &[(&str, &str)]) -> Scenario {
    let given: Vec<(String, String)> = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    Scenario::new(name, &given).expect("valid scenario")
}

pub fn report_bytes(name: &str, params: &[(&str, &str)]) -> Vec<u8> {
    run_scenario(&scenario(name, params)).expect("scenario runs").canonical_bytes()
}

pub fn golden_path(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{stem}.json"))
}
