use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosym"))
        .args(args)
        .output()
        .expect("spawn cosym")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_tmp(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("cosym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn validate_reports_and_exits_zero() {
    let o = run(&["validate", &data("g31.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("cocycle1: ok"), "{s}");
    assert!(s.contains("cosymplectic: YES"), "{s}");
    assert!(s.contains("reeb: e2"), "{s}");
}

#[test]
fn parameter_override_changes_the_answer() {
    // lam = 0 kills alpha
    let o = run(&["validate", &data("g31.alg"), "--params", "lam=0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("cosymplectic: NO"));
}

#[test]
fn unbound_parameter_stays_symbolic() {
    let o = run(&["validate", &data("g31_lam.alg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("volume: -lam"));
}

#[test]
fn exists_on_heisenberg_says_no() {
    let o = run(&["exists", &data("heisenberg5.alg")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NO"));
}

#[test]
fn exists_finds_a_witness() {
    let o = run(&["exists", &data("base3.alg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("YES"));
}

#[test]
fn lsa_keeps_the_parameter_symbolic() {
    let o = run(&["lsa", &data("g31_lam.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("e2.e3 = e1"), "{s}");
    assert!(s.contains("e3.e3 = -1/lam^2*e2"), "{s}");
}

#[test]
fn every_construction_extends() {
    for (c, file, reeb) in [
        ("a", "ext_a.ext", "reeb: e4"),
        ("B", "ext_b.ext", "reeb: e3"),
        ("c", "ext_c.ext", "reeb: e3"),
    ] {
        let o = run(&["extend", "--construction", c, "--data", &data(file), &data("base3.alg")]);
        assert_eq!(o.status.code(), Some(0), "construction {c}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains(reeb), "construction {c}");
    }
}

#[test]
fn symplectization_is_symplectic() {
    let o = run(&["symplectize", &data("base3.alg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("symplectic: YES"));
}

#[test]
fn json_report_shape() {
    let o = run(&["--json", "validate", &data("g31.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("valid json");
    assert_eq!(v["command"], "validate");
    assert!(v["input"].is_object());
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string());
        assert!(c["pass"].is_boolean());
    }
}

#[test]
fn json_failure_carries_a_defect() {
    let o = run(&["--json", "validate", &data("g31.alg"), "--params", "lam=0"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failing: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .collect();
    assert!(!failing.is_empty());
}

#[test]
fn malformed_input_exits_two() {
    let bad = write_tmp("bad.alg", "dim 3\nbracket 1 2 : one 1\n");
    let o = run(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn self_bracket_is_rejected() {
    let bad = write_tmp("self.alg", "dim 3\nbracket 1 1 : 1 2\nalpha : 1 3\nomega 1 2 : 1\n");
    let o = run(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_lie_bracket_fails_jacobi() {
    // [e1,e2]=e3, [e2,e3]=e2, [e1,e3]=e1 breaks Jacobi
    let f = write_tmp(
        "nonlie.alg",
        "dim 3\nbracket 1 2 : 1 3\nbracket 2 3 : 1 2\nbracket 1 3 : 1 1\nalpha : 1 3\nomega 1 2 : 1\n",
    );
    let o = run(&["validate", &f]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn missing_file_exits_two() {
    let o = run(&["validate", "/nonexistent/x.alg"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_round_trip() {
    let o = run(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let list = stdout(&o);
    let first = list.split_whitespace().next().unwrap().to_string();
    let o = run(&["catalog", "export", &first]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim 3"));
}

#[test]
fn unknown_catalog_entry_exits_two() {
    let o = run(&["catalog", "export", "no-such-thing"]);
    assert_eq!(o.status.code(), Some(2));
}
