//! End-to-end CLI tests: exit codes, JSON contracts, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quivalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn catalog_list_names_every_family() {
    let out = run(&["catalog", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["A_lambda", "A_pq", "Omega_n", "L9p", "A1_lambda"] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn invariants_json_contract() {
    let out = run(&[
        "invariants",
        "--family",
        "A_lambda",
        "--param",
        "lambda=2",
        "--char",
        "0",
        "--json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    // Exactly one JSON document on stdout.
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["cartan"]["det"], 4);
    assert_eq!(v["dim_center"], 2);
    assert_eq!(v["loewy_length"], 3);
    assert_eq!(v["flags"]["special_biserial"], true);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "invariants",
        "--family",
        "L2p",
        "--char",
        "3",
        "--seed",
        "5",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn constraint_violation_exits_one_and_quotes_constraint() {
    let out = run(&[
        "catalog", "emit", "A_pq", "--param", "p=1", "--param", "q=1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("p+q >= 3"), "constraint not quoted: {err}");
}

#[test]
fn unbounded_presentation_exits_two() {
    let dir = std::env::temp_dir().join("quivalg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("free_loop.quiver");
    std::fs::write(&path, "field char=0\nvertex v\narrow a v v\n").unwrap();
    let out = run(&["build", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not bounded"));
}

#[test]
fn bad_file_exits_one_with_line_number() {
    let dir = std::env::temp_dir().join("quivalg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.quiver");
    std::fs::write(&path, "field char=0\nvertex v\nrel e1 - e1\n").unwrap();
    let out = run(&["build", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 3"));
}

#[test]
fn emit_then_build_roundtrip() {
    let out = run(&[
        "catalog", "emit", "Omega_n", "--param", "n=2", "--char", "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let dir = std::env::temp_dir().join("quivalg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("omega2.quiver");
    std::fs::write(&path, &text).unwrap();
    let built = run(&["build", path.to_str().unwrap()]);
    assert!(built.status.success(), "{}", stderr(&built));
    assert!(stdout(&built).contains("dimension: 10"));
}

#[test]
fn compare_family_specs() {
    let out = run(&[
        "compare",
        "family:L5p",
        "family:A1_lambda,lambda=2",
        "--char",
        "0",
        "--json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["overall"], "Distinguished");
    let distinguishing = v["distinguishing"].as_array().unwrap();
    assert!(distinguishing
        .iter()
        .any(|d| d.as_str().unwrap().starts_with("cartan.det")));
}

#[test]
fn verify_paper_char3_passes_and_char_all_reports_failures() {
    let out = run(&["verify-paper", "--char", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));

    // The full table contains the known divergent rows and must exit 3.
    let out = run(&["verify-paper", "--char", "all", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.len() > 25);
    assert!(rows.iter().any(|r| r["pass"] == false));
    assert!(rows.iter().filter(|r| r["pass"] == true).count() >= rows.len() - 4);
}

#[test]
fn gf4_lambda_parameter_accepted() {
    let out = run(&[
        "invariants",
        "--family",
        "L3p_lambda",
        "--param",
        "lambda=t+1",
        "--char",
        "2",
        "--degree",
        "2",
        "--modulus",
        "1,1,1",
        "--json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["dimension"], 12);
    assert_eq!(v["orthogonal_quotient"]["dims"][0], 3);
}
