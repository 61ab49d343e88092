use std::io::Write;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disthom")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reports_lattice_invariants() {
    let o = run(&["check", &data("chain3.json"), "--adjoin-trivial", "left,right"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("multishelf: true"));
    assert!(out.contains("distributive true, J = 2"));
}

#[test]
fn homology_json_has_groups_per_degree() {
    let o = run(&[
        "homology", &data("b1.json"), "--adjoin-trivial", "left,right", "--scalars", "1,-1,-1,1",
        "--part", "full", "--max-degree", "3", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["groups"].as_array().unwrap().len(), 4);
    assert_eq!(v["chain_ranks"][2], 8);
    assert!(v["groups"][0].is_string());
}

#[test]
fn closed_form_and_snf_agree_on_b1() {
    let snf = run(&[
        "homology", &data("b1.json"), "--adjoin-trivial", "left,right", "--scalars", "2,0,0,-2",
        "--part", "cf:0", "--max-degree", "3", "--format", "json",
    ]);
    let cf = run(&["closed-form", "--b1", "--scalars", "2,0,0,-2", "--part", "cf", "--max-degree", "3", "--format", "json"]);
    assert_eq!(code(&snf), 0);
    assert_eq!(code(&cf), 0);
    let a: serde_json::Value = serde_json::from_str(&stdout(&snf)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&cf)).unwrap();
    assert_eq!(a["groups"], b["groups"]);
}

#[test]
fn malformed_table_is_an_input_error() {
    assert_eq!(code(&run(&["check", &data("bad.json")])), 2);
}

#[test]
fn unreadable_json_is_an_input_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(b"{ not json").unwrap();
    assert_eq!(code(&run(&["check", f.path().to_str().unwrap()])), 2);
}

#[test]
fn trivial_ops_need_a_multishelf() {
    let o = run(&["compare", &data("n5.json"), "--adjoin-trivial", "left,right", "--scalars", "1,1,1,1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = run(&[
        "homology", &data("chain3.json"), "--adjoin-trivial", "left,right", "--scalars", "1,1,1,1",
        "--max-degree", "6", "--budget", "100",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn strict_reduction_refuses_non_unital_input() {
    let args = ["reduce", &data("example2.json"), "--adjoin-trivial", "left,right", "--scalars", "4,5,2,0"];
    assert_eq!(code(&run(&args)), 2);
    let mut lenient = args.to_vec();
    lenient.push("--lenient");
    assert_eq!(code(&run(&lenient)), 0);
}

#[test]
fn enumerate_lists_classes() {
    let o = run(&["enumerate", "--size", "4", "--predicate", "lattice", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn census_csv_has_a_header() {
    let o = run(&["census", "--table", "1", "--sizes", "3..3", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("table,row,column,raw,iso,iso_duality"));
    assert_eq!(code(&run(&["census", "--table", "3"])), 2);
}

#[test]
fn reproduce_b1_grid_passes() {
    assert_eq!(code(&run(&["reproduce", "--target", "b1-grid"])), 0);
}

#[test]
fn reproduce_orbit_tables_flags_the_known_cell() {
    let o = run(&["reproduce", "--target", "paper-6.4-tables", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let bad: Vec<_> = v["examples"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|e| e["cells"].as_array().unwrap().iter().map(move |c| (e["name"].clone(), c.clone())))
        .filter(|(_, c)| !(c["actual_ok"].as_bool().unwrap() && c["predicted_ok"].as_bool().unwrap()))
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].0, "example 1");
    assert_eq!(bad[0].1["degree"], 1);
}

#[test]
fn unknown_target_is_rejected() {
    assert_eq!(code(&run(&["reproduce", "--target", "nope"])), 2);
}
