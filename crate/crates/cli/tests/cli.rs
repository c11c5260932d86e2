use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn hopfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

fn datum<'a>(v: &'a Value, key: &str) -> &'a str {
    v["data"].as_array().unwrap().iter().find(|d| d["key"] == key).unwrap()["value"].as_str().unwrap()
}

#[test]
fn catalog_lists_at_least_fourteen_entries() {
    let o = hopfkit(&["catalog", "list", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert!(v.as_array().unwrap().len() >= 14);
    let text = stdout(&hopfkit(&["catalog", "list"]));
    assert!(text.lines().count() >= 14);
    assert!(text.contains("qplane-coaction"));
    for sub in ["suites", "mutations"] {
        assert!(hopfkit(&["catalog", sub]).status.success());
    }
}

#[test]
fn slq2_hopf_axioms_pass() {
    let o = hopfkit(&["verify", "SLq2", "--suite", "hopf-axioms", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["suite"], "hopf-axioms");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    assert!(v["version"].as_str().unwrap().starts_with("hopfkit "));
}

#[test]
fn quantum_plane_coinvariants_to_degree_four() {
    let o = hopfkit(&["verify", "qplane", "--suite", "coinvariants", "--degree", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(datum(&v, "basis"), "1");
    assert_eq!(v["checks"][0]["degree_bound"], 4);
    let o = hopfkit(&["coinv", "qplane-coaction", "--degree", "3"]);
    assert!(stdout(&o).contains("verified up to degree 3"));
}

#[test]
fn power_relations_for_u3() {
    let o = hopfkit(&["generic", "thm813", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn mutated_suite_prints_its_witness_and_fails() {
    let o = hopfkit(&["verify", "Uq", "--suite", "hopf-axioms", "--mutate", "antipode-sign"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let line = text.lines().find(|l| l.contains("[FAIL] antipode law S*id on E")).unwrap();
    assert!(line.ends_with(": 2*E"), "{line}");
    let o = hopfkit(&["verify", "Uq", "--suite", "generic", "--mutate", "antipode-sign"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_is_deterministic() {
    let args = ["generic", "fiber", "taft2", "--seed", "4", "--format", "json"];
    let a = hopfkit(&args);
    let b = hopfkit(&args);
    assert!(a.status.success());
    assert_eq!(without_timing(json(&a)), without_timing(json(&b)));
    let keys: Vec<String> = json(&a).as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["checks", "data", "elapsed_ms", "schema", "suite", "target", "version"]);
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(hopfkit(&["verify", "nope", "--suite", "hopf-axioms"]).status.code(), Some(2));
    assert_eq!(hopfkit(&["verify", "Uq", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(hopfkit(&["verify", "Uq", "--suite", "representation", "--q", "cyclotomic:2"]).status.code(), Some(2));
    assert_eq!(hopfkit(&["h2", "sym:3"]).status.code(), Some(2));
}

#[test]
fn cohomology_and_taft_commands() {
    let v = json(&hopfkit(&["h2", "product:[3,3,3]", "--format", "json"]));
    assert_eq!(datum(&v, "H2"), "Z/3 x Z/3 x Z/3");
    let v = json(&hopfkit(&["h2", "cyclic:12", "--format", "json"]));
    assert_eq!(datum(&v, "H2"), "trivial");
    let o = hopfkit(&["taft", "--N", "3", "--s", "1", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(datum(&json(&o), "beta matrix"), "81x81, rank 81");
}

#[test]
fn generic_subcommands() {
    let o = hopfkit(&["generic", "sigma", "taft2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("sigma(g, x) = t_1^-1*t_g*t_x - t_gx"));
    let o = hopfkit(&["generic", "assoc", "u4", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(datum(&json(&o), "triples"), "512");
    assert!(hopfkit(&["generic", "thm812"]).status.success());
    assert!(hopfkit(&["beta", "M3"]).status.success());
    assert!(hopfkit(&["grading", "Uq"]).status.success());
}

#[test]
fn user_catalog_directory() {
    let dir: PathBuf = std::env::temp_dir().join(format!("hopfkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = r#"{
      "name": "plane2",
      "description": "commutative plane",
      "ring": "base=rationals",
      "generators": ["X", "Y"],
      "relations": ["YX -> XY"]
    }"#;
    std::fs::write(dir.join("plane2.json"), src).unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_hopfkit")).args(args).env("HOPFKIT_CATALOG_DIR", &dir).output().unwrap()
    };
    assert!(stdout(&run(&["catalog", "list"])).contains("plane2"));
    let o = run(&["verify", "plane2", "--suite", "rewriting", "--degree", "3", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(datum(&json(&o), "basis words by degree"), "1 2 3 4");
    std::fs::remove_dir_all(&dir).unwrap();
}
