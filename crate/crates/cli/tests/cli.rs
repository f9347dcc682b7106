mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::data_dir;
use homlie::format::{read_model, Model};
use serde_json::Value;

fn homlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlie")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    data_dir().join(name).display().to_string()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = homlie(&full);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), doc)
}

fn any_failure(doc: &Value) -> bool {
    doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap())
        .any(|c| c["passed"] == false)
}

fn check_names(doc: &Value) -> Vec<String> {
    doc["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn builtin_then_check_passes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sl2.toml");
    let f = file.to_str().unwrap();
    assert_eq!(homlie(&["builtin", "sl2", "--out", f]).status.code(), Some(0));
    assert_eq!(read_model(&file).unwrap(), common::fixture("sl2.toml"));
    let out = homlie(&["check", f]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("hom-Jacobi"));
}

#[test]
fn construct_string_then_check_shows_all_conditions() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("string.toml");
    let o = out_file.to_str().unwrap();
    let (code, _) = json(&["construct", "string", &data("sl2.toml"), "--out", o]);
    assert_eq!(code, 0);
    let (code, doc) = json(&["check", o]);
    assert_eq!(code, 0);
    let names = check_names(&doc);
    for c in ["(a)", "(b)", "(c)", "(d)", "(e)", "(f)", "(g)", "(h)", "(i)", "(j)"] {
        assert!(names.iter().any(|n| n == c), "missing {c}");
    }
    assert_eq!(doc["passed"], true);
}

#[test]
fn cohomology_of_sl2_in_degree_three() {
    let (code, doc) = json(&["cohomology", &data("sl2.toml"), "--rep", "trivial", "--k", "3"]);
    assert_eq!(code, 0);
    let c = &doc["cohomology"];
    assert_eq!(
        (c["cochains"].as_u64(), c["cocycles"].as_u64(), c["coboundaries"].as_u64(), c["cohomology"].as_u64()),
        (Some(1), Some(1), Some(0), Some(1))
    );
}

#[test]
fn cohomology_with_a_representation_file() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("adjoint.toml");
    let g = match common::fixture("sl2.toml") {
        Model::HomLie(g) => g,
        _ => unreachable!(),
    };
    homlie::format::write_model(&rep, &Model::Representation(homlie_core::cohomology::adjoint_representation(&g)))
        .unwrap();
    let (code, doc) = json(&["cohomology", &data("sl2.toml"), "--rep", rep.to_str().unwrap(), "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["cohomology"]["cochains"], 5);
    assert_eq!(doc["cohomology"]["cohomology"], 0);
    let (code, _) = json(&["cohomology", &data("sl2.toml"), "--rep", "adjoint", "--k", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn failing_check_exits_one_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    let text = std::fs::read_to_string(data_dir().join("sl2.toml")).unwrap();
    // [A, B] = -C becomes [A, B] = 1 - C, breaking skew-symmetry.
    let broken = text.replacen("\"0 0 -1\"", "\"1 0 -1\"", 1);
    assert_ne!(broken, text);
    std::fs::write(&bad, broken).unwrap();
    let (code, doc) = json(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let failing: Vec<&Value> = doc["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().any(|c| c["witness"].is_array()));
}

#[test]
fn exit_code_is_one_exactly_when_a_check_fails() {
    for name in [
        "sl2.toml",
        "sl2_quadratic.toml",
        "sl2_string.toml",
        "sl2_strict.toml",
        "abelian_strict.toml",
        "abelian_symplectic.toml",
        "symplectic_oracle.toml",
        "leftsym_oracle.toml",
        "leftsym_counterexample.toml",
        "crossed_oracle.toml",
    ] {
        let (code, doc) = json(&["check", &data(name)]);
        assert_eq!(code == 1, any_failure(&doc), "{name}");
        assert_eq!(code == 0, doc["passed"] == true, "{name}");
    }
    let (code, _) = json(&["check", &data("leftsym_counterexample.toml")]);
    assert_eq!(code, 0, "the counterexample satisfies every stated condition on d");
}

#[test]
fn constructions_from_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let out = |n: &str| dir.path().join(n).display().to_string();
    let cases = [
        ("skeletal", "sl2_quadratic.toml", 0),
        ("crossed-from-strict", "sl2_strict.toml", 0),
        ("strict-from-crossed", "crossed_oracle.toml", 0),
        ("strict-from-symplectic", "symplectic_oracle.toml", 0),
        ("strict-from-symplectic", "abelian_symplectic.toml", 0),
        ("strict-from-leftsym", "leftsym_oracle.toml", 0),
        ("strict-from-leftsym", "leftsym_counterexample.toml", 1),
    ];
    for (i, (what, input, expected)) in cases.into_iter().enumerate() {
        let target = out(&format!("{i}.toml"));
        let (code, doc) = json(&["construct", what, &data(input), "--out", &target]);
        assert_eq!(code, expected, "{what} {input}: {doc}");
        assert!(Path::new(&target).exists());
    }
    let (code, doc) = json(&["construct", "strict-from-leftsym", &data("leftsym_counterexample.toml"), "--out", &out("x.toml")]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = doc["reports"][1]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["(e)"]);
}

#[test]
fn roundtrip_reports_beta_identity() {
    for name in ["sl2_string.toml", "sl2_strict.toml", "abelian_strict.toml", "symplectic_oracle_strict.toml"] {
        let (code, doc) = json(&["roundtrip", &data(name)]);
        assert_eq!(code, 0, "{name}");
        let names: Vec<String> = doc["reports"][2]["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["name"].as_str().unwrap().to_string())
            .collect();
        assert!(names.iter().any(|n| n.starts_with("beta")));
    }
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let zero_den = write("z.toml", "kind = \"hom_lie\"\ndim = 1\nbracket = [\"0\"]\nphi = [\"1/0\"]\n");
    let out = homlie(&["check", &zero_den]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");

    let extra = write("e.toml", "kind = \"hom_lie\"\ndim = 1\nbracket = [\"0\"]\nphi = [\"1\"]\nextra = 1\n");
    assert_eq!(homlie(&["check", &extra]).status.code(), Some(2));

    assert_eq!(homlie(&["check", "/nonexistent/file.toml"]).status.code(), Some(2));
    assert_eq!(homlie(&["roundtrip", &data("sl2.toml")]).status.code(), Some(2));
    assert_eq!(
        homlie(&["cohomology", &data("sl2.toml"), "--rep", "trivial", "--k", "0"]).status.code(),
        Some(2)
    );
    // the string construction needs a semisimple algebra
    let abelian = write("a.toml", "kind = \"hom_lie\"\ndim = 1\nbracket = [\"0\"]\nphi = [\"1\"]\n");
    let target = dir.path().join("o.toml").display().to_string();
    assert_eq!(homlie(&["construct", "string", &abelian, "--out", &target]).status.code(), Some(2));
}

#[test]
fn unknown_subcommand_prints_usage() {
    let out = homlie(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Usage"), "{err}");
    assert!(err.contains("cohomology"), "{err}");
}
