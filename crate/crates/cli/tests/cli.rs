use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let Output { status, stdout, stderr } =
        Command::new(env!("CARGO_BIN_EXE_orbigroupoid")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {stdout}"));
    (status.code().expect("exit code"), json, String::from_utf8(stderr).unwrap())
}

#[test]
fn check_embedding_on_s3_is_true() {
    let (code, v, _) = run(&["run", &data("check_s3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["task"], "check-embedding");
    assert_eq!(v["verdict"], true);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 4);
    let model = &v["details"]["local_models"][0];
    assert_eq!(model["fiber_size"], 3);
    assert_eq!(model["coset_count"], 3);
    assert_eq!(model["subgroup_normal"], false);
}

#[test]
fn teardrop_fails_with_a_local_model_witness() {
    let (code, v, stderr) = run(&["--report", "run", &data("check_teardrop.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], false);
    let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["witness"]["kind"], "coset-count");
    assert_eq!(failed[0]["witness"]["fiber"], 1);
    assert_eq!(failed[0]["witness"]["cosets"], 3);
    assert!(stderr.contains("witness"), "{stderr}");
}

#[test]
fn binary_dihedral_inertia_reports_the_loop_pair() {
    let (code, v, _) = run(&["run", &data("inertia_binary_dihedral.json")]);
    assert_eq!(code, 1);
    let check = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "loops-connected").unwrap();
    assert_eq!(check["pass"], false);
    assert_eq!(check["witness"]["first"], "(a,[e,0])");
    assert_eq!(check["witness"]["second"], "(a,[b,0])");
}

#[test]
fn verbs_and_tasks_agree() {
    let (code, direct, _) = run(&["check-embedding", "fixture:teardrop-bad"]);
    let (_, task, _) = run(&["run", &data("check_teardrop.json")]);
    assert_eq!(code, 1);
    assert_eq!(direct["checks"], task["checks"]);
}

#[test]
fn exit_code_matrix() {
    let cases: [(&[&str], i32); 12] = [
        (&["validate", &data("z3.json")], 0),
        (&["validate", &data("bs3.json")], 0),
        (&["validate", &data("not_a_group.json")], 1),
        (&["validate", &data("dangling.json")], 2),
        (&["validate", &data("syntax.json")], 2),
        (&["validate", &data("missing.json")], 2),
        (&["check-embedding", "fixture:diagonal-z2"], 0),
        (&["check-embedding", "fixture:double-cover"], 1),
        (&["check-embedding", "fixture:no-such-fixture"], 2),
        (&["check-morita", &data("bs3.json"), "fixture:s3/codomain"], 0),
        (&["check-morita", &data("bs3.json"), "fixture:s3/domain"], 1),
        (&["immerse-to-embedding", "fixture:double-cover/immersion"], 1),
    ];
    for (args, expected) in cases {
        let (code, _, stderr) = run(args);
        assert_eq!(code, expected, "{args:?}: {stderr}");
    }
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let (code, v, _) = run(&["validate", &data("syntax.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "syntax");
    assert_eq!(v["line"], 4);
    assert!(v["column"].as_u64().unwrap() >= 1);
}

#[test]
fn dangling_references_are_unresolved() {
    let (_, v, _) = run(&["validate", &data("dangling.json")]);
    assert_eq!(v["error"], "unresolved-reference");
    assert!(v["message"].as_str().unwrap().contains("nowhere"));
}

#[test]
fn parsed_documents_have_the_expected_shape() {
    let (_, z3, _) = run(&["validate", &data("z3.json")]);
    assert_eq!(z3["details"]["order"], 3);
    let (_, bs3, _) = run(&["validate", &data("bs3.json")]);
    assert_eq!(bs3["details"]["objects"], 1);
    assert_eq!(bs3["details"]["arrows"], 6);
    let (_, bd, _) = run(&["validate", &data("binary_dihedral_group.json")]);
    assert_eq!(bd["details"]["order"], 12);
    assert_eq!(bd["details"]["abelian"], false);
}

#[test]
fn fixture_listing_matches_the_library() {
    let (code, v, _) = run(&["fixtures"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["fixtures"].as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap()).collect();
    assert_eq!(names, orbigroupoid::fixtures::FIXTURE_NAMES);
    let (_, doc, _) = run(&["fixtures", "teardrop-good"]);
    assert_eq!(doc["kind"], "morphism");
    assert_eq!(doc["domain"]["translation"]["points"].as_array().unwrap().len(), 3);
}

#[test]
fn task_inputs_resolve_relative_to_the_task() {
    let (code, v, _) = run(&["run", &data("morita_task.json")]);
    assert_eq!(code, 1, "{v}");
    assert_eq!(v["task"], "check-morita");
}

#[test]
fn remaining_verbs_succeed_on_fixtures() {
    let cases: [(&[&str], i32); 9] = [
        (&["orbit-space", "fixture:z6-over-z3/domain"], 0),
        (&["isotropy", "fixture:s3/codomain", "--object", "pt"], 0),
        (&["inertia", "fixture:binary-dihedral/domain"], 0),
        (&["check-equivalence", "fixture:s3"], 1),
        (&["fiber-product", "fixture:s3", "fixture:teardrop-good"], 2),
        (&["embed-to-immersion", "fixture:teardrop-good"], 0),
        (&["immerse-to-embedding", "fixture:diagonal-sheets/immersion"], 0),
        (&["roundtrip", "fixture:s3"], 0),
        (&["roundtrip", "fixture:teardrop-bad"], 2),
    ];
    for (args, expected) in cases {
        let (code, v, stderr) = run(args);
        assert_eq!(code, expected, "{args:?}: {v} {stderr}");
    }
}

#[test]
fn runs_are_deterministic() {
    for name in orbigroupoid::fixtures::FIXTURE_NAMES {
        let reference = format!("fixture:{name}");
        let (c1, mut a, _) = run(&["check-embedding", &reference]);
        let (c2, mut b, _) = run(&["check-embedding", &reference]);
        a["timings"] = Value::Null;
        b["timings"] = Value::Null;
        assert_eq!((c1, a), (c2, b), "{name}");
    }
    let (_, mut a, _) = run(&["--seed", "11", "properties", "--cases", "8"]);
    let (_, mut b, _) = run(&["--seed", "11", "properties", "--cases", "8"]);
    a["timings"] = Value::Null;
    b["timings"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn property_suites_pass() {
    let (code, v, _) = run(&["--seed", "5", "properties", "--cases", "16"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);
}
