use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn semicat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semicat"))
        .args(args)
        .env_remove("SEMICAT_SIZE_CAP")
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_builtin(dir: &Path, name: &str) -> String {
    let out = semicat(&["zoo", name]);
    assert!(out.status.success());
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn malcev_on_brandt_is_false() {
    let dir = tempfile::tempdir().unwrap();
    let b21 = write_builtin(dir.path(), "b21");
    let out = semicat(&["malcev", &b21, "--h", "triv", "--v", "sl"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out), serde_json::json!({ "member": false }));
}

#[test]
fn malcev_on_group_is_true() {
    let out = semicat(&["malcev", "s3", "--h", "sol", "--v", "sl"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["member"], true);
}

#[test]
fn radical_of_s3() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write_builtin(dir.path(), "s3");
    let out = semicat(&["radical", &s3, "--pvar", "p:3"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["order"], 3);
}

#[test]
fn consolidate_trivial_category() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_builtin(dir.path(), "trivial_cat");
    let out = semicat(&["consolidate", &t]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["monoid"]["size"], 3);
}

#[test]
fn zoo_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let list = stdout_json(&semicat(&["zoo", "--list"]));
    for kind in ["monoids", "categories"] {
        for name in list[kind].as_array().unwrap() {
            let name = name.as_str().unwrap();
            let path = write_builtin(dir.path(), name);
            let original: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
            let cmd = if kind == "monoids" {
                "localmonoid"
            } else {
                "consolidate"
            };
            let out = if kind == "monoids" {
                semicat(&[cmd, &path, "--e", &original["identity"].to_string()])
            } else {
                semicat(&[cmd, &path])
            };
            assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
            if kind == "monoids" {
                assert_eq!(stdout_json(&out)["monoid"]["table"], original["table"], "{name}");
            }
        }
    }
}

#[test]
fn errors_carry_codes() {
    let out = semicat(&["radical", "s3", "--pvar", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "UnknownPredicate");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"size\": 2, \"identity\": 0, \"table\": [[0, 1]]}").unwrap();
    let out = semicat(&["green", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string());
}

#[test]
fn kernel_object_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_semicat"))
        .args(["kernel", "c4", "--pair", "0,2"])
        .env("SEMICAT_SIZE_CAP", "kernel=3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "SizeLimitExceeded");
    let out = semicat(&["kernel", "c4", "--pair", "0,2"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["objects"].as_array().unwrap().len(), 4);
}

#[test]
fn check_lh_and_factorization() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.json");
    std::fs::write(&k, "{\"classes\": [0, 1, 0, 1]}").unwrap();
    let out = semicat(&["check-lh", "c4", "--h", "p:2", "--congruence", k.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = semicat(&["check-lh", "c4", "--h", "triv", "--congruence", k.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = semicat(&["factor-mpq", "c4", "--pair", "0,1"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn supertech_and_canonical() {
    let out = semicat(&["supertech", "groupoid_c2", "--h", "p:2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["member"], true);
    assert_eq!(v["congruence"]["num_classes"], 4);
    let out = semicat(&["canon-lh", "s3", "--h", "p:3"]);
    assert_eq!(stdout_json(&out)["congruence"]["num_classes"], 2);
    let out = semicat(&["ggm", "c4", "--j", "0", "--h", "p:2"]);
    assert_eq!(stdout_json(&out)["congruence"]["num_classes"], 1);
}

#[test]
fn verify_named_suite_and_unknown() {
    let out = semicat(&["verify", "--suite", "putcha-schutzenberger", "--random", "30"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["passed"], true);
    let out = semicat(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_at_bound_eight() {
    let out = semicat(&["verify", "--all", "--bound", "8", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
