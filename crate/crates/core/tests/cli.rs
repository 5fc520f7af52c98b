use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value as Json;

fn mvtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvtool")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    mvtool(args).status.code().unwrap()
}

fn json(args: &[&str]) -> (i32, Json) {
    let out = mvtool(args);
    let j = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), j)
}

#[test]
fn holds_exits_zero() {
    assert_eq!(code(&["check", "--model", "C", "--sequent", "gamma_3", "--bound", "64"]), 0);
}

#[test]
fn counterexample_exits_one() {
    let (c, j) = json(&["check", "--model", "L(2)", "--sequent", "xi", "--bound", "3", "--json"]);
    assert_eq!(c, 1);
    assert_eq!(j["verdict"], "counterexample");
    assert_eq!(j["counterexample"]["x"], "1/2");
}

#[test]
fn capped_disjunction_that_fails_is_inconclusive() {
    // (1,0) is not a strong unit of Z^2; the capped disjunction cannot refute that.
    let (c, j) =
        json(&["check", "--model", "Z^2", "--unit", "(1,0)", "--sequent", "Lu.2", "--bound", "2", "--json"]);
    assert_eq!(c, 2);
    assert_eq!(j["verdict"], "inconclusive");
    assert!(!j["caveats"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&[]), 64);
    assert_eq!(code(&["check", "--model", "C"]), 64);
    assert_eq!(code(&["check", "--model", "Q", "--sequent", "xi"]), 64);
    assert_eq!(code(&["check", "--model", "C", "--sequent", "no_such_label"]), 64);
    assert_eq!(code(&["check", "--model", "C", "--sequent", "xi", "--bound", "0"]), 64);
    assert_eq!(code(&["roundtrip", "--group", "Z", "--algebra", "C"]), 64);
    assert_eq!(code(&["decompose", "--model", "Z", "--gens", "1"]), 64);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn carrier_cap_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_mvtool"))
        .args(["check", "--model", "Prod(C,C)", "--sequent", "MV.2", "--bound", "6"])
        .env("MVTOOL_MAX_CARRIER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("10"));
}

#[test]
fn sequents_from_files_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.seq");
    std::fs::write(&path, "# radical or coradical\ntrue |-[x] x <= neg x \\/ neg x <= x\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(code(&["check", "--model", "C", "--sequent", &arg]), 0);
    assert_eq!(code(&["check", "--model", "Prod(C,C)", "--sequent", &arg]), 1);

    let mut child = Command::new(env!("CARGO_BIN_EXE_mvtool"))
        .args(["check", "--model", "L(2)", "--sequent", "@-", "--bound", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"true |-[x] 2*x^2 = (2*x)^2").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("x = 1/2"));
}

#[test]
fn family_disagreement_and_agreement() {
    let (c, j) = json(&["check-family", "--model", "C", "--sequents", "P.1,P.2,P.3,beta", "--json"]);
    assert_eq!(c, 0);
    assert_eq!(j["comparisons"][0]["agree"], true);
    let (c, j) = json(&["check-family", "--model", "Prod(C,C)", "--sequents", "P.1,P.2,P.3,beta", "--json"]);
    assert_eq!(c, 1);
    assert_eq!(j["comparisons"][0]["left_verdict"], "counterexample");
    assert_eq!(j["comparisons"][0]["agree"], true);
}

#[test]
fn roundtrip_decompose_and_ant_check() {
    let (c, j) = json(&["roundtrip", "--group", "Lex(Z,Z)", "--bound", "3", "--json"]);
    assert_eq!(c, 0);
    assert_eq!(j["failures"], serde_json::json!([]));
    assert!(j["checked_pairs"].as_u64().unwrap() > 0);

    let (c, j) = json(&["decompose", "--model", "Prod(C,C,B)", "--gens", "(c,1-c,0),(0,0,1)", "--json"]);
    assert_eq!(c, 0);
    assert_eq!(j["atoms"], serde_json::json!(["(0,1,0)", "(0,0,1)", "(1,0,0)"]));
    assert_eq!(j["factor_descriptors"], serde_json::json!(["C", "B", "C"]));

    // A generator that separates nothing leaves C x C whole, which is not perfect.
    let (c, j) = json(&["decompose", "--model", "Prod(C,C)", "--gens", "(1,1)", "--json"]);
    assert_eq!(c, 1);
    assert_eq!(j["perfect_verdicts"][0]["verdict"], "counterexample");

    assert_eq!(code(&["ant-check", "--model", "Lex(Z,Z)", "--unit", "(1,0)", "--bound", "6"]), 0);
    assert_eq!(code(&["ant-check", "--model", "Z", "--unit", "2", "--bound", "4"]), 1);
}

#[test]
fn registry_list_shows_labels_and_locations() {
    let out = mvtool(&["registry-list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for label in ["MV.1", "xi", "P.3", "beta", "gamma_5", "chi_8", "rad_ideal.ix", "L.12", "M.14", "Ant.2"] {
        assert!(text.lines().any(|l| l.starts_with(label)), "{label} missing");
    }
    let (_, j) = json(&["registry-list", "--json"]);
    assert!(j["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["location"].as_str().is_some_and(|s| !s.is_empty())));
}

#[test]
fn sampled_checks_are_reproducible() {
    let args =
        ["check", "--model", "Prod(C,C)", "--sequent", "MV.6", "--samples", "200", "--seed", "7", "--json"];
    let strip = |mut j: Json| {
        j.as_object_mut().unwrap().remove("elapsed_ms");
        j
    };
    let (c1, a) = json(&args);
    let (c2, b) = json(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(strip(a.clone()), strip(b));
    assert_eq!(a["examined"], 200);
    assert_eq!(a["sampling"]["seed"], 7);
}
