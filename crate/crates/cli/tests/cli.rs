//! End-to-end runs of the `roughfca` binary.

use std::fs;
use std::process::{Command, Output};

fn roughfca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_roughfca"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn lattice_and_dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let cxt = dir.path().join("ex1.cxt");
    fs::write(&cxt, "B\nex1\n3\n3\na\nb\nc\nx\ny\nz\n.XX\n...\n...\n").unwrap();
    let dot = dir.path().join("ex1.dot");
    let out = roughfca(&[
        "lattice",
        cxt.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3 concepts"));
    let rendered = fs::read_to_string(&dot).unwrap();
    assert_eq!(rendered.matches("label=").count(), 3);
    assert_eq!(rendered.matches(" -> ").count(), 2);
}

#[test]
fn malformed_cxt_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let cxt = dir.path().join("bad.cxt");
    fs::write(&cxt, "B\n\n2\n2\no1\no2\nf1\nf2\nX.\nX\n").unwrap();
    let out = roughfca(&["lattice", cxt.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 10"));
}

#[test]
fn classify_permissive_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("ctx.json");
    // the running example: R is not I-compatible
    fs::write(
        &json,
        r#"{
            "objects": ["a", "b", "c"],
            "features": ["x", "y", "z"],
            "incidence": [[0,1,1],[0,0,0],[0,0,0]],
            "box": [[0,1,1],[1,0,0],[0,0,0]],
            "diamond": [[0,1,0],[1,0,0],[1,0,0]]
        }"#,
    )
    .unwrap();
    let strict = roughfca(&["classify", json.to_str().unwrap()]);
    assert!(!strict.status.success());
    let permissive = roughfca(&["classify", json.to_str().unwrap(), "--permissive"]);
    assert!(permissive.status.success());
    assert!(stdout(&permissive).contains("verified: false"));
}

#[test]
fn correspond_random_run_agrees() {
    let out = roughfca(&[
        "correspond",
        "--item",
        "2",
        "--random",
        "100",
        "--max",
        "4",
        "--seed",
        "42",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("agree=100/100"));
    // determinism: identical output for the same seed
    let again = roughfca(&[
        "correspond",
        "--item",
        "2",
        "--random",
        "100",
        "--max",
        "4",
        "--seed",
        "42",
    ]);
    assert_eq!(stdout(&out), stdout(&again));
}

#[test]
fn correspond_requires_seed() {
    let out = roughfca(&["correspond", "--item", "2", "--random", "10"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));
}

#[test]
fn correspond_exhaustive_and_triangle_items() {
    let out = roughfca(&["correspond", "--item", "T1", "--exhaustive-two"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let tail = text.rsplit("agree=").next().unwrap();
    let (passed, checked) = tail.trim().split_once('/').unwrap();
    assert_eq!(passed, checked.trim());
}

#[test]
fn correspond_replays_a_context_file() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("ctx.json");
    let gen = roughfca(&[
        "random-context",
        "--objects",
        "3",
        "--features",
        "3",
        "--seed",
        "77",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let out = roughfca(&["correspond", "--item", "1", "--context", json.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("agree=true"));
    // replays identically
    let again = roughfca(&["correspond", "--item", "1", "--context", json.to_str().unwrap()]);
    assert_eq!(stdout(&out), stdout(&again));
}

#[test]
fn correspond_with_no_mode_is_an_error() {
    let out = roughfca(&["correspond", "--item", "1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("nothing to check"));
}

#[test]
fn lift_kripke_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("frame.json");
    fs::write(
        &json,
        r#"{"states": ["a","b","c"], "rel": [[1,0,0],[0,1,1],[0,1,1]]}"#,
    )
    .unwrap();
    let out = roughfca(&["lift-kripke", json.to_str().unwrap(), "--verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("approximation space: true"));
    assert!(text.contains("isomorphism: pass"));
}

#[test]
fn random_context_round_trips_through_classify() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("random.json");
    let out = roughfca(&[
        "random-context",
        "--objects",
        "3",
        "--features",
        "3",
        "--seed",
        "1",
        "--reflexive",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let classify = roughfca(&["classify", json.to_str().unwrap()]);
    assert!(classify.status.success());
    assert!(stdout(&classify).contains("reflexive: true"));
    // same seed, same context
    let json2 = dir.path().join("random2.json");
    roughfca(&[
        "random-context",
        "--objects",
        "3",
        "--features",
        "3",
        "--seed",
        "1",
        "--reflexive",
        "--out",
        json2.to_str().unwrap(),
    ]);
    assert_eq!(
        fs::read_to_string(&json).unwrap(),
        fs::read_to_string(&json2).unwrap()
    );
    let missing_seed = roughfca(&["random-context", "--objects", "3", "--features", "3"]);
    assert!(!missing_seed.status.success());
}

#[test]
fn sequent_validity_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("ctx.json");
    // empty box relation on the running example: box collapses the middle
    // concept to bottom, so box p |- p is valid while p |- box p is not
    fs::write(
        &json,
        r#"{
            "objects": ["a", "b", "c"],
            "features": ["x", "y", "z"],
            "incidence": [[0,1,1],[0,0,0],[0,0,0]],
            "box": [[0,0,0],[0,0,0],[0,0,0]],
            "diamond": [[0,0,0],[0,0,0],[0,0,0]]
        }"#,
    )
    .unwrap();
    let valid = roughfca(&["sequent", json.to_str().unwrap(), "box p |- p"]);
    assert!(valid.status.success());
    assert!(stdout(&valid).contains("valid"));
    let invalid = roughfca(&["sequent", json.to_str().unwrap(), "p |- box p"]);
    assert!(!invalid.status.success());
    assert!(stdout(&invalid).contains("not valid"));
    // the failure report replays deterministically
    let invalid_again = roughfca(&["sequent", json.to_str().unwrap(), "p |- box p"]);
    assert_eq!(stdout(&invalid), stdout(&invalid_again));
}

#[test]
fn mv_preserve_builtin_and_file() {
    let out = roughfca(&["mv-preserve", "--algebra", "godel3", "--worlds", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("81/81"));

    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("alg.json");
    fs::write(
        &json,
        r#"{"name": "chain3", "carrier": ["0","u","1"], "leq": [["0","u"],["u","1"]]}"#,
    )
    .unwrap();
    let sampled = roughfca(&[
        "mv-preserve",
        "--algebra",
        json.to_str().unwrap(),
        "--worlds",
        "2",
        "--samples",
        "20",
        "--seed",
        "5",
    ]);
    assert!(sampled.status.success());
    assert!(stdout(&sampled).contains("20/20"));
}

#[test]
fn ds_check_space() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("space.json");
    fs::write(
        &json,
        r#"{"carrier": ["1","2","3"], "blocks": [["1"],["2","3"]], "weights": ["2/5","3/5"]}"#,
    )
    .unwrap();
    let out = roughfca(&["ds-check", json.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("failed=0"));
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"carrier": ["1","2"], "blocks": [["1"]], "weights": ["1"]}"#,
    )
    .unwrap();
    assert!(!roughfca(&["ds-check", bad.to_str().unwrap()])
        .status
        .success());
}

#[test]
fn unknown_subcommand_fails() {
    let out = roughfca(&["no-such-command"]);
    assert!(!out.status.success());
}
