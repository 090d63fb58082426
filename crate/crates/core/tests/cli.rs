//! The `hodist` command line: outputs, JSON stability and exit codes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use hodist::cli::{run_cli_with, CliOutput, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
use hodist::corpus::generate;
use hodist::Limits;

fn data(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(rel).display().to_string()
}

fn hodist(args: &[&str]) -> CliOutput {
    let mut full = vec!["hodist"];
    full.extend_from_slice(args);
    run_cli_with(full, &Limits::default())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = hodist(&full);
    assert_eq!(out.status, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn distance_of_identity_and_constant() {
    let (c4, id, k) = (data("C4.space"), data("id.map"), data("consta.map"));
    let out = hodist(&["dist", &c4, &c4, &id, &k]);
    assert_eq!(out.status, EXIT_OK);
    assert!(out.stdout.starts_with("D = 1\ncertificate: {a,b,c} {a,b,d}\n"), "{}", out.stdout);
    let v = json(&["dist", &c4, &c4, &id, &k]);
    assert_eq!(v["distance"], 1);
    assert_eq!(v["certificate"], serde_json::json!([["a", "b", "c"], ["a", "b", "d"]]));
}

#[test]
fn circle_commands() {
    assert_eq!(hodist(&["circle", "dist", "3", "5"]).stdout, "D = 1\n");
    assert_eq!(hodist(&["circle", "dist", "-4", "-4"]).stdout, "D = 0\n");
    assert_eq!(json(&["circle", "ball", "2", "3/2"])["set"]["kind"], "ALL");
    assert_eq!(json(&["circle", "witness", "1", "2", "c"])["uncovered_witness"], 3);
    assert_eq!(json(&["circle", "witness"])["uncovered_witness"], 0);
    assert_eq!(json(&["circle", "witness", "-2", "-1", "0", "1", "2"])["uncovered_witness"], 3);
    assert_eq!(json(&["circle", "degree", &data("degree2.pl")])["degree"], 2);
}

#[test]
fn space_check_reports() {
    let out = hodist(&["space", "check", &data("discrete3.space")]);
    assert!(out.stdout.contains("normal: true\n") && out.stdout.contains("components: 3 "), "{}", out.stdout);
    let v = json(&["space", "check", &data("C4.space")]);
    assert_eq!(v["normal"], false);
    assert_eq!(v["normality_witness"], serde_json::json!({ "first": ["c"], "second": ["d"] }));
}

#[test]
fn cat_tc_and_infinity() {
    let c4 = data("C4.space");
    for method in ["cover", "dist", "incl"] {
        assert_eq!(json(&["cat", &c4, "--method", method])["distance"], 1);
    }
    let v = json(&["cat", &data("discrete3.space"), "--method", "dist"]);
    assert_eq!(v["distance"], "inf");
    assert!(v["warning"].is_string());
    assert_eq!(json(&["tc", &c4])["distance"], 3);
    assert_eq!(json(&["tc", &data("discrete3.space")])["distance"], "inf");
}

#[test]
fn structured_output_is_byte_stable() {
    let c4 = data("C4.space");
    for args in [
        vec!["--format", "json", "topology", c4.as_str(), c4.as_str()],
        vec!["--format", "json", "axioms", c4.as_str(), c4.as_str()],
        vec!["--format", "json", "maps", c4.as_str(), c4.as_str()],
        vec!["--format", "json", "tc", c4.as_str()],
    ] {
        let first = hodist(&args);
        assert_eq!(first.status, EXIT_OK);
        assert_eq!(first.stdout, hodist(&args).stdout);
    }
}

#[test]
fn topology_and_axioms_pass_on_pseudocircle() {
    let c4 = data("C4.space");
    let v = json(&["topology", &c4, &c4]);
    assert_eq!(v["carrier"].as_array().unwrap().len(), 36);
    assert_eq!(v["report"]["small_balls_indiscrete"], true);
    let q = json(&["topology", &c4, &c4, "--quotient"]);
    assert_eq!(q["carrier"].as_array().unwrap().len(), 5);
    let a = json(&["axioms", &c4, &c4]);
    assert_eq!(a["triangle"]["asserted"], false);
    assert_eq!(a["symmetric"]["holds"], true);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.space");
    fs::write(&bad, "{ not json").unwrap();
    let bad = bad.display().to_string();
    let c4 = data("C4.space");
    for args in [
        vec!["space", "check", "/nonexistent.space"],
        vec!["space", "check", bad.as_str()],
        vec!["frobnicate"],
        vec!["circle", "ball", "1", "0"],
        vec!["circle", "witness", "all"],
        vec!["cat", c4.as_str(), "--method", "dist", "--basepoint", "zz"],
        vec!["tc", c4.as_str(), "--max-points", "9"],
    ] {
        let out = hodist(&args);
        assert_eq!(out.status, EXIT_INPUT, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let guard = run_cli_with(["hodist", "maps", &c4, &c4], &Limits { max_maps: 5, ..Limits::default() });
    assert_eq!(guard.status, EXIT_INPUT);
    assert!(guard.stderr.contains("size guard"));
    assert_eq!(hodist(&["--help"]).status, EXIT_OK);
}

#[test]
fn binary_honours_max_maps_variable() {
    let c4 = data("C4.space");
    let run = |limit: &str| Command::new(env!("CARGO_BIN_EXE_hodist")).env("HODIST_MAX_MAPS", limit).args(["maps", &c4, &c4]).output().unwrap();
    let refused = run("5");
    assert_eq!(refused.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("HODIST_MAX_MAPS"));
    let fine = run("1000");
    assert_eq!(fine.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&fine.stdout).starts_with("maps: 36\n"));
}

fn small_corpus() -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), 3, "test-run", &Limits::default()).unwrap();
    let path = dir.path().to_path_buf();
    (dir, path)
}

#[test]
fn corpus_run_passes_and_reports_tampered_fixtures() {
    let (_guard, dir) = small_corpus();
    let dir_s = dir.display().to_string();
    let ok = hodist(&["corpus", "run", &dir_s]);
    assert_eq!(ok.status, EXIT_OK, "{}", ok.stdout);
    assert!(ok.stdout.contains("all checks passed"));

    let fixture = dir.join("fixtures/D3.json");
    let text = fs::read_to_string(&fixture).unwrap().replace("\"cat\": 2", "\"cat\": 1");
    fs::write(&fixture, text).unwrap();
    let failed = hodist(&["corpus", "run", &dir_s]);
    assert_eq!(failed.status, EXIT_CHECK_FAILED);
    assert!(failed.stdout.contains("VIOLATION fixtures_match on D3: cat: fixture 1 (oracle run test-run), engine 2"), "{}", failed.stdout);
}

#[test]
fn shipped_corpus_passes() {
    let v = {
        let out = hodist(&["--format", "json", "corpus", "run", &data("corpus")]);
        assert_eq!(out.status, EXIT_OK);
        serde_json::from_str::<Value>(&out.stdout).unwrap()
    };
    assert_eq!(v["spaces"], 24);
    assert_eq!(v["pairs"], 576);
    assert!(v["tallies"]["fixtures_match"]["checked"].as_u64().unwrap() > 100);
    assert_eq!(v["violations"], serde_json::json!([]));
}
