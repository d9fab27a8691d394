use std::process::Command;

use skein::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn skein(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("skein").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn nf_rewrites_crossing_pair() {
    let (code, out, _) = skein(&["nf", "--n", "4", "s24 s13"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next().unwrap(), "s13 s24 + (q^2 - q^-2)*s14 s23 + (-q^2 + q^-2)*s12 s34");
    assert!(out.contains("unverifiedWindow false"));
}

#[test]
fn nf_json_has_report_fields() {
    let (code, out, _) = skein(&["nf", "--n", "4", "--format", "json", "--trace", "s24 s13"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    for key in ["result", "steps", "trace", "maxAlphaPow", "unverifiedWindow"] {
        assert!(v.get(key).is_some(), "missing {key} in {out}");
    }
    assert_eq!(v["steps"], 1);
}

#[test]
fn nf_parse_error_fails() {
    let (code, _, err) = skein(&["nf", "--n", "3", "s14"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(err.contains("out of range"), "{err}");
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(skein(&["nf", "--bogus", "t1"]).0, EXIT_USAGE);
    assert_eq!(skein(&["frobnicate"]).0, EXIT_USAGE);
    let (code, out, _) = skein(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn export_emits_one_json_object_per_instance() {
    let (code, out, _) = skein(&["export", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 660);
    assert!(rows.iter().all(|r| r["family"].is_string() && r["element"]["terms"].is_array()));
    assert_eq!(skein(&["relations", "export", "--n", "5"]).1, out);
}

#[test]
fn verify_mutations_passes_and_is_seeded() {
    let a = skein(&["verify", "mutations", "--seed", "3"]);
    assert_eq!(a.0, EXIT_OK);
    assert!(a.1.lines().last().unwrap().starts_with("PASS mutations"));
    assert_eq!(skein(&["verify", "mutations", "--seed", "3"]).1, a.1);
}

#[test]
fn verify_json_report() {
    let (code, out, _) = skein(&["verify", "matrix-identities", "--trials", "10", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    for line in out.lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_skein");
    let ok = Command::new(bin).args(["nf", "--n", "2", "t1 s12 - s12 t1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).lines().next(), Some("0"));
    let bad = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
