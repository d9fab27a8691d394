//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line and then
//! asserts. Run with `--nocapture` to see the lines.
//!
//! Tolerances are exact throughout: every comparison is over exact rationals
//! or exact Laurent polynomials, so there is nothing to tune.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use skein::cli::suites;
use skein::relcat::{templates, FamilyKind};
use skein::rewrite::RuleSet;

const N: usize = 6;
const SEED: u64 = 7;

const GATE_TUPLES: usize = 20;
const IDENTITY_TUPLES: usize = 100;
const SPANNING_TRIALS: usize = 5;
const SOUNDNESS_ELEMENTS: usize = 1000;
const SOUNDNESS_MAX_DEGREE: u32 = 9;
const SOUNDNESS_TUPLES: usize = 20;
const CONFLUENCE_TRIALS: usize = 500;
const MUTATION_TRIALS: usize = 20;
const MUTATION_COUNT: usize = 10;
const RING_CASES: usize = 1000;

/// Basis-word counts for the six spanning cases.
const SPANNING_COUNTS: &[(&str, usize)] = &[
    ("six-distinct", 15),
    ("five-one-double", 6),
    ("four-adjacent-doubles", 3),
    ("four-alternate-doubles", 3),
    ("five-distinct", 6),
    ("four-one-double", 3),
];

fn rules() -> &'static RuleSet {
    static RULES: OnceLock<RuleSet> = OnceLock::new();
    RULES.get_or_init(|| RuleSet::standard(N).expect("rules orient").0)
}

fn report(criterion: u32, ok: bool, detail: &str) {
    println!("{} criterion {criterion}: {detail}", if ok { "PASS" } else { "FAIL" });
}

#[test]
fn criterion_1_catalog_oracle_gate() {
    let gate = suites::catalog_gate(N, GATE_TUPLES, SEED);
    let ok = gate.passed() && gate.instances > 0;
    report(1, ok, &format!("{} instances (mirrors included), {} tuples, {} residuals", gate.instances, gate.trials, gate.residuals.len()));
    for r in gate.residuals.iter().take(5) {
        println!("  residual: {r:?}");
    }
    assert!(gate.keys.iter().any(|k| k.ends_with(" mirror")));
    assert!(ok);
}

#[test]
fn criterion_2_classical_recovery() {
    let rep = suites::classical_recovery(N, GATE_TUPLES, SEED);
    let wanted: BTreeSet<&str> =
        templates().iter().filter(|t| matches!(t.kind, FamilyKind::TypeOne | FamilyKind::TypeTwo)).map(|t| t.family).collect();
    let seen: BTreeSet<&str> = rep.items.iter().filter(|r| r.ok).filter_map(|r| wanted.iter().copied().find(|f| r.key.starts_with(&format!("{f}(")))).collect();
    let failures: Vec<_> = rep.failures().collect();
    let ok = rep.passed() && seen == wanted;
    report(2, ok, &format!("{} specializations over {} templates, {} failures", rep.items.len(), wanted.len(), failures.len()));
    for f in failures.iter().take(5) {
        println!("  {} (sign {}): {}", f.key, f.sign, f.failure.as_deref().unwrap_or(""));
    }
    assert_eq!(seen, wanted, "every type-I and type-II template is recovered");
    assert!(ok);
}

#[test]
fn criterion_3_trace_identities() {
    let res = suites::matrix_identities(IDENTITY_TUPLES, SEED);
    let bad: Vec<_> = res.iter().filter(|r| !r.passed()).collect();
    report(3, bad.is_empty(), &format!("{} identities on {IDENTITY_TUPLES} tuples each, {} failed", res.len(), bad.len()));
    for r in &bad {
        println!("  {}: {} failures, {}", r.name, r.failures, r.witness.as_deref().unwrap_or(""));
    }
    assert!(res.iter().all(|r| r.trials == IDENTITY_TUPLES));
    assert!(bad.is_empty());
}

#[test]
fn criterion_4_spanning_counts() {
    let res = suites::spanning_suite(rules(), N, SPANNING_TRIALS, SEED).expect("spanning check runs");
    let mut problems = Vec::new();
    for r in &res {
        let want = SPANNING_COUNTS.iter().find(|(c, _)| *c == r.case).map(|(_, k)| *k);
        if want != Some(r.basis_count) {
            problems.push(format!("{} {:?}: {} basis words, want {want:?}", r.case, r.md, r.basis_count));
        }
        if !r.passed() {
            problems.push(format!("{} {:?}: {}/{} in span, {} oracle mismatches", r.case, r.md, r.in_span, r.products, r.oracle_mismatches));
        }
    }
    let cases: BTreeSet<&str> = res.iter().map(|r| r.case.as_str()).collect();
    if cases.len() != SPANNING_COUNTS.len() {
        problems.push(format!("saw {} of {} cases", cases.len(), SPANNING_COUNTS.len()));
    }
    let products: usize = res.iter().map(|r| r.products).sum();
    report(4, problems.is_empty(), &format!("{} shapes, {products} products, {} problems", res.len(), problems.len()));
    for p in &problems {
        println!("  {p}");
    }
    assert!(problems.is_empty());
}

#[test]
fn criterion_5_rewrite_soundness() {
    let rep = suites::soundness_suite(rules(), N, SOUNDNESS_MAX_DEGREE, SOUNDNESS_ELEMENTS, SOUNDNESS_TUPLES, SEED);
    report(
        5,
        rep.passed(),
        &format!(
            "{} elements, {} oracle mismatches, {} not idempotent, {} capped, max {} steps",
            rep.elements,
            rep.oracle_mismatches.len(),
            rep.not_idempotent.len(),
            rep.limit_exceeded,
            rep.max_steps
        ),
    );
    for w in rep.oracle_mismatches.iter().chain(&rep.not_idempotent).take(5) {
        println!("  {w}");
    }
    assert!(rep.passed());
}

// Red: the relation set leaves unresolved critical pairs (see README,
// "Known failures"). Run with `cargo test -- --ignored` to reproduce.
#[test]
#[ignore = "known failure: confluence fuzz diverges on 5 of 21 shapes"]
fn criterion_6_confluence_fuzz() {
    let res = suites::confluence_suite(rules(), N, CONFLUENCE_TRIALS, SEED);
    let bad: Vec<_> = res.iter().filter(|r| !r.passed()).collect();
    let total: usize = res.iter().map(|r| r.divergences.len()).sum();
    report(6, bad.is_empty(), &format!("{} shapes x {CONFLUENCE_TRIALS} trials, {total} divergences in {} shapes", res.len(), bad.len()));
    for r in &bad {
        println!("  {}: {} divergences, {} capped", r.shape, r.divergences.len(), r.limit_exceeded);
        if let Some(d) = r.divergences.first() {
            println!("    trial {} seed {}: {}\n      canonical: {}\n      random:    {}", d.trial, d.seed, d.element, d.canonical, d.random);
        }
    }
    assert!(bad.is_empty());
}

#[test]
fn criterion_7_negative_controls() {
    let res = suites::mutation_controls(MUTATION_TRIALS, SEED);
    let missed: Vec<_> = res.iter().filter(|m| !m.detected).collect();
    report(7, res.len() == MUTATION_COUNT && missed.is_empty(), &format!("{} mutations, {} undetected", res.len(), missed.len()));
    for m in &missed {
        println!("  {}: {} -> {}", m.family, m.from, m.to);
    }
    assert_eq!(res.len(), MUTATION_COUNT);
    assert!(missed.is_empty());
}

#[test]
fn criterion_8_ring_and_involutions() {
    let res = suites::ring_suite(rules(), N, RING_CASES, SEED);
    let bad: Vec<_> = res.iter().filter(|r| !r.passed()).collect();
    let names: Vec<&str> = res.iter().map(|r| r.name).collect();
    report(8, bad.is_empty(), &format!("{} x {RING_CASES} cases, {} failed", names.join(", "), bad.len()));
    for r in &bad {
        println!("  {}: {} failures, {}", r.name, r.failures, r.witness.as_deref().unwrap_or(""));
    }
    assert!(res.iter().all(|r| r.cases == RING_CASES));
    assert!(bad.is_empty());
}
