//! Command surface of the `skein` binary: `nf`, `verify` and `export`.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure or a
//! bad expression, 2 when a rewrite hits its step cap, 64 on a usage error.

pub mod suites;

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::oracle::Residual;
use crate::parse::parse;
use crate::relcat::{all_instances, export_order, InstanceOptions};
use crate::rewrite::{RewriteError, RuleSet, Strategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Parser)]
#[command(name = "skein", version, about = "Normal forms and relation checks in the skein algebra of a punctured disk")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce an expression to normal form.
    Nf(NfArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print the instantiated relation catalog.
    Export(ExportArgs),
    /// Relation catalog commands.
    Relations {
        #[command(subcommand)]
        command: RelationsCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum RelationsCommand {
    /// Same as `skein export`.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct NfArgs {
    /// Number of punctures.
    #[arg(long, default_value_t = 6)]
    pub n: u32,
    #[arg(long, default_value_t = crate::rewrite::DEFAULT_MAX_STEPS)]
    pub max_steps: usize,
    /// Print every rewrite step.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Fail when the input lies outside the verified window.
    #[arg(long)]
    pub window_check: bool,
    pub expr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Catalog oracle gate plus recovery of the classical relations.
    Classical,
    Mirror,
    Confluence,
    Spanning,
    MatrixIdentities,
    /// Oracle value and idempotence of normal forms on random elements.
    Soundness,
    /// Perturbed templates must be caught by the oracle.
    Mutations,
    /// Coefficient ring, bar, mirror and centrality laws.
    Ring,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    /// Trials per check; each suite has its own default.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, env = "SKEIN_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, alias = "report", value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let res = match cli.command {
        Command::Nf(a) => cmd_nf(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Export(a) | Command::Relations { command: RelationsCommand::Export(a) } => cmd_export(&a, out),
    };
    match res {
        Ok(code) => code,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "skein: {e}");
            EXIT_FAIL
        }
    }
}

fn rules_for(n: usize) -> Result<RuleSet, RewriteError> {
    Ok(RuleSet::standard(n)?.0)
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("report serializes"))
}

pub fn cmd_nf(a: &NfArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let e = match parse(&a.expr, a.n) {
        Ok(e) => e,
        Err(pe) => {
            writeln!(err, "skein: {pe}")?;
            return Ok(EXIT_FAIL);
        }
    };
    let mut rules = match rules_for(a.n as usize) {
        Ok(r) => r,
        Err(re) => {
            writeln!(err, "skein: building rules: {re}")?;
            return Ok(EXIT_LIMIT);
        }
    };
    rules.max_steps = a.max_steps;
    let report = match rules.normal_form_with(&e, Strategy::Canonical, a.trace) {
        Ok(r) => r,
        Err(re) => {
            writeln!(err, "skein: {re}")?;
            return Ok(EXIT_LIMIT);
        }
    };
    match a.format {
        Format::Json => json_line(out, &report)?,
        Format::Text => {
            writeln!(out, "{}", report.result)?;
            if a.trace {
                for (k, s) in report.trace.iter().enumerate() {
                    writeln!(out, "  {:>4}  {}  at {} in {}", k + 1, s.origin, s.position, s.word)?;
                }
            }
            writeln!(out, "steps {}  maxAlphaPow {}  unverifiedWindow {}", report.steps, report.max_alpha_pow, report.unverified_window)?;
        }
    }
    if a.window_check && report.unverified_window {
        writeln!(err, "skein: input lies outside the verified window")?;
        return Ok(EXIT_FAIL);
    }
    Ok(EXIT_OK)
}

pub fn cmd_export(a: &ExportArgs, out: &mut dyn Write) -> std::io::Result<i32> {
    for inst in export_order(all_instances(a.n, &InstanceOptions::default())) {
        match a.format {
            Format::Json => json_line(out, &inst)?,
            Format::Text => writeln!(out, "{}: {}", inst.key(), inst.element)?,
        }
    }
    Ok(EXIT_OK)
}

/// Outcome of one suite: pass, fail, or a rewrite that hit its cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail,
    Limit,
}

impl Outcome {
    fn of(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn code(self) -> i32 {
        match self {
            Outcome::Pass => EXIT_OK,
            Outcome::Fail => EXIT_FAIL,
            Outcome::Limit => EXIT_LIMIT,
        }
    }
}

#[derive(Serialize)]
struct Header<'a> {
    suite: &'a str,
    n: usize,
    trials: usize,
    seed: u64,
}

struct Reporter<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Reporter<'_> {
    fn header(&mut self, suite: &str, n: usize, trials: usize, seed: u64) -> std::io::Result<()> {
        match self.format {
            Format::Json => json_line(self.out, &Header { suite, n, trials, seed }),
            Format::Text => writeln!(self.out, "# {suite}  n={n}  trials={trials}  seed={seed}"),
        }
    }

    /// One record: `text` in text mode, `v` in JSON mode. Text lines are
    /// printed only for failures unless `always` is set.
    fn item(&mut self, ok: bool, always: bool, text: impl FnOnce() -> String, v: &impl Serialize) -> std::io::Result<()> {
        match self.format {
            Format::Json => json_line(self.out, v),
            Format::Text if ok && !always => Ok(()),
            Format::Text => writeln!(self.out, "{} {}", if ok { "ok  " } else { "FAIL" }, text()),
        }
    }

    fn summary(&mut self, suite: &str, outcome: Outcome, detail: &str) -> std::io::Result<()> {
        let word = match outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Limit => "LIMIT",
        };
        match self.format {
            Format::Json => json_line(self.out, &serde_json::json!({ "suite": suite, "result": word, "detail": detail })),
            Format::Text => writeln!(self.out, "{word} {suite}: {detail}"),
        }
    }
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let suites: Vec<Suite> = match a.suite {
        Suite::All => vec![
            Suite::Classical,
            Suite::MatrixIdentities,
            Suite::Mutations,
            Suite::Ring,
            Suite::Mirror,
            Suite::Spanning,
            Suite::Confluence,
            Suite::Soundness,
        ],
        s => vec![s],
    };
    let needs_rules = suites.iter().any(|s| !matches!(s, Suite::Classical | Suite::MatrixIdentities | Suite::Mutations));
    let rules = if needs_rules {
        match rules_for(a.n) {
            Ok(r) => Some(r),
            Err(re) => {
                writeln!(err, "skein: building rules: {re}")?;
                return Ok(EXIT_LIMIT);
            }
        }
    } else {
        None
    };
    let mut rep = Reporter { out, format: a.format };
    let mut worst = Outcome::Pass;
    for s in suites {
        let o = run_suite(s, a, rules.as_ref(), &mut rep)?;
        worst = match (worst, o) {
            (Outcome::Limit, _) | (_, Outcome::Limit) => Outcome::Limit,
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            _ => Outcome::Pass,
        };
    }
    Ok(worst.code())
}

fn run_suite(s: Suite, a: &VerifyArgs, rules: Option<&RuleSet>, rep: &mut Reporter<'_>) -> std::io::Result<Outcome> {
    let (n, seed) = (a.n, a.seed);
    let rules = || rules.expect("rules built for this suite");
    match s {
        Suite::Classical => {
            let trials = a.trials.unwrap_or(20);
            rep.header("classical", n, trials, seed)?;
            let gate = suites::catalog_gate(n, trials, seed);
            for key in &gate.keys {
                let r = gate.residuals.iter().find(|r| &r.key == key);
                #[derive(Serialize)]
                struct Line<'a> {
                    check: &'static str,
                    key: &'a str,
                    pass: bool,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    residual: Option<&'a Residual>,
                }
                let text = || format!("{key}: residual {} (trial {}, sign {})", r.map_or("", |r| &r.value), r.map_or(0, |r| r.trial), r.map_or(0, |r| r.sign));
                rep.item(r.is_none(), false, text, &Line { check: "gate", key, pass: r.is_none(), residual: r })?;
            }
            let rec = suites::classical_recovery(n, trials, seed);
            for i in &rec.items {
                rep.item(i.ok, false, || format!("{} sign {}: {}", i.key, i.sign, i.failure.as_deref().unwrap_or("")), i)?;
            }
            let ok = gate.passed() && rec.passed();
            let detail = format!(
                "{} instances, {} residuals; {} classical recoveries, {} failed",
                gate.instances,
                gate.residuals.len(),
                rec.items.len(),
                rec.failures().count()
            );
            rep.summary("classical", Outcome::of(ok), &detail)?;
            Ok(Outcome::of(ok))
        }
        Suite::MatrixIdentities => {
            let trials = a.trials.unwrap_or(100);
            rep.header("matrix-identities", 6, trials, seed)?;
            let res = suites::matrix_identities(trials, seed);
            for r in &res {
                rep.item(r.passed(), true, || format!("{}: {} failures {}", r.name, r.failures, r.witness.as_deref().unwrap_or("")), r)?;
            }
            let bad = res.iter().filter(|r| !r.passed()).count();
            rep.summary("matrix-identities", Outcome::of(bad == 0), &format!("{} identities, {bad} failed", res.len()))?;
            Ok(Outcome::of(bad == 0))
        }
        Suite::Mutations => {
            let trials = a.trials.unwrap_or(20);
            rep.header("mutations", n, trials, seed)?;
            let res = suites::mutation_controls(trials, seed);
            for m in &res {
                rep.item(m.detected, true, || format!("{}: {} -> {}", m.family, m.from, m.to), m)?;
            }
            let missed = res.iter().filter(|m| !m.detected).count();
            rep.summary("mutations", Outcome::of(missed == 0), &format!("{} mutations, {missed} undetected", res.len()))?;
            Ok(Outcome::of(missed == 0))
        }
        Suite::Ring => {
            let cases = a.trials.unwrap_or(1000);
            rep.header("ring", n, cases, seed)?;
            let res = suites::ring_suite(rules(), n, cases, seed);
            for r in &res {
                rep.item(r.passed(), true, || format!("{}: {} of {} failed {}", r.name, r.failures, r.cases, r.witness.as_deref().unwrap_or("")), r)?;
            }
            let bad = res.iter().filter(|r| !r.passed()).count();
            rep.summary("ring", Outcome::of(bad == 0), &format!("{} properties, {bad} failed", res.len()))?;
            Ok(Outcome::of(bad == 0))
        }
        Suite::Mirror => {
            let trials = a.trials.unwrap_or(300);
            rep.header("mirror", n, trials, seed)?;
            let r = suites::mirror_suite(rules(), n, trials, seed);
            for k in &r.unreduced {
                rep.item(false, false, || format!("mirror of {k} does not reduce to zero"), &serde_json::json!({ "unreduced": k }))?;
            }
            for k in &r.mismatches {
                rep.item(false, false, || format!("mirror mismatch on {k}"), &serde_json::json!({ "mismatch": k }))?;
            }
            let o = if r.limit_exceeded > 0 { Outcome::Limit } else { Outcome::of(r.passed()) };
            let detail = format!(
                "{} mirrored instances, {} unreduced; {} window elements, {} mismatches",
                r.instances,
                r.unreduced.len(),
                r.trials,
                r.mismatches.len()
            );
            rep.summary("mirror", o, &detail)?;
            Ok(o)
        }
        Suite::Spanning => {
            let trials = a.trials.unwrap_or(5);
            rep.header("spanning", n, trials, seed)?;
            let res = match suites::spanning_suite(rules(), n, trials, seed) {
                Ok(r) => r,
                Err(e) => {
                    rep.summary("spanning", Outcome::Limit, &e.to_string())?;
                    return Ok(Outcome::Limit);
                }
            };
            for r in &res {
                let text = || {
                    format!(
                        "{} {:?}: {} basis words, rank {}, {}/{} products in span, {} oracle mismatches{}",
                        r.case,
                        r.md,
                        r.basis_count,
                        r.rank,
                        r.in_span,
                        r.products,
                        r.oracle_mismatches,
                        r.dependent.first().map(|d| format!("; {d}")).unwrap_or_default()
                    )
                };
                rep.item(r.passed(), true, text, r)?;
            }
            let bad = res.iter().filter(|r| !r.passed()).count();
            rep.summary("spanning", Outcome::of(bad == 0), &format!("{} shapes, {bad} failed", res.len()))?;
            Ok(Outcome::of(bad == 0))
        }
        Suite::Confluence => {
            let trials = a.trials.unwrap_or(500);
            rep.header("confluence", n, trials, seed)?;
            let res = suites::confluence_suite(rules(), n, trials, seed);
            for r in &res {
                let text = || {
                    let w = r.divergences.first().map(|d| format!("; first at trial {} on {}", d.trial, d.element)).unwrap_or_default();
                    format!("{}: {} divergences, {} capped{w}", r.shape, r.divergences.len(), r.limit_exceeded)
                };
                rep.item(r.passed(), true, text, r)?;
            }
            let limit = res.iter().any(|r| r.limit_exceeded > 0);
            let bad = res.iter().filter(|r| !r.passed()).count();
            let o = if limit { Outcome::Limit } else { Outcome::of(bad == 0) };
            rep.summary("confluence", o, &format!("{} shapes, {bad} with divergences", res.len()))?;
            Ok(o)
        }
        Suite::Soundness => {
            let elements = a.trials.unwrap_or(1000);
            rep.header("soundness", n, elements, seed)?;
            let r = suites::soundness_suite(rules(), n, 9, elements, 20, seed);
            for w in &r.oracle_mismatches {
                rep.item(false, false, || format!("value changed: {w}"), &serde_json::json!({ "oracleMismatch": w }))?;
            }
            for w in &r.not_idempotent {
                rep.item(false, false, || format!("not idempotent: {w}"), &serde_json::json!({ "notIdempotent": w }))?;
            }
            let o = if r.limit_exceeded > 0 { Outcome::Limit } else { Outcome::of(r.passed()) };
            let detail = format!(
                "{} elements up to reduced degree {}, {} value changes, {} not idempotent, at most {} steps",
                r.elements,
                r.max_degree,
                r.oracle_mismatches.len(),
                r.not_idempotent.len(),
                r.max_steps
            );
            rep.summary("soundness", o, &detail)?;
            Ok(o)
        }
        Suite::All => unreachable!("expanded by cmd_verify"),
    }
}
