//! Verification suites shared by the `skein verify` command and the
//! acceptance tests. Every suite is deterministic given its seed.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Element, Gen, Label};
use crate::oracle::{
    check_matrix_identities, classical_relations, derive_seed, eval_element, find_residuals, sample_tuples, solve_in_span, specialize,
    CommPoly, IdentityResult, Residual,
};
use crate::qring::RingElem;
use crate::relcat::{all_gens, all_instances, template, FamilyKind, InstanceOptions};
use crate::rewrite::{
    all_spanning_shapes, confluence_fuzz, random_coeff, random_element, random_window_word, spanning_check, ConfluenceReport,
    RewriteError, RuleSet, Shape, SpanningError, SpanningReport, VERIFIED_MAX_MD,
};

#[derive(Clone, Debug, Serialize)]
pub struct GateReport {
    pub n: usize,
    pub instances: usize,
    pub trials: usize,
    pub seed: u64,
    /// Keys of every instance evaluated, in catalog order.
    #[serde(skip)]
    pub keys: Vec<String>,
    pub residuals: Vec<Residual>,
}

impl GateReport {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Evaluates every catalog instance on `n` labels, mirrors included, at
/// both signs of `q^{1/2}`.
pub fn catalog_gate(n: usize, trials: usize, seed: u64) -> GateReport {
    let items: Vec<(String, Element)> = all_instances(n, &InstanceOptions::default()).into_iter().map(|i| (i.key(), i.element)).collect();
    let tuples = sample_tuples(n, trials, seed);
    let mut residuals = find_residuals(&items, &tuples);
    residuals.sort_by(|a, b| a.key.cmp(&b.key));
    GateReport { n, instances: items.len(), trials, seed, keys: items.into_iter().map(|(k, _)| k).collect(), residuals }
}

#[derive(Clone, Debug, Serialize)]
pub struct Recovery {
    pub key: String,
    pub sign: i32,
    /// Classical relations with a nonzero coefficient in the decomposition.
    pub classical: Vec<String>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecoveryReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub items: Vec<Recovery>,
}

impl RecoveryReport {
    pub fn passed(&self) -> bool {
        !self.items.is_empty() && self.items.iter().all(|i| i.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Recovery> {
        self.items.iter().filter(|i| !i.ok)
    }
}

/// Specializes every type I and type II instance at `q = 1`, writes it as a
/// rational combination of classical relations on the same labels, and
/// checks with the oracle that nothing is left over.
pub fn classical_recovery(n: usize, trials: usize, seed: u64) -> RecoveryReport {
    let opts = InstanceOptions { central: false, mirrors: true, kinds: Some(vec![FamilyKind::TypeOne, FamilyKind::TypeTwo]) };
    let instances = all_instances(n, &opts);
    let tuples = sample_tuples(n, trials, seed);
    let labels: Vec<Label> = (1..=n as Label).collect();
    let items = instances
        .par_iter()
        .flat_map_iter(|inst| [1, -1].map(|sign| (inst, sign)))
        .map(|(inst, sign)| {
            let p = specialize(&inst.element, sign);
            let mut out = Recovery { key: inst.key(), sign, classical: Vec::new(), ok: false, failure: None };
            if p.is_zero() {
                out.failure = Some("specialization vanishes identically".into());
                return out;
            }
            let rels = classical_relations(&labels, &p.multidegree(n));
            let basis: Vec<CommPoly> = rels.iter().map(|(_, c)| c.clone()).collect();
            let Some(lambda) = solve_in_span(&p, &basis) else {
                out.failure = Some(format!("not in the span of {} classical relations", rels.len()));
                return out;
            };
            let mut rest = p.clone();
            for ((name, c), l) in rels.iter().zip(&lambda) {
                if !l.is_zero() {
                    out.classical.push(format!("{l}*{name}"));
                    rest = rest.sub(&c.scale(l));
                }
            }
            match tuples.iter().position(|t| !rest.eval(t).is_zero() || !p.eval(t).is_zero()) {
                Some(trial) => out.failure = Some(format!("nonzero oracle value on trial {trial}")),
                None => out.ok = true,
            }
            out
        })
        .collect();
    RecoveryReport { n, trials, seed, items }
}

#[derive(Clone, Debug, Serialize)]
pub struct MirrorReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub instances: usize,
    /// Mirrored instances that do not reduce to zero.
    pub unreduced: Vec<String>,
    /// Window elements where `nf(mirror e) ≠ nf(mirror nf e)`.
    pub mismatches: Vec<String>,
    #[serde(rename = "limitExceeded")]
    pub limit_exceeded: usize,
}

impl MirrorReport {
    pub fn passed(&self) -> bool {
        self.unreduced.is_empty() && self.mismatches.is_empty() && self.limit_exceeded == 0
    }
}

pub fn mirror_suite(rules: &RuleSet, n: usize, trials: usize, seed: u64) -> MirrorReport {
    let instances = all_instances(n, &InstanceOptions::default());
    let unreduced: Vec<String> = instances
        .par_iter()
        .filter(|i| !matches!(rules.reduces_to_zero(&i.element.mirror()), Ok(true)))
        .map(|i| i.key())
        .collect();
    let outcomes: Vec<Result<Option<String>, RewriteError>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, trial as u64));
            let e = random_window_element(&mut rng, n);
            let a = rules.reduce(&e.mirror())?;
            let b = rules.reduce(&rules.reduce(&e)?.mirror())?;
            Ok((a != b).then(|| format!("trial {trial}: {e}")))
        })
        .collect();
    let limit_exceeded = outcomes.iter().filter(|o| o.is_err()).count();
    let mismatches = outcomes.into_iter().filter_map(|o| o.ok().flatten()).collect();
    MirrorReport { n, trials, seed, instances: instances.len(), unreduced, mismatches, limit_exceeded }
}

fn random_window_element(rng: &mut impl Rng, n: usize) -> Element {
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        e.add_term(random_window_word(rng, n, VERIFIED_MAX_MD, 6), random_coeff(rng));
    }
    e
}

/// The fuzz shapes that fit on `n` labels.
pub fn confluence_shapes(n: usize) -> Vec<Shape> {
    let mut out = vec![Shape::Pairs { n: n.min(4) }, Shape::THeavy { n: n.min(3) }];
    if n >= 3 {
        out.push(Shape::TripleTriple { n });
    }
    out.extend(all_spanning_shapes().into_iter().filter(|md| md.len() <= n).map(|md| Shape::LabelCounts { md }));
    out.push(Shape::Window { n, max_md: VERIFIED_MAX_MD });
    out
}

pub fn confluence_suite(rules: &RuleSet, n: usize, trials: usize, seed: u64) -> Vec<ConfluenceReport> {
    confluence_shapes(n)
        .iter()
        .enumerate()
        .map(|(k, shape)| confluence_fuzz(rules, shape, trials, derive_seed(seed, k as u64)))
        .collect()
}

pub fn spanning_suite(rules: &RuleSet, n: usize, trials: usize, seed: u64) -> Result<Vec<SpanningReport>, SpanningError> {
    all_spanning_shapes().into_iter().filter(|md| md.len() <= n).map(|md| spanning_check(rules, &md, trials, seed)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SoundnessReport {
    pub n: usize,
    #[serde(rename = "maxDegree")]
    pub max_degree: u32,
    pub elements: usize,
    pub trials: usize,
    pub seed: u64,
    #[serde(rename = "oracleMismatches")]
    pub oracle_mismatches: Vec<String>,
    #[serde(rename = "notIdempotent")]
    pub not_idempotent: Vec<String>,
    #[serde(rename = "limitExceeded")]
    pub limit_exceeded: usize,
    #[serde(rename = "maxSteps")]
    pub max_steps: usize,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.oracle_mismatches.is_empty() && self.not_idempotent.is_empty() && self.limit_exceeded == 0
    }
}

/// Reduces random elements and checks that the oracle value is unchanged and
/// that a second reduction is the identity.
pub fn soundness_suite(rules: &RuleSet, n: usize, max_degree: u32, elements: usize, trials: usize, seed: u64) -> SoundnessReport {
    let tuples = sample_tuples(n, trials, seed);
    let outcomes: Vec<Result<(usize, bool, bool, String), RewriteError>> = (0..elements)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, k as u64));
            let e = random_element(&mut rng, n, max_degree, 3);
            let r = rules.normal_form(&e)?;
            let sound = tuples.iter().all(|t| [1, -1].iter().all(|&s| eval_element(&e, t, s) == eval_element(&r.result, t, s)));
            let idem = rules.reduce(&r.result)? == r.result;
            Ok((r.steps, sound, idem, format!("element {k}: {e}")))
        })
        .collect();
    let mut rep = SoundnessReport {
        n,
        max_degree,
        elements,
        trials,
        seed,
        oracle_mismatches: Vec::new(),
        not_idempotent: Vec::new(),
        limit_exceeded: 0,
        max_steps: 0,
    };
    for o in outcomes {
        match o {
            Err(_) => rep.limit_exceeded += 1,
            Ok((steps, sound, idem, what)) => {
                rep.max_steps = rep.max_steps.max(steps);
                if !sound {
                    rep.oracle_mismatches.push(what.clone());
                }
                if !idem {
                    rep.not_idempotent.push(what);
                }
            }
        }
    }
    rep
}

pub fn matrix_identities(trials: usize, seed: u64) -> Vec<IdentityResult> {
    check_matrix_identities(trials, seed)
}

/// Single-coefficient edits of catalog templates, each visible at `q = 1`.
pub const MUTATIONS: &[(&str, &str, &str)] = &[
    ("comm-2-2-crossing", "(q^2 - q^-2)", "(q^2 + q^-2)"),
    ("comm-2-2-adjacent", "(q - q^-1)", "(q + q^-1)"),
    ("disjoint-2-2", "- s12 s34", "+ s12 s34"),
    ("comm-2-3-nested", "(q^2 - q^-2)", "(q^2 + q^-2)"),
    ("type2-disjoint", "+ s35 s124", "- s35 s124"),
    ("type2-shared", "(q^2 + q^-2 - 1)", "(q^2 + q^-2 + 1)"),
    ("type1-disjoint-b", "(q^3 + q^-3)", "(q^3 - q^-3)"),
    ("type1-interleaved-a", "(2 - q^-4)", "(3 - q^-4)"),
    ("type1-one-shared-b", "- s25 s14 s33", "+ s25 s14 s33"),
    ("type1-three-shared", "+ s11 s22 s33", "- s11 s22 s33"),
];

#[derive(Clone, Debug, Serialize)]
pub struct MutationResult {
    pub family: String,
    pub from: String,
    pub to: String,
    pub detected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Residual>,
}

/// Applies each mutation and evaluates the base instance `(1..=arity)` of
/// the mutated template.
pub fn mutation_controls(trials: usize, seed: u64) -> Vec<MutationResult> {
    MUTATIONS
        .iter()
        .map(|&(family, from, to)| {
            let t = template(family).and_then(|t| t.mutated(from, to)).unwrap_or_else(|| panic!("mutation {family}: {from} not found"));
            let tuple: Vec<Label> = (1..=t.arity as Label).collect();
            let inst = t.instantiate(&tuple, 0, false).expect("mutated template parses");
            let tuples = sample_tuples(t.arity, trials, seed);
            let residual = find_residuals(&[(inst.key(), inst.element)], &tuples).into_iter().next();
            MutationResult { family: family.into(), from: from.into(), to: to.into(), detected: residual.is_some(), residual }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Random ring element with a small numerator and denominator `α^k`, `k ≤ 3`.
pub fn random_ring_elem(rng: &mut impl Rng) -> RingElem {
    let pairs: Vec<(i32, BigInt)> = (0..rng.gen_range(1..=4)).map(|_| (rng.gen_range(-8..=8), BigInt::from(rng.gen_range(-5..=5)))).collect();
    RingElem::make(pairs, rng.gen_range(0..=3)).expect("nonnegative alpha power")
}

fn property(name: &'static str, cases: usize, seed: u64, check: impl Fn(&mut ChaCha8Rng) -> Result<(), String> + Sync) -> PropertyResult {
    let outcomes: Vec<Option<String>> = (0..cases)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, k as u64));
            check(&mut rng).err().map(|w| format!("case {k}: {w}"))
        })
        .collect();
    let failures = outcomes.iter().flatten().count();
    PropertyResult { name, cases, failures, witness: outcomes.into_iter().flatten().next() }
}

/// `αβ = 1`, bar is a ring involution, mirror is an involutive
/// antihomomorphism, and every `t_i` commutes with everything.
pub fn ring_suite(rules: &RuleSet, n: usize, cases: usize, seed: u64) -> Vec<PropertyResult> {
    let gens = all_gens(n);
    vec![
        property("alpha-beta", cases, derive_seed(seed, 1), |rng| {
            let x = random_ring_elem(rng);
            let y = x.mul(&RingElem::alpha()).mul(&RingElem::beta());
            if y == x && RingElem::alpha().mul(&RingElem::beta()).is_one() {
                Ok(())
            } else {
                Err(format!("{x} a b = {y}"))
            }
        }),
        property("bar-involution", cases, derive_seed(seed, 2), |rng| {
            let (x, y) = (random_ring_elem(rng), random_ring_elem(rng));
            if x.bar().bar() != x {
                Err(format!("bar bar {x} = {}", x.bar().bar()))
            } else if x.mul(&y).bar() != x.bar().mul(&y.bar()) || x.add(&y).bar() != x.bar().add(&y.bar()) {
                Err(format!("bar is not a ring map on {x}, {y}"))
            } else {
                Ok(())
            }
        }),
        property("mirror-antihomomorphism", cases, derive_seed(seed, 3), |rng| {
            let e = random_element(rng, n, 6, 3);
            let f = random_element(rng, n, 6, 3);
            if e.mul(&f).mirror() != f.mirror().mul(&e.mirror()) {
                Err(format!("mirror({e} * {f})"))
            } else if e.mirror().mirror() != e {
                Err(format!("mirror mirror {e}"))
            } else if e.add(&f).mirror() != e.mirror().add(&f.mirror()) {
                Err(format!("mirror({e} + {f})"))
            } else {
                Ok(())
            }
        }),
        property("centrality", cases, derive_seed(seed, 4), |rng| {
            let t = Element::gen(Gen::T(rng.gen_range(1..=n as Label)));
            let x = match rng.gen_range(0..2) {
                0 => Element::gen(gens[rng.gen_range(0..gens.len())]),
                _ => Element::word(random_window_word(rng, n, VERIFIED_MAX_MD - 1, 3)),
            };
            let c = t.mul(&x).sub(&x.mul(&t));
            match rules.reduces_to_zero(&c) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("[{t}, {x}] does not reduce to zero")),
                Err(e) => Err(e.to_string()),
            }
        }),
    ]
}

