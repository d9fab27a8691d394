//! Oriented rewriting modulo the relation catalog.
//!
//! Every word is kept with its `t` factors sorted at the front (the `t_i` are
//! central). Rules rewrite a contiguous run of `s` factors, optionally
//! consuming some `t` factors, into a combination of smaller words.


mod confluence;
mod spanning;

pub use confluence::{confluence_fuzz, random_coeff, random_element, random_window_word, random_word, ConfluenceReport, Divergence, Shape};
pub use spanning::{all_spanning_shapes, resolve_case, spanning_cases, spanning_check, words_with_md, SpanningCase, SpanningError, SpanningReport};

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use smallvec::SmallVec;
use thiserror::Error;

use crate::algebra::{term_cmp, Element, Gen, Label, Word};
use crate::oracle::{eval_element, sample_tuples};
use crate::qring::RingElem;
use crate::relcat::{all_instances, InstanceOptions, RelationInstance};

pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// Window inside which the rule system has been completed: labels at most
/// this, and at most this many labels per word counting `t` factors.
pub const VERIFIED_MAX_LABEL: Label = 6;
pub const VERIFIED_MAX_MD: u32 = 6;

const DIVISION_TRIALS: usize = 20;
const DIVISION_SEED: u64 = 0x5eed;

/// Total label count of a word, `t` factors included.
pub fn label_count(w: &Word) -> u32 {
    w.gens().iter().map(|g| g.labels().len() as u32).sum()
}

pub fn in_verified_window(e: &Element) -> bool {
    e.max_label() <= VERIFIED_MAX_LABEL && e.terms().all(|(w, _)| label_count(w) <= VERIFIED_MAX_MD)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("rewrite limit exceeded after {steps} steps")]
    LimitExceeded { steps: usize },
}

type GenSeq = SmallVec<[Gen; 8]>;

/// Moves `t` factors to the front in sorted order.
pub fn canonical_word(w: &Word) -> Word {
    let mut ts: GenSeq = w.gens().iter().filter(|g| g.is_t()).copied().collect();
    ts.sort_unstable();
    ts.extend(w.gens().iter().filter(|g| !g.is_t()).copied());
    Word(ts)
}

pub fn canonicalize(e: &Element) -> Element {
    Element::from_terms(e.terms().map(|(w, c)| (canonical_word(w), c.clone())))
}

fn t_len(w: &Word) -> usize {
    w.gens().iter().take_while(|g| g.is_t()).count()
}

/// Word wrapped with its precomputed term-order key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Keyed {
    degree: u32,
    cn: u32,
    s_count: Reverse<usize>,
    len: usize,
    word: Word,
}

impl Keyed {
    fn new(word: Word) -> Self {
        let k = word.key();
        Keyed { degree: k.degree, cn: k.cn, s_count: k.s_count, len: k.len, word }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Rule {
    #[serde(serialize_with = "ser_word")]
    pub lhs: Word,
    pub rhs: Element,
    pub origin: String,
    pub derived: bool,
    #[serde(skip)]
    t_part: SmallVec<[Gen; 4]>,
    #[serde(skip)]
    s_part: GenSeq,
}

fn ser_word<S: serde::Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

impl Rule {
    fn new(lhs: Word, rhs: Element, origin: String, derived: bool) -> Self {
        let k = t_len(&lhs);
        let t_part = lhs.gens()[..k].iter().copied().collect();
        let s_part = lhs.gens()[k..].iter().copied().collect();
        Rule { lhs, rhs, origin, derived, t_part, s_part }
    }

    /// `lhs − rhs`, an element of the ideal.
    pub fn equation(&self) -> Element {
        Element::word(self.lhs.clone()).sub(&self.rhs)
    }
}

fn t_contains(word_ts: &[Gen], need: &[Gen]) -> bool {
    // both sorted
    let mut i = 0;
    for g in need {
        while i < word_ts.len() && word_ts[i] < *g {
            i += 1;
        }
        if i == word_ts.len() || word_ts[i] != *g {
            return false;
        }
        i += 1;
    }
    true
}

fn t_remove(word_ts: &[Gen], need: &[Gen]) -> GenSeq {
    let mut out: GenSeq = word_ts.iter().copied().collect();
    for g in need {
        let p = out.iter().position(|x| x == g).expect("t factor present");
        out.remove(p);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Excluded {
    pub origin: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub origin: String,
    pub word: String,
    pub position: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalFormReport {
    pub result: Element,
    pub steps: usize,
    pub trace: Vec<TraceStep>,
    #[serde(rename = "maxAlphaPow")]
    pub max_alpha_pow: u32,
    #[serde(rename = "unverifiedWindow")]
    pub unverified_window: bool,
    /// Rewrites that produced a word not smaller than the word rewritten.
    #[serde(rename = "descentViolations")]
    pub descent_violations: usize,
}

/// How the next rewrite is chosen.
pub enum Strategy<'a> {
    /// Greatest word first; on it the greatest matching lhs, leftmost.
    Canonical,
    /// A random reducible word and a random match on it.
    Random(&'a mut dyn rand::RngCore),
}

#[derive(Clone, Debug, Default)]
pub struct RuleSet {
    rules: Vec<Option<Rule>>,
    index: HashMap<GenSeq, Vec<usize>>,
    lens: BTreeSet<usize>,
    pub excluded: Vec<Excluded>,
    pub log: Vec<String>,
    pub max_steps: usize,
}

impl RuleSet {
    pub fn empty() -> Self {
        RuleSet { max_steps: DEFAULT_MAX_STEPS, ..Default::default() }
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.rules().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn derived_count(&self) -> usize {
        self.rules().filter(|r| r.derived).count()
    }

    fn insert(&mut self, rule: Rule) -> usize {
        let id = self.rules.len();
        self.lens.insert(rule.s_part.len());
        self.index.entry(rule.s_part.clone()).or_default().push(id);
        self.rules.push(Some(rule));
        id
    }

    fn remove(&mut self, id: usize) -> Rule {
        let r = self.rules[id].take().expect("live rule");
        if let Some(v) = self.index.get_mut(&r.s_part) {
            v.retain(|&x| x != id);
            if v.is_empty() {
                self.index.remove(&r.s_part);
            }
        }
        r
    }

    /// All `(rule id, s-position)` matches in a canonical word.
    fn matches(&self, w: &Word) -> Vec<(usize, usize)> {
        let k = t_len(w);
        let (ts, s) = w.gens().split_at(k);
        let mut out = Vec::new();
        for &len in &self.lens {
            if len > s.len() || len == 0 {
                continue;
            }
            for pos in 0..=s.len() - len {
                if let Some(ids) = self.index.get(&s[pos..pos + len]) {
                    for &id in ids {
                        let r = self.rules[id].as_ref().unwrap();
                        if t_contains(ts, &r.t_part) {
                            out.push((id, pos));
                        }
                    }
                }
            }
        }
        out
    }

    fn pick_canonical(&self, w: &Word) -> Option<(usize, usize)> {
        let ms = self.matches(w);
        ms.into_iter().max_by(|a, b| {
            let ra = &self.rules[a.0].as_ref().unwrap().lhs;
            let rb = &self.rules[b.0].as_ref().unwrap().lhs;
            term_cmp(ra, rb).then(b.1.cmp(&a.1))
        })
    }

    /// Result of rewriting `c·w` with rule `id` at s-position `pos`.
    fn apply(&self, w: &Word, c: &RingElem, id: usize, pos: usize) -> Vec<(Word, RingElem)> {
        let r = self.rules[id].as_ref().unwrap();
        let k = t_len(w);
        let (ts, s) = w.gens().split_at(k);
        let rest_t = t_remove(ts, &r.t_part);
        let prefix = &s[..pos];
        let suffix = &s[pos + r.s_part.len()..];
        r.rhs
            .terms()
            .map(|(rw, rc)| {
                let mut g: GenSeq = rest_t.clone();
                g.extend(rw.gens().iter().filter(|x| x.is_t()).copied());
                g.sort_unstable();
                g.extend_from_slice(prefix);
                g.extend(rw.gens().iter().filter(|x| !x.is_t()).copied());
                g.extend_from_slice(suffix);
                (Word(g), c.mul(rc))
            })
            .collect()
    }

    pub fn normal_form(&self, e: &Element) -> Result<NormalFormReport, RewriteError> {
        self.normal_form_with(e, Strategy::Canonical, false)
    }

    pub fn reduce(&self, e: &Element) -> Result<Element, RewriteError> {
        Ok(self.normal_form(e)?.result)
    }

    pub fn reduces_to_zero(&self, e: &Element) -> Result<bool, RewriteError> {
        Ok(self.reduce(e)?.is_zero())
    }

    pub fn normal_form_with(&self, e: &Element, mut strategy: Strategy<'_>, trace: bool) -> Result<NormalFormReport, RewriteError> {
        let unverified_window = !in_verified_window(e);
        let mut work: BTreeMap<Keyed, RingElem> = BTreeMap::new();
        let mut done: BTreeMap<Word, RingElem> = BTreeMap::new();
        let mut max_alpha_pow = 0;
        let mut steps = 0;
        let mut violations = 0;
        let mut tr = Vec::new();

        fn push(work: &mut BTreeMap<Keyed, RingElem>, done: &mut BTreeMap<Word, RingElem>, w: Word, c: RingElem) {
            let c = match done.remove(&w) {
                Some(d) => d.add(&c),
                None => c,
            };
            let k = Keyed::new(w);
            let s = match work.remove(&k) {
                Some(old) => old.add(&c),
                None => c,
            };
            if !s.is_zero() {
                work.insert(k, s);
            }
        }

        for (w, c) in e.terms() {
            push(&mut work, &mut done, canonical_word(w), c.clone());
        }

        loop {
            let next = match &mut strategy {
                Strategy::Canonical => {
                    let Some((k, c)) = work.pop_last() else { break };
                    match self.pick_canonical(&k.word) {
                        None => {
                            done.insert(k.word, c);
                            continue;
                        }
                        Some((id, pos)) => (k, c, id, pos),
                    }
                }
                Strategy::Random(rng) => {
                    // Settle irreducible words, then pick among the rest.
                    let keys: Vec<Keyed> = work.keys().cloned().collect();
                    let mut reducible = Vec::new();
                    for k in keys {
                        let ms = self.matches(&k.word);
                        if ms.is_empty() {
                            let c = work.remove(&k).unwrap();
                            done.insert(k.word, c);
                        } else {
                            reducible.push((k, ms));
                        }
                    }
                    if reducible.is_empty() {
                        break;
                    }
                    let i = rng.gen_range(0..reducible.len());
                    let (k, ms) = reducible.swap_remove(i);
                    let (id, pos) = ms[rng.gen_range(0..ms.len())];
                    let c = work.remove(&k).unwrap();
                    (k, c, id, pos)
                }
            };
            let (k, c, id, pos) = next;
            steps += 1;
            if steps > self.max_steps {
                return Err(RewriteError::LimitExceeded { steps: self.max_steps });
            }
            if trace {
                tr.push(TraceStep { origin: self.rules[id].as_ref().unwrap().origin.clone(), word: k.word.to_string(), position: pos });
            }
            for (w, nc) in self.apply(&k.word, &c, id, pos) {
                max_alpha_pow = max_alpha_pow.max(nc.alpha_pow());
                if Keyed::new(w.clone()) >= k {
                    violations += 1;
                }
                push(&mut work, &mut done, w, nc);
            }
        }
        let result = Element::from_terms(done);
        max_alpha_pow = max_alpha_pow.max(result.max_alpha_pow());
        Ok(NormalFormReport { result, steps, trace: tr, max_alpha_pow, unverified_window, descent_violations: violations })
    }

    /// Adds the relation `eq = 0` after reducing it; returns the new rule id,
    /// `Ok(None)` if it reduced to zero, or the leading coefficient if that
    /// is not a unit.
    fn add_relation(&mut self, eq: &Element, origin: &str, derived: bool) -> Result<Result<Option<usize>, RingElem>, RewriteError> {
        let mut queue: VecDeque<(Element, String, bool)> = VecDeque::new();
        queue.push_back((eq.clone(), origin.to_string(), derived));
        let mut first: Option<Result<Option<usize>, RingElem>> = None;
        while let Some((eq, origin, derived)) = queue.pop_front() {
            let mut r = self.reduce(&eq)?;
            // The quotient by `J` is torsion free, so a relation divisible by
            // its leading coefficient may be divided. When the divisor
            // vanishes at q = 1 the quotient is only kept if it passes the
            // oracle: a catalog relation that is off by a multiple of (q − 1)
            // would otherwise turn into a rule that changes values at q = 1.
            if let Some(c) = r.leading().map(|(_, c)| c.clone()).filter(|c| !c.is_unit()) {
                if let Some(d) = divide_all(&r, &c) {
                    if nonvanishing_at_one(&c) || vanishes_at_one(&d) {
                        self.log.push(format!("divided by {c}: {origin}"));
                        r = d;
                    } else {
                        self.log.push(format!("refused division by {c}, quotient nonzero at q = 1: {origin}"));
                    }
                }
            }
            let Some((lead, c)) = r.leading().map(|(w, c)| (w.clone(), c.clone())) else {
                first.get_or_insert(Ok(None));
                continue;
            };
            let Ok(inv) = c.unit_inverse() else {
                if first.is_none() {
                    first = Some(Err(c));
                } else {
                    self.excluded.push(Excluded { origin: origin.clone(), reason: format!("non-unit leading coefficient {c} on {lead} after re-reduction") });
                }
                continue;
            };
            // lead = −inv·(r − c·lead)
            let mut tail = r.clone();
            tail.add_term(lead.clone(), c.neg());
            let rhs = tail.scale(&inv.neg());
            let rule = Rule::new(lead.clone(), rhs, origin.clone(), derived);
            let (lt, ls) = (rule.t_part.clone(), rule.s_part.clone());
            let id = self.insert(rule);
            first.get_or_insert(Ok(Some(id)));

            // Rules whose lhs the new rule reduces are re-queued.
            let stale: Vec<usize> = self
                .rules
                .iter()
                .enumerate()
                .filter_map(|(j, r)| r.as_ref().map(|r| (j, r)))
                .filter(|(j, r)| *j != id && contains_pattern(&r.lhs, &lt, &ls))
                .map(|(j, _)| j)
                .collect();
            for j in stale {
                let old = self.remove(j);
                queue.push_back((old.equation(), old.origin, old.derived));
            }
            // Right-hand sides touching the new lhs are renormalized.
            let touched: Vec<usize> = self
                .rules
                .iter()
                .enumerate()
                .filter_map(|(j, r)| r.as_ref().map(|r| (j, r)))
                .filter(|(_, r)| r.rhs.terms().any(|(w, _)| contains_pattern(w, &lt, &ls)))
                .map(|(j, _)| j)
                .collect();
            for j in touched {
                let rhs = self.rules[j].as_ref().unwrap().rhs.clone();
                let nrhs = self.reduce(&rhs)?;
                self.rules[j].as_mut().unwrap().rhs = nrhs;
            }
        }
        Ok(first.unwrap_or(Ok(None)))
    }

    /// Orients every instance by its leading word, smallest first, keeping the
    /// system interreduced.
    pub fn orient(instances: &[RelationInstance]) -> Result<RuleSet, RewriteError> {
        let mut rs = RuleSet::empty();
        let mut items: Vec<(Keyed, Element, String)> = instances
            .iter()
            .filter_map(|inst| {
                let e = canonicalize(&inst.element);
                let lead = e.leading()?.0.clone();
                Some((Keyed::new(lead), e, inst.key()))
            })
            .collect();
        items.sort_by(|a, b| a.0.cmp(&b.0));
        let mut pending: Vec<(Element, String, RingElem)> = Vec::new();
        for (_, e, origin) in items {
            if let Err(c) = rs.add_relation(&e, &origin, false)? {
                pending.push((e, origin, c));
            }
        }
        loop {
            let before = pending.len();
            let mut still = Vec::new();
            for (e, origin, _) in pending {
                if let Err(c) = rs.add_relation(&e, &origin, false)? {
                    still.push((e, origin, c));
                }
            }
            pending = still;
            if pending.len() == before {
                break;
            }
        }
        for (e, origin, c) in pending {
            let lead = rs.reduce(&e)?.leading().map(|(w, _)| w.to_string()).unwrap_or_default();
            rs.excluded.push(Excluded { origin, reason: format!("non-unit leading coefficient {c} on {lead}") });
        }
        Ok(rs)
    }

    /// The catalog on `n` labels, oriented and completed inside the
    /// verified window.
    pub fn standard(n: usize) -> Result<(RuleSet, CompletionReport), RewriteError> {
        let instances = all_instances(n, &InstanceOptions::default());
        let mut rs = RuleSet::orient(&instances)?;
        let rep = rs.complete((n as Label).min(VERIFIED_MAX_LABEL), VERIFIED_MAX_MD)?;
        Ok((rs, rep))
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&Rule> {
        self.rules().find(|r| &r.lhs == lhs)
    }

    /// Words on which two rule applications compete: proper overlaps and
    /// inclusions of `s` parts, and rules drawing on a common `t` factor.
    fn critical_words(&self, a: usize, by_first: &HashMap<Gen, Vec<usize>>, by_t: &HashMap<Gen, Vec<usize>>) -> Vec<Word> {
        let ra = self.rules[a].as_ref().unwrap();
        let la = ra.s_part.len();
        let mut out = Vec::new();
        let word = |t: &[Gen], parts: &[&[Gen]]| {
            let mut g: GenSeq = t.iter().copied().collect();
            for p in parts {
                g.extend_from_slice(p);
            }
            Word(g)
        };
        for k in 1..la {
            for &b in by_first.get(&ra.s_part[la - k]).into_iter().flatten() {
                let rb = self.rules[b].as_ref().unwrap();
                if rb.s_part.len() > k && rb.s_part[..k] == ra.s_part[la - k..] {
                    out.push(word(&t_lcm(&ra.t_part, &rb.t_part), &[&ra.s_part, &rb.s_part[k..]]));
                }
            }
        }
        for &len in &self.lens {
            for pos in 0..(la + 1).saturating_sub(len) {
                for &b in self.index.get(&ra.s_part[pos..pos + len]).into_iter().flatten() {
                    if b != a {
                        let rb = self.rules[b].as_ref().unwrap();
                        out.push(word(&t_lcm(&ra.t_part, &rb.t_part), &[&ra.s_part]));
                    }
                }
            }
        }
        let mut shared: Vec<usize> = ra.t_part.iter().flat_map(|g| by_t.get(g).into_iter().flatten().copied()).collect();
        shared.sort_unstable();
        shared.dedup();
        for b in shared {
            let rb = self.rules[b].as_ref().unwrap();
            let t = t_lcm(&ra.t_part, &rb.t_part);
            out.push(word(&t, &[&ra.s_part, &rb.s_part]));
            out.push(word(&t, &[&rb.s_part, &ra.s_part]));
        }
        out
    }

    /// One-step rewrites of `w` that disagree after reduction, as differences.
    fn critical_differences(&self, w: &Word) -> Result<Vec<Element>, RewriteError> {
        let one = RingElem::one();
        let mut forms = Vec::new();
        for (id, pos) in self.matches(w) {
            forms.push(self.reduce(&Element::from_terms(self.apply(w, &one, id, pos)))?);
        }
        forms.dedup();
        Ok(forms.windows(2).map(|p| p[0].sub(&p[1])).filter(|d| !d.is_zero()).collect())
    }

    /// Resolves every critical word whose labels are at most `max_label` and
    /// whose total label count (`t` factors included) is at most `max_md`.
    /// Derived rules are logged. Stops when a round adds no rule.
    pub fn complete(&mut self, max_label: Label, max_md: u32) -> Result<CompletionReport, RewriteError> {
        let mut added = 0;
        let mut rounds = 0;
        let in_window = |w: &Word| w.max_label() <= max_label && label_count(w) <= max_md;
        loop {
            let mut by_first: HashMap<Gen, Vec<usize>> = HashMap::new();
            let mut by_t: HashMap<Gen, Vec<usize>> = HashMap::new();
            for (i, r) in self.rules.iter().enumerate() {
                let Some(r) = r else { continue };
                if let Some(&g) = r.s_part.first() {
                    by_first.entry(g).or_default().push(i);
                }
                let mut ts = r.t_part.clone();
                ts.dedup();
                for g in ts {
                    by_t.entry(g).or_default().push(i);
                }
            }
            let live: Vec<usize> = (0..self.rules.len()).filter(|&i| self.rules[i].is_some()).collect();
            let words: BTreeSet<Word> = live
                .iter()
                .flat_map(|&a| self.critical_words(a, &by_first, &by_t))
                .filter(|w| in_window(w))
                .collect();
            let diffs: Vec<Result<Vec<Element>, RewriteError>> = words.par_iter().map(|w| self.critical_differences(w)).collect();
            let mut new_eqs = Vec::new();
            for (w, d) in words.iter().zip(diffs) {
                for e in d? {
                    new_eqs.push((e, format!("critical word {w}")));
                }
            }
            rounds += 1;
            self.log.push(format!("checked {} critical words, {} unresolved", words.len(), new_eqs.len()));
            let mut unresolved = Vec::new();
            let before = added;
            for (d, origin) in new_eqs {
                match self.add_relation(&d, &origin, true)? {
                    Ok(Some(id)) => {
                        added += 1;
                        let r = self.rules[id].as_ref().map(|r| r.lhs.to_string()).unwrap_or_default();
                        self.log.push(format!("derived rule with lhs {r} from {origin}"));
                    }
                    Ok(None) => {}
                    Err(c) => unresolved.push(Excluded { origin, reason: format!("non-unit leading coefficient {c}") }),
                }
            }
            if added == before {
                return Ok(CompletionReport { max_label, max_md, critical_words: words.len(), rounds, added, unresolved });
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletionReport {
    #[serde(rename = "maxLabel")]
    pub max_label: Label,
    #[serde(rename = "maxMd")]
    pub max_md: u32,
    #[serde(rename = "criticalWords")]
    pub critical_words: usize,
    pub rounds: usize,
    pub added: usize,
    /// Critical differences left over because their leading coefficient is
    /// not a unit and does not divide them.
    pub unresolved: Vec<Excluded>,
}

impl CompletionReport {
    pub fn confluent(&self) -> bool {
        self.unresolved.is_empty()
    }
}

fn t_lcm(a: &[Gen], b: &[Gen]) -> Vec<Gen> {
    let mut out: Vec<Gen> = a.to_vec();
    let mut rest: Vec<Gen> = a.to_vec();
    for g in b {
        match rest.iter().position(|x| x == g) {
            Some(p) => {
                rest.remove(p);
            }
            None => out.push(*g),
        }
    }
    out.sort_unstable();
    out
}

fn nonvanishing_at_one(c: &RingElem) -> bool {
    !c.spec_at(1).is_zero() && !c.spec_at(-1).is_zero()
}

/// Oracle check on derived relations, same standard as the catalog gate.
fn vanishes_at_one(e: &Element) -> bool {
    let n = e.max_label().max(1) as usize;
    sample_tuples(n, DIVISION_TRIALS, DIVISION_SEED).iter().all(|t| [1, -1].iter().all(|&s| eval_element(e, t, s).is_zero()))
}

fn divide_all(e: &Element, c: &RingElem) -> Option<Element> {
    let mut out = Vec::with_capacity(e.len());
    for (w, x) in e.terms() {
        out.push((w.clone(), x.div_exact(c)?));
    }
    Some(Element::from_terms(out))
}

fn contains_pattern(w: &Word, t_need: &[Gen], s_need: &[Gen]) -> bool {
    let k = t_len(w);
    let (ts, s) = w.gens().split_at(k);
    if !t_contains(ts, t_need) {
        return false;
    }
    if s_need.is_empty() {
        return true;
    }
    s.windows(s_need.len()).any(|win| win == s_need)
}


#[cfg(test)]
mod tests;
