use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::spanning::words_with_md;
use super::{RuleSet, Strategy};
use crate::algebra::{Element, Gen, Label, Word};
use crate::oracle::derive_seed;
use crate::qring::RingElem;
use crate::relcat::all_gens;

/// Family of random inputs for a fuzz run.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Shape {
    /// Products of exactly two generators.
    Pairs { n: usize },
    /// Several `t` factors around at most two `s` factors.
    THeavy { n: usize },
    /// Products of two `s_ijk`.
    TripleTriple { n: usize },
    /// Combinations of words with fixed label counts.
    LabelCounts { md: Vec<u32> },
    /// Arbitrary words up to a reduced degree.
    Degree { n: usize, max_degree: u32 },
    /// Arbitrary words whose total label count, `t` factors included, is
    /// at most `max_md`.
    Window { n: usize, max_md: u32 },
}

impl Shape {
    pub fn n(&self) -> usize {
        match self {
            Shape::Pairs { n } | Shape::THeavy { n } | Shape::TripleTriple { n } | Shape::Degree { n, .. } | Shape::Window { n, .. } => *n,
            Shape::LabelCounts { md } => md.len(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Shape::Pairs { n } => format!("pairs n={n}"),
            Shape::THeavy { n } => format!("t-heavy n={n}"),
            Shape::TripleTriple { n } => format!("triple-triple n={n}"),
            Shape::LabelCounts { md } => format!("md {md:?}"),
            Shape::Degree { n, max_degree } => format!("degree<={max_degree} n={n}"),
            Shape::Window { n, max_md } => format!("labels<={max_md} n={n}"),
        }
    }
}

/// Small random coefficient: `±q^{k}`, an integer, or one with a `β`.
pub fn random_coeff(rng: &mut impl Rng) -> RingElem {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let base = match rng.gen_range(0..6) {
        0..=2 => RingElem::q_pow(rng.gen_range(-2..=2)),
        3 => RingElem::from_int(rng.gen_range(2..=3)),
        4 => RingElem::q_half_pow(rng.gen_range(-3..=3)),
        _ => RingElem::beta().mul(&RingElem::q_pow(rng.gen_range(-1..=1))),
    };
    base.mul(&RingElem::from_int(sign))
}

/// Random word of reduced degree at most `max_degree` in the generators on
/// `n` labels, with at most `max_len` factors.
pub fn random_word(rng: &mut impl Rng, n: usize, max_degree: u32, max_len: usize) -> Word {
    random_word_by(rng, n, max_degree, max_len, Gen::weight)
}

/// Random word with at most `max_md` labels in total, `t` factors included.
pub fn random_window_word(rng: &mut impl Rng, n: usize, max_md: u32, max_len: usize) -> Word {
    random_word_by(rng, n, max_md, max_len, |g| g.labels().len() as u32)
}

fn random_word_by(rng: &mut impl Rng, n: usize, budget: u32, max_len: usize, cost: impl Fn(&Gen) -> u32) -> Word {
    let gens = all_gens(n);
    let mut out = Vec::new();
    let mut used = 0;
    let len = rng.gen_range(1..=max_len);
    for _ in 0..len {
        let fits: Vec<&Gen> = gens.iter().filter(|g| used + cost(g) <= budget).collect();
        let Some(g) = fits.choose(rng) else { break };
        used += cost(g);
        out.push(**g);
    }
    Word::from_gens(&out)
}

/// Random element with up to `max_terms` terms.
pub fn random_element(rng: &mut impl Rng, n: usize, max_degree: u32, max_terms: usize) -> Element {
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let w = random_word(rng, n, max_degree, 5);
        e.add_term(w, random_coeff(rng));
    }
    e
}

fn sample(shape: &Shape, rng: &mut impl Rng, md_words: &[Word]) -> Element {
    let pick = |rng: &mut ChaCha8Rng, gs: &[Gen]| *gs.choose(rng).expect("nonempty");
    let mut r = ChaCha8Rng::seed_from_u64(rng.gen());
    match shape {
        Shape::Pairs { n } => {
            let gs = all_gens(*n);
            let w = Word::from_gens(&[pick(&mut r, &gs), pick(&mut r, &gs)]);
            Element::term(w, random_coeff(&mut r))
        }
        Shape::THeavy { n } => {
            let ts: Vec<Gen> = (1..=*n as Label).map(Gen::T).collect();
            let ss: Vec<Gen> = all_gens(*n).into_iter().filter(|g| !g.is_t()).collect();
            let mut g = Vec::new();
            for _ in 0..r.gen_range(2..=4) {
                g.push(pick(&mut r, &ts));
            }
            for _ in 0..r.gen_range(0..=2) {
                let s = pick(&mut r, &ss);
                let at = r.gen_range(0..=g.len());
                g.insert(at, s);
            }
            Element::term(Word::from_gens(&g), random_coeff(&mut r))
        }
        Shape::TripleTriple { n } => {
            let ss: Vec<Gen> = all_gens(*n).into_iter().filter(|g| matches!(g, Gen::S3(..))).collect();
            Element::term(Word::from_gens(&[pick(&mut r, &ss), pick(&mut r, &ss)]), random_coeff(&mut r))
        }
        Shape::LabelCounts { .. } => {
            let mut e = Element::zero();
            for _ in 0..r.gen_range(1..=2) {
                e.add_term(md_words.choose(&mut r).expect("nonempty").clone(), random_coeff(&mut r));
            }
            e
        }
        Shape::Degree { n, max_degree } => random_element(&mut r, *n, *max_degree, 3),
        Shape::Window { n, max_md } => {
            let mut e = Element::zero();
            for _ in 0..r.gen_range(1..=3) {
                e.add_term(random_window_word(&mut r, *n, *max_md, 6), random_coeff(&mut r));
            }
            e
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Divergence {
    pub trial: usize,
    pub seed: u64,
    pub element: String,
    pub canonical: String,
    pub random: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub shape: String,
    pub trials: usize,
    pub seed: u64,
    pub divergences: Vec<Divergence>,
    /// Trials that hit the step cap under either strategy.
    #[serde(rename = "limitExceeded")]
    pub limit_exceeded: usize,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.divergences.is_empty() && self.limit_exceeded == 0
    }
}

/// Compares the canonical normal form with a randomized rewrite order on
/// seeded random inputs of the given shape.
pub fn confluence_fuzz(rules: &RuleSet, shape: &Shape, trials: usize, seed: u64) -> ConfluenceReport {
    let md_words = match shape {
        Shape::LabelCounts { md } => words_with_md(md),
        _ => Vec::new(),
    };
    let outcomes: Vec<Option<Result<(), Divergence>>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let s = derive_seed(seed, trial as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let e = sample(shape, &mut rng, &md_words);
            let a = rules.normal_form(&e).ok()?.result;
            let b = rules.normal_form_with(&e, Strategy::Random(&mut rng), false).ok()?.result;
            Some(if a == b {
                Ok(())
            } else {
                Err(Divergence { trial, seed: s, element: e.to_string(), canonical: a.to_string(), random: b.to_string() })
            })
        })
        .collect();
    let limit_exceeded = outcomes.iter().filter(|o| o.is_none()).count();
    let divergences = outcomes.into_iter().flatten().filter_map(Result::err).collect();
    ConfluenceReport { shape: shape.name(), trials, seed, divergences, limit_exceeded }
}
