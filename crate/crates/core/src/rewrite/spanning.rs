use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::{RewriteError, RuleSet};
use crate::algebra::{Element, Gen, Word};
use crate::oracle::{eval_element, sample_tuples};
use crate::parse::parse_with;
use crate::qring::RingElem;

/// A label-count bound together with its expected basis words.
#[derive(Clone, Debug)]
pub struct SpanningCase {
    pub name: &'static str,
    pub md: Vec<u32>,
    pub basis: Vec<&'static str>,
}

pub fn spanning_cases() -> Vec<SpanningCase> {
    vec![
        SpanningCase {
            name: "six-distinct",
            md: vec![1, 1, 1, 1, 1, 1],
            basis: vec![
                "s13 s25 s46", "s12 s35 s46", "s23 s46 s15", "s34 s15 s26", "s45 s26 s13",
                "s56 s13 s24", "s16 s24 s35", "s123 s456", "s234 s156", "s345 s126",
                "s12 s34 s56", "s16 s23 s45", "s14 s23 s56", "s16 s25 s34", "s12 s36 s45",
            ],
        },
        SpanningCase {
            name: "five-one-double",
            md: vec![1, 1, 2, 1, 1],
            basis: vec!["s13 s25 s34", "s13 s24 s35", "s14 s23 s35", "s12 s34 s35", "s13 s23 s45", "s15 s23 s34"],
        },
        SpanningCase {
            name: "four-adjacent-doubles",
            md: vec![1, 2, 2, 1],
            basis: vec!["s14 s23 s23", "s12 s23 s34", "s13 s23 s24"],
        },
        SpanningCase {
            name: "four-alternate-doubles",
            md: vec![2, 1, 2, 1],
            basis: vec!["s12 s13 s34", "s13 s14 s23", "s13 s13 s24"],
        },
        SpanningCase {
            name: "five-distinct",
            md: vec![1, 1, 1, 1, 1],
            basis: vec!["s12 s345", "s23 s145", "s34 s125", "s45 s123", "s15 s234", "s13 s245"],
        },
        SpanningCase {
            name: "four-one-double",
            md: vec![2, 1, 1, 1],
            basis: vec!["s12 s134", "s13 s124", "s14 s123"],
        },
    ]
}

#[derive(Debug, Error)]
pub enum SpanningError {
    #[error("unknown spanning case {0:?}")]
    UnknownCase(Vec<u32>),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanningReport {
    pub case: String,
    pub md: Vec<u32>,
    pub shift: usize,
    #[serde(rename = "basisWords")]
    pub basis_words: Vec<String>,
    #[serde(rename = "basisCount")]
    pub basis_count: usize,
    /// Number of basis words whose reduced tops are independent.
    pub rank: usize,
    pub products: usize,
    #[serde(rename = "inSpan")]
    pub in_span: usize,
    #[serde(rename = "oracleMismatches")]
    pub oracle_mismatches: usize,
    #[serde(rename = "maxAlphaPow")]
    pub max_alpha_pow: u32,
    /// Basis words whose reduced tops depend on earlier ones.
    pub dependent: Vec<String>,
    pub failures: Vec<String>,
}

impl SpanningReport {
    /// Every product reduces into the span with its value unchanged.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.in_span == self.products && self.oracle_mismatches == 0
    }

    pub fn independent(&self) -> bool {
        self.rank == self.basis_count
    }
}

/// Finds the listed case and cyclic shift `v` with `md[(k−1+v) mod m] = case[k−1]`.
pub fn resolve_case(md: &[u32]) -> Option<(SpanningCase, usize)> {
    let m = md.len();
    spanning_cases().into_iter().filter(|c| c.md.len() == m).find_map(|c| {
        (0..m).find(|&v| (0..m).all(|k| md[(k + v) % m] == c.md[k])).map(|v| (c, v))
    })
}

/// Every word in the `s` generators whose label counts equal `md`.
pub fn words_with_md(md: &[u32]) -> Vec<Word> {
    let m = md.len() as u32;
    let gens: Vec<Gen> = (1..=m)
        .flat_map(|a| (a + 1..=m).map(move |b| vec![a, b]))
        .chain((1..=m).flat_map(|a| (a + 1..=m).flat_map(move |b| (b + 1..=m).map(move |c| vec![a, b, c]))))
        .map(|ls| Gen::s(&ls, m).expect("valid labels"))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut left = md.to_vec();
    fn go(gens: &[Gen], left: &mut [u32], cur: &mut Vec<Gen>, out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(Word::from_gens(cur));
            return;
        }
        for g in gens {
            let ls = g.labels();
            if ls.iter().all(|&l| left[l as usize - 1] > 0) {
                for &l in &ls {
                    left[l as usize - 1] -= 1;
                }
                cur.push(*g);
                go(gens, left, cur, out);
                cur.pop();
                for &l in &ls {
                    left[l as usize - 1] += 1;
                }
            }
        }
    }
    go(&gens, &mut left, &mut cur, &mut out);
    out
}

fn top_part(e: &Element, degree: u32) -> Element {
    Element::from_terms(e.terms().filter(|(w, _)| w.reduced_degree() == degree).map(|(w, c)| (w.clone(), c.clone())))
}

/// Row echelon form over `R` using unit pivots only.
struct Echelon {
    rows: Vec<(Word, RingElem, Element)>,
}

impl Echelon {
    fn reduce(&self, e: &Element) -> Element {
        let mut e = e.clone();
        for (w, c, row) in &self.rows {
            if let Some(x) = e.coeff(w) {
                let f = x.mul(&c.unit_inverse().expect("unit pivot"));
                e = e.sub(&row.scale(&f));
            }
        }
        e
    }

    /// Adds a row unless it reduces to zero or has no unit coefficient left.
    fn push(&mut self, e: &Element) -> Result<(), &'static str> {
        let r = self.reduce(e);
        if r.is_zero() {
            return Err("dependent on earlier basis words");
        }
        let Some((w, c)) = r.sorted_terms().into_iter().find(|(_, c)| c.is_unit()).map(|(w, c)| (w.clone(), c.clone())) else {
            return Err("without a unit pivot");
        };
        // Keep earlier rows reduced against the new pivot.
        let inv = c.unit_inverse().expect("unit");
        for (_, _, row) in self.rows.iter_mut() {
            if let Some(x) = row.coeff(&w) {
                *row = row.sub(&r.scale(&x.mul(&inv)));
            }
        }
        self.rows.push((w, c, r));
        Ok(())
    }
}

/// Reduces every product with label counts `md` and checks that its
/// top-degree part lies in the span of the reduced basis words.
pub fn spanning_check(rules: &RuleSet, md: &[u32], trials: usize, seed: u64) -> Result<SpanningReport, SpanningError> {
    let (case, shift) = resolve_case(md).ok_or_else(|| SpanningError::UnknownCase(md.to_vec()))?;
    let m = md.len() as u32;
    let relabel = move |k: u32| Some((k - 1 + shift as u32) % m + 1);
    let degree: u32 = md.iter().sum();
    let basis: Vec<Element> = case
        .basis
        .iter()
        .map(|b| parse_with(b, m, &relabel).expect("basis word parses"))
        .collect();
    let basis_words: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
    let mut failures = Vec::new();
    let mut dependent = Vec::new();
    let mut max_alpha_pow = 0;

    let mut ech = Echelon { rows: Vec::new() };
    let mut rank = 0;
    for (b, name) in basis.iter().zip(&basis_words) {
        let nf = rules.normal_form(b)?;
        max_alpha_pow = max_alpha_pow.max(nf.max_alpha_pow);
        match ech.push(&top_part(&nf.result, degree)) {
            Ok(()) => rank += 1,
            Err(why) => dependent.push(format!("{name} {why}")),
        }
    }

    let words = words_with_md(md);
    let tuples = sample_tuples(m as usize, trials, seed);
    // (in span, oracle agrees, alpha power, label-count leak) per product
    type Outcome = Result<(bool, bool, u32, Option<String>), RewriteError>;
    let results: Vec<Outcome> = words
        .par_iter()
        .map(|w| {
            let e = Element::word(w.clone());
            let nf = rules.normal_form(&e)?;
            let top = top_part(&nf.result, degree);
            let leak = top.terms().find(|(tw, _)| tw.multidegree(m as usize) != md).map(|(tw, _)| format!("{w} reduces to {tw} with other label counts"));
            let in_span = ech.reduce(&top).is_zero();
            let oracle_ok = tuples
                .iter()
                .all(|t| [1, -1].iter().all(|&s| eval_element(&e, t, s) == eval_element(&nf.result, t, s)));
            Ok((in_span, oracle_ok, nf.max_alpha_pow, leak))
        })
        .collect();
    let mut in_span = 0;
    let mut oracle_mismatches = 0;
    for (w, r) in words.iter().zip(results) {
        let (ok, oracle_ok, a, leak) = r?;
        max_alpha_pow = max_alpha_pow.max(a);
        if ok {
            in_span += 1;
        } else {
            failures.push(format!("{w} does not reduce into the span"));
        }
        if !oracle_ok {
            oracle_mismatches += 1;
            failures.push(format!("{w} changes its value under reduction"));
        }
        failures.extend(leak);
    }
    Ok(SpanningReport {
        case: case.name.to_string(),
        md: md.to_vec(),
        shift,
        basis_count: basis.len(),
        basis_words,
        rank,
        products: words.len(),
        in_span,
        oracle_mismatches,
        max_alpha_pow,
        dependent,
        failures,
    })
}

/// All cyclic images of the listed cases.
pub fn all_spanning_shapes() -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for c in spanning_cases() {
        let m = c.md.len();
        for v in 0..m {
            let mut md = vec![0; m];
            for k in 0..m {
                md[(k + v) % m] = c.md[k];
            }
            out.insert(md);
        }
    }
    out.into_iter().collect()
}
