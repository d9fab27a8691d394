//! Generators, words and elements of the free algebra over the coefficient ring.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;
use thiserror::Error;

use crate::qring::RingElem;

pub type Label = u8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("label {label} out of range 1..={n}")]
    IndexOutOfRange { label: u32, n: u32 },
}

/// Generator: `t_i`, `s_ij` (i<j) or `s_ijk` (i<j<k).
///
/// The derived order is `T < S2 < S3`, then by indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    T(Label),
    S2(Label, Label),
    S3(Label, Label, Label),
}

impl Gen {
    /// Builds a generator from unordered distinct labels.
    pub fn make(raw: &[u32], n: u32) -> Result<Gen, SymbolError> {
        for &l in raw {
            if l == 0 || l > n || l > Label::MAX as u32 {
                return Err(SymbolError::IndexOutOfRange { label: l, n });
            }
        }
        let mut v: SmallVec<[Label; 3]> = raw.iter().map(|&l| l as Label).collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(SymbolError::InvalidSymbol(format!("repeated index in {raw:?}")));
        }
        match v.as_slice() {
            [a] => Ok(Gen::T(*a)),
            [a, b] => Ok(Gen::S2(*a, *b)),
            [a, b, c] => Ok(Gen::S3(*a, *b, *c)),
            _ => Err(SymbolError::InvalidSymbol(format!("{} indices", raw.len()))),
        }
    }

    /// `s` symbol from distinct labels (two or three of them).
    pub fn s(raw: &[u32], n: u32) -> Result<Gen, SymbolError> {
        if raw.len() < 2 {
            return Err(SymbolError::InvalidSymbol(format!("s needs 2 or 3 indices, got {raw:?}")));
        }
        Gen::make(raw, n)
    }

    pub fn labels(&self) -> SmallVec<[Label; 3]> {
        match *self {
            Gen::T(a) => SmallVec::from_slice(&[a]),
            Gen::S2(a, b) => SmallVec::from_slice(&[a, b]),
            Gen::S3(a, b, c) => SmallVec::from_slice(&[a, b, c]),
        }
    }

    pub fn is_t(&self) -> bool {
        matches!(self, Gen::T(_))
    }

    /// Reduced degree weight: 0, 2, 3.
    pub fn weight(&self) -> u32 {
        match self {
            Gen::T(_) => 0,
            Gen::S2(..) => 2,
            Gen::S3(..) => 3,
        }
    }

    pub fn max_label(&self) -> Label {
        *self.labels().last().unwrap()
    }

    /// Relabels through `f` and re-sorts the indices.
    pub fn map_labels(&self, f: impl Fn(Label) -> Label) -> Result<Gen, SymbolError> {
        let raw: SmallVec<[u32; 3]> = self.labels().iter().map(|&l| f(l) as u32).collect();
        Gen::make(&raw, Label::MAX as u32)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls = self.labels();
        let head = if self.is_t() { 't' } else { 's' };
        if self.is_t() || ls.iter().all(|&l| l < 10) {
            write!(f, "{head}")?;
            for l in &ls {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
            write!(f, "{head}{{{}}}", parts.join(","))
        }
    }
}

/// Ordered product of generators; empty is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_gens(gens: &[Gen]) -> Self {
        Word(SmallVec::from_slice(gens))
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn reduced_degree(&self) -> u32 {
        self.0.iter().map(Gen::weight).sum()
    }

    /// Occurrence count of each label `1..=n` (index `v-1`).
    pub fn multidegree(&self, n: usize) -> Vec<u32> {
        let mut md = vec![0u32; n];
        for g in &self.0 {
            for l in g.labels() {
                if (l as usize) <= n {
                    md[l as usize - 1] += 1;
                }
            }
        }
        md
    }

    /// Twice the number of interleaving index pairs over all pairs of `s` factors.
    pub fn crossing_number(&self) -> u32 {
        let s: SmallVec<[Gen; 8]> = self.0.iter().filter(|g| !g.is_t()).copied().collect();
        let mut total = 0;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                total += crossings(&s[i], &s[j]);
            }
        }
        total
    }

    pub fn s_count(&self) -> usize {
        self.0.iter().filter(|g| !g.is_t()).count()
    }

    pub fn max_label(&self) -> Label {
        self.0.iter().map(Gen::max_label).max().unwrap_or(0)
    }

    pub fn key(&self) -> TermKey<'_> {
        TermKey {
            degree: self.reduced_degree(),
            cn: self.crossing_number(),
            s_count: Reverse(self.s_count()),
            len: self.len(),
            word: self,
        }
    }
}

fn interleave(a: Label, b: Label, c: Label, d: Label) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Crossing contribution of two `s` generators.
pub fn crossings(x: &Gen, y: &Gen) -> u32 {
    let (lx, ly) = (x.labels(), y.labels());
    let mut c = 0;
    for i in 0..lx.len() {
        for j in i + 1..lx.len() {
            for k in 0..ly.len() {
                for l in k + 1..ly.len() {
                    if interleave(lx[i], lx[j], ly[k], ly[l]) {
                        c += 2;
                    }
                }
            }
        }
    }
    c
}

/// Sort key realizing the term order: reduced degree, crossing number,
/// fewer `s` factors first-greater, length, then lexicographic.
#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TermKey<'a> {
    pub degree: u32,
    pub cn: u32,
    pub s_count: Reverse<usize>,
    pub len: usize,
    pub word: &'a Word,
}

pub fn term_cmp(a: &Word, b: &Word) -> Ordering {
    a.key().cmp(&b.key())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Finite `R`-linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Word, RingElem>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RingElem::one())
    }

    pub fn scalar(c: RingElem) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: RingElem) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RingElem::one())
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(Word::from_gens(&[g]))
    }

    pub fn add_term(&mut self, w: Word, c: RingElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RingElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&RingElem> {
        self.terms.get(w)
    }

    pub fn into_terms(self) -> BTreeMap<Word, RingElem> {
        self.terms
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RingElem)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut e = self.clone();
        for (w, c) in &other.terms {
            e.add_term(w.clone(), c.clone());
        }
        e
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, k: &RingElem) -> Element {
        if k.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(k))).collect() }
    }

    pub fn mul(&self, other: &Element) -> Element {
        let mut e = Element::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                e.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        e
    }

    /// Reverses every word and bars every coefficient.
    pub fn mirror(&self) -> Element {
        Element { terms: self.terms.iter().map(|(w, c)| (w.reversed(), c.bar())).collect() }
    }

    /// Greatest word in the term order.
    pub fn leading(&self) -> Option<(&Word, &RingElem)> {
        self.terms.iter().max_by(|a, b| term_cmp(a.0, b.0))
    }

    /// Terms in descending term order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &RingElem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| term_cmp(b.0, a.0));
        v
    }

    pub fn max_label(&self) -> Label {
        self.terms.keys().map(Word::max_label).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Word::reduced_degree).max().unwrap_or(0)
    }

    pub fn max_alpha_pow(&self) -> u32 {
        self.terms.values().map(RingElem::alpha_pow).max().unwrap_or(0)
    }

    /// Relabels every generator through `f`.
    pub fn map_labels(&self, f: impl Fn(Label) -> Label + Copy) -> Result<Element, SymbolError> {
        let mut e = Element::zero();
        for (w, c) in &self.terms {
            let gens = w.0.iter().map(|g| g.map_labels(f)).collect::<Result<SmallVec<_>, _>>()?;
            e.add_term(Word(gens), c.clone());
        }
        Ok(e)
    }
}

/// `s_ii = α − β t_i²`.
pub fn expand_sii(i: Label) -> Element {
    let t = Gen::T(i);
    let mut e = Element::scalar(RingElem::alpha());
    e.add_term(Word::from_gens(&[t, t]), RingElem::beta().neg());
    e
}

/// Four-index symbol `β(s_ik s_jl − q² s_ij s_kl − q̄² s_jk s_il)` for `i<j<k<l`.
pub fn s4_macro(i: Label, j: Label, k: Label, l: Label) -> Result<Element, SymbolError> {
    if !(i < j && j < k && k < l) || i == 0 {
        return Err(SymbolError::InvalidSymbol(format!("s4 needs increasing labels, got ({i},{j},{k},{l})")));
    }
    let w = |a: Gen, b: Gen| Word::from_gens(&[a, b]);
    let mut e = Element::zero();
    e.add_term(w(Gen::S2(i, k), Gen::S2(j, l)), RingElem::one());
    e.add_term(w(Gen::S2(i, j), Gen::S2(k, l)), RingElem::q_pow(2).neg());
    e.add_term(w(Gen::S2(j, k), Gen::S2(i, l)), RingElem::q_pow(-2).neg());
    Ok(e.scale(&RingElem::beta()))
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            let single = c.num().terms().len() == 1;
            let neg = single && c.num().terms()[0].1 < num_bigint::BigInt::from(0);
            let c = if neg { c.neg() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                if c.is_compound() && c.alpha_pow() == 0 {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            } else if c.is_one() {
                write!(f, "{w}")?;
            } else if c.is_compound() && c.alpha_pow() == 0 {
                write!(f, "({c})*{w}")?;
            } else {
                write!(f, "{c}*{w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: RingElem,
    word: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementRepr {
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| TermRepr { coeff: c.clone(), word: w.0.iter().map(|g| g.to_string()).collect() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(d)?;
        let mut e = Element::zero();
        for t in repr.terms {
            let gens = t
                .word
                .iter()
                .map(|s| crate::parse::parse_gen(s))
                .collect::<Result<SmallVec<_>, _>>()
                .map_err(serde::de::Error::custom)?;
            e.add_term(Word(gens), t.coeff);
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2(a: Label, b: Label) -> Gen {
        Gen::S2(a, b)
    }

    #[test]
    fn gen_make_sorts_and_rejects() {
        assert_eq!(Gen::make(&[4, 2], 6).unwrap(), s2(2, 4));
        assert_eq!(Gen::make(&[5, 1, 3], 6).unwrap(), Gen::S3(1, 3, 5));
        assert!(matches!(Gen::make(&[2, 2], 6), Err(SymbolError::InvalidSymbol(_))));
        assert!(matches!(Gen::make(&[2, 7], 6), Err(SymbolError::IndexOutOfRange { label: 7, n: 6 })));
    }

    #[test]
    fn measures() {
        let w = Word::from_gens(&[Gen::T(1), s2(1, 2), Gen::S3(3, 4, 5)]);
        assert_eq!(w.reduced_degree(), 5);
        assert_eq!(Word::from_gens(&[s2(1, 2), s2(2, 3)]).multidegree(3), vec![1, 2, 1]);
        assert_eq!(Word::from_gens(&[s2(1, 3), s2(2, 4)]).crossing_number(), 2);
        assert_eq!(Word::from_gens(&[s2(1, 2), s2(2, 3)]).crossing_number(), 0);
        assert_eq!(Word::from_gens(&[s2(1, 4), s2(2, 3)]).crossing_number(), 0);
        assert_eq!(Word::from_gens(&[Gen::T(2), s2(1, 3)]).crossing_number(), 0);
    }

    #[test]
    fn term_order_prefers_fewer_factors_at_equal_degree() {
        let sq = Word::from_gens(&[Gen::S3(1, 2, 3), Gen::S3(1, 2, 3)]);
        let tri = Word::from_gens(&[s2(1, 2), s2(2, 3), s2(1, 3)]);
        assert_eq!(term_cmp(&sq, &tri), Ordering::Greater);
        let a = Word::from_gens(&[s2(2, 4), s2(1, 3)]);
        let b = Word::from_gens(&[s2(1, 3), s2(2, 4)]);
        assert_eq!(term_cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn products_and_mirror() {
        let e = Element::gen(Gen::T(1)).mul(&Element::gen(s2(2, 3)));
        assert_eq!(e.coeff(&Word::from_gens(&[Gen::T(1), s2(2, 3)])), Some(&RingElem::one()));
        let a = Element::gen(s2(1, 2)).scale(&RingElem::q_pow(1));
        let b = Element::gen(s2(1, 2)).scale(&RingElem::q_pow(-1));
        assert_eq!(a.mul(&b), Element::word(Word::from_gens(&[s2(1, 2), s2(1, 2)])));
        let m = Element::term(Word::from_gens(&[s2(1, 2), s2(2, 3)]), RingElem::q_half_pow(1)).mirror();
        assert_eq!(m, Element::term(Word::from_gens(&[s2(2, 3), s2(1, 2)]), RingElem::q_half_pow(-1)));
    }

    #[test]
    fn macros() {
        let e = expand_sii(2);
        assert_eq!(e.mirror(), e);
        assert_eq!(e.coeff(&Word::empty()), Some(&RingElem::alpha()));
        let m = s4_macro(1, 2, 3, 4).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.coeff(&Word::from_gens(&[s2(1, 3), s2(2, 4)])), Some(&RingElem::beta()));
        assert!(s4_macro(1, 3, 2, 4).is_err());
    }

    #[test]
    fn display() {
        let mut e = Element::gen(s2(2, 4)).mul(&Element::gen(s2(1, 3)));
        e.add_term(Word::from_gens(&[s2(1, 4), s2(2, 3)]), RingElem::q_pow(2).sub(&RingElem::q_pow(-2)));
        e.add_term(Word::from_gens(&[s2(1, 2), s2(3, 4)]), RingElem::q_pow(2).neg());
        assert_eq!(e.to_string(), "s24 s13 + (q^2 - q^-2)*s14 s23 - q^2*s12 s34");
        assert_eq!(Gen::S2(3, 12).to_string(), "s{3,12}");
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(Element::one().to_string(), "1");
    }
}
