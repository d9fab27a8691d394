//! The relation catalog.
//!
//! Each template is a text body over formal labels `1..m` that is asserted to
//! vanish. An instance substitutes an increasing label tuple, rotates the
//! labels cyclically, sorts each generator's indices, expands `s_ii`, and
//! optionally takes the mirror.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Element, Gen, Label, Word};
use crate::parse::{parse_with, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    Central,
    Commuting,
    TypeTwo,
    TypeOne,
}

#[derive(Clone, Debug)]
pub struct Template {
    pub family: &'static str,
    pub kind: FamilyKind,
    pub arity: usize,
    pub source: &'static str,
    pub body: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstantiateError {
    #[error("template {family} has arity {arity}, got {got} labels")]
    ArityMismatch { family: String, arity: usize, got: usize },
    #[error("tuple {0:?} is not strictly increasing")]
    NotIncreasing(Vec<Label>),
    #[error("shift {shift} out of range for arity {arity}")]
    BadShift { shift: usize, arity: usize },
    #[error("template body: {0}")]
    Parse(#[from] ParseError),
}

const fn tpl(family: &'static str, kind: FamilyKind, arity: usize, source: &'static str, body: &'static str) -> (&'static str, FamilyKind, usize, &'static str, &'static str) {
    (family, kind, arity, source, body)
}

use FamilyKind::*;

const TEMPLATES: &[(&str, FamilyKind, usize, &str, &str)] = &[
    tpl("disjoint-2-2", Commuting, 4, "disjoint pair curves commute", "s34 s12 - s12 s34"),
    tpl("disjoint-2-3", Commuting, 5, "disjoint pair and triple curves commute", "s345 s12 - s12 s345"),
    tpl("disjoint-3-3", Commuting, 6, "disjoint triple curves commute", "s123 s456 - s456 s123"),
    tpl(
        "comm-2-2-adjacent",
        Commuting,
        3,
        "pair curves sharing a puncture",
        "q s23 s12 - q^-1 s12 s23 - (q - q^-1)(s22 s13 + t2 s123)",
    ),
    tpl(
        "comm-2-2-crossing",
        Commuting,
        4,
        "crossing pair curves",
        "s24 s13 - s13 s24 - (q^2 - q^-2)(s14 s23 - s12 s34)",
    ),
    tpl(
        "comm-2-3-nested",
        Commuting,
        3,
        "pair curve inside a triple curve",
        "s123 s12 - s12 s123 - (q^2 - q^-2)(q t2 (s12 s13 - s11 s23 - t1 s123) - q^-1 t1 (s12 s23 - s22 s13 - t2 s123))",
    ),
    tpl(
        "comm-2-3-adjacent",
        Commuting,
        4,
        "pair curve meeting a triple curve at its first puncture",
        "q s234 s12 - q^-1 s12 s234 - (q - q^-1)(s22 s134 + b t2 (s13 s24 + (1 - q^2) s12 s34 - q^-2 s14 s23))",
    ),
    tpl(
        "comm-2-3-outer",
        Commuting,
        4,
        "pair and triple curves sharing their first puncture, nested",
        "q^-1 s134 s12 - q s12 s134 - (q^-1 - q)(s11 s234 + b t1 (s13 s24 + (1 - q^2) s12 s34 - q^-2 s14 s23))",
    ),
    tpl(
        "comm-2-3-interleaved",
        Commuting,
        4,
        "pair and triple curves sharing their first puncture, interleaved",
        "s124 s13 - s13 s124 - (q - q^-1)(q^-1 s14 s123 - q s12 s134 + (q - q^-1) s11 s234 \
         + b t1 ((q - q^-1) s13 s24 + (2q - q^3) s12 s34 + (q^-3 - 2q^-1) s14 s23))",
    ),
    tpl(
        "comm-2-3-crossing",
        Commuting,
        5,
        "pair curve crossing a disjoint triple curve",
        "s245 s13 - s13 s245 - (q^2 - q^-2)(s23 s145 - s12 s345)",
    ),
    tpl(
        "type2-disjoint",
        TypeTwo,
        5,
        "quantized alternating relation, five punctures",
        "q^2 s15 s234 - s25 s134 + s35 s124 - q^-2 s45 s123 - (q - q^-1)(q^-1 s12 s345 + q s34 s125)",
    ),
    tpl(
        "type2-shared",
        TypeTwo,
        4,
        "quantized alternating relation, repeated puncture",
        "q^2 s12 s134 - s13 s124 + q^-2 s14 s123 - (q^2 + q^-2 - 1) s11 s234 \
         - (q - q^-1)^2 b t1 (s13 s24 - q^2 s12 s34 - q^-2 s14 s23)",
    ),
    tpl(
        "type1-disjoint-a",
        TypeOne,
        6,
        "three crossing pair curves, difference form",
        "s24 s36 s15 - s13 s25 s46 - (a (s234 s156 - s123 s456) + (q^2 - q^-2)(s23 s46 s15 - s56 s13 s24) \
         + q^2 (s16 s24 s35 - s12 s35 s46) + q^-2 (s34 s15 s26 - s45 s26 s13) \
         + q^-4 (s12 s36 s45 - s16 s25 s34) + (q^2 - q^-2)^2 (s12 s34 s56 - s16 s23 s45))",
    ),
    tpl(
        "type1-disjoint-b",
        TypeOne,
        6,
        "three mutually crossing pair curves",
        "s14 s25 s36 - (q^3 + q^-3) s123 s456 - (q^-2 (s24 s36 s15 + s35 s14 s26) - s34 s15 s26 - s16 s24 s35 \
         + q^-6 s16 s25 s34 + (1 - q^-2)(s13 s25 s46 + s45 s26 s13 - q^2 s12 s35 s46 - q^-2 s23 s46 s15) \
         + (q^4 - 2q^2 + 2q^-2 - q^-6) s12 s34 s56 + (2 - q^2 - q^-4)(s56 s13 s24 + s16 s23 s45) \
         + (q^2 + q^-4 - 2q^-2)(s14 s23 s56 + s12 s36 s45))",
    ),
    tpl(
        "type1-interleaved-a",
        TypeOne,
        6,
        "disjoint triple curves, two-and-one interleaving",
        "a s124 s356 - (s13 s25 s46 + q^-2 (s34 s26 s15 - s23 s15 s46 - s45 s13 s26) \
         + (2 - q^-4) s16 s23 s45 - q^-4 s16 s34 s25 \
         + (q^2 - 1)(a s123 s456 + (q^2 - q^-2 - 1) s12 s34 s56 - s12 s35 s46 - s56 s13 s24 \
         - q^-4 (s12 s36 s45 + s56 s14 s23)))",
    ),
    tpl(
        "type1-interleaved-b",
        TypeOne,
        6,
        "disjoint triple curves, alternating",
        "a s135 s246 - (q^2 s14 s25 s36 + (q^2 + q^4 - q^6) s12 s34 s56 - s16 s25 s34 \
         + (2q^4 - 2q^2 + 2q^-2 - 1) s16 s23 s45 \
         + (1 - q^-2 - q^4)(s14 s23 s56 + s12 s36 s45) \
         + (1 - q^2)(q^2 a s123 s456 - q^2 (s12 s35 s46 + s56 s13 s24) \
         + s13 s25 s46 + s23 s46 s15 + s45 s26 s13 - q^-1 a s34 s15 s26))",
    ),
    tpl(
        "type1-one-shared-a",
        TypeOne,
        5,
        "triple curves sharing one puncture, end to end",
        "a s123 s345 - (s13 s24 s35 + q^-2 (s14 s25 s33 - s13 s25 s34 - s14 s23 s35) \
         + q^-4 (s15 s23 s34 - s15 s24 s33) + (1 - q^2) s33 s12 s45 \
         + (q^-2 - 1) t3 (s13 s245 - q^-2 s23 s145 + (q^2 - 1) s45 s123))",
    ),
    tpl(
        "type1-one-shared-b",
        TypeOne,
        5,
        "triple curves sharing one puncture, nested",
        "a s135 s234 - (s13 s25 s34 - s25 s14 s33 + s35 s14 s23 - q^2 s35 s12 s34 \
         + q^-2 (s45 s12 s33 - s45 s13 s23) + (1 - q^-2) s33 s15 s24 \
         + (q^2 - 1) t3 (s34 s125 - q^-2 s23 s145 + (q^-2 - 1) s15 s234))",
    ),
    tpl(
        "type1-one-shared-c",
        TypeOne,
        5,
        "triple curves sharing one puncture, crossing",
        "a s134 s235 - (s13 s24 s35 + q^2 (s33 s12 s45 - s12 s34 s35 - s13 s23 s45) \
         + q^-2 (s15 s23 s34 - s33 s15 s24) + (1 - q^-2) s33 s14 s25 \
         + (1 - q^-2) t3 (s23 s145 - q^2 s45 s123 + s134 s25))",
    ),
    tpl(
        "type1-two-shared-a",
        TypeOne,
        4,
        "triple curves sharing two adjacent punctures",
        "a s123 s234 - (q^-2 (s12 s23 s34 - s14 s23^2 + s22 s33 s14 - s33 s12 s24) \
         + s23 s13 s24 + (1 - q^2 - q^-2) s22 s13 s34 \
         + (q^2 - 1) t2 ((1 - q^2) s34 s123 - q^-2 s23 s124 + (q - q^-1)^2 s33 s124) \
         + (1 - q^-2) t3 (s12 s234 - s22 s134) \
         + (q^2 - 1) b t2 t3 ((q - q^-1)^2 (s13 s24 - q^-2 s14 s23) + (3q^2 - q^4 - 4) s12 s34))",
    ),
    tpl(
        "type1-two-shared-b",
        TypeOne,
        4,
        "triple curves sharing two separated punctures",
        "a s123 s134 - ((q^4 - q^2 + 1) s11 s23 s34 - s11 s24 s33 + s13^2 s24 \
         - q^4 s12 s13 s34 + s12 s14 s33 - q^-2 s13 s14 s23 \
         + (q^2 - 1) t1 (q^-2 s23 s134 + q^4 s34 s123 + (q^2 - q^4 - q^-2) s33 s124) \
         + (q^2 - 1) t3 (s11 s234 - s12 s134) \
         - (q^2 - 1)^2 b t1 t3 ((q^2 - q^-2)(s13 s24 - q^-2 s14 s23) + (1 + q^2 - q^4) s12 s34))",
    ),
    tpl(
        "type1-three-shared",
        TypeOne,
        3,
        "square of a triple curve",
        "a s123^2 - (q^-1 a s12 s23 s13 + s11 s22 s33 - q^2 s11 s23^2 - q^-2 s22 s13^2 - q^-2 s33 s12^2 \
         + (q^-2 - 1)(q^2 t1 s23 - t2 s13 - t3 s12 - (q - q^-1)^2 b t1 t2 t3) s123 \
         + (q - q^-1)^2 b (t2 t3 s11 s23 + t1 t3 s22 s13 - q^-2 t1 t2 s33 s12 + q^-1 a t1 t2 s23 s13))",
    ),
];

/// Templates of the catalog, excluding the centrality schema.
pub fn templates() -> Vec<Template> {
    TEMPLATES
        .iter()
        .map(|&(family, kind, arity, source, body)| Template { family, kind, arity, source, body: body.to_string() })
        .collect()
}

/// Family id of the centrality schema `t_i X − X t_i`.
pub const CENTRAL: &str = "central";

pub fn template(family: &str) -> Option<Template> {
    templates().into_iter().find(|t| t.family == family)
}

impl Template {
    /// Copy with the first occurrence of `from` in the body replaced by `to`.
    pub fn mutated(&self, from: &str, to: &str) -> Option<Template> {
        let pos = self.body.find(from)?;
        let mut t = self.clone();
        t.body.replace_range(pos..pos + from.len(), to);
        Some(t)
    }

    /// Body over the formal labels `1..=arity`.
    pub fn formal_body(&self) -> Result<Element, ParseError> {
        parse_with(&self.body, self.arity as u32, &|l| Some(l))
    }

    pub fn instantiate(&self, tuple: &[Label], shift: usize, mirrored: bool) -> Result<RelationInstance, InstantiateError> {
        let m = self.arity;
        if tuple.len() != m {
            return Err(InstantiateError::ArityMismatch { family: self.family.into(), arity: m, got: tuple.len() });
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) || tuple.first() == Some(&0) {
            return Err(InstantiateError::NotIncreasing(tuple.to_vec()));
        }
        if shift >= m {
            return Err(InstantiateError::BadShift { shift, arity: m });
        }
        let relabel = |k: u32| {
            let k = k as usize;
            (1..=m).contains(&k).then(|| tuple[(k - 1 + shift) % m] as u32)
        };
        let n = *tuple.last().unwrap() as u32;
        let mut element = parse_with(&self.body, n, &relabel)?;
        if mirrored {
            element = element.mirror();
        }
        Ok(RelationInstance {
            family: self.family.to_string(),
            kind: self.kind,
            tuple: tuple.to_vec(),
            shift,
            mirrored,
            partner: None,
            element,
        })
    }
}

/// A concrete element asserted to be zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    pub family: String,
    #[serde(skip)]
    pub kind: FamilyKind,
    pub tuple: Vec<Label>,
    pub shift: usize,
    pub mirrored: bool,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_partner")]
    pub partner: Option<Gen>,
    pub element: Element,
}

fn ser_partner<S: serde::Serializer>(g: &Option<Gen>, s: S) -> Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.serialize_str(&g.to_string()),
        None => s.serialize_none(),
    }
}

impl RelationInstance {
    pub fn key(&self) -> String {
        let tuple: Vec<String> = self.tuple.iter().map(|l| l.to_string()).collect();
        let mut k = format!("{}({}) v={}", self.family, tuple.join(","), self.shift);
        if let Some(p) = self.partner {
            k.push_str(&format!(" x={p}"));
        }
        if self.mirrored {
            k.push_str(" mirror");
        }
        k
    }
}

/// All generators over labels `1..=n`, in generator order.
pub fn all_gens(n: usize) -> Vec<Gen> {
    let n = n as Label;
    let mut out = Vec::new();
    for a in 1..=n {
        out.push(Gen::T(a));
    }
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Gen::S2(a, b));
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                out.push(Gen::S3(a, b, c));
            }
        }
    }
    out
}

/// Centrality instances `t_i X − X t_i` for every generator `X ≠ t_i`.
pub fn central_instances(n: usize) -> Vec<RelationInstance> {
    let gens = all_gens(n);
    let mut out = Vec::new();
    for i in 1..=n as Label {
        let t = Gen::T(i);
        for &x in &gens {
            if x == t {
                continue;
            }
            let element = Element::word(Word::from_gens(&[t, x])).sub(&Element::word(Word::from_gens(&[x, t])));
            out.push(RelationInstance {
                family: CENTRAL.to_string(),
                kind: FamilyKind::Central,
                tuple: vec![i],
                shift: 0,
                mirrored: false,
                partner: Some(x),
                element,
            });
        }
    }
    out
}

/// Increasing `k`-subsets of `1..=n` in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<Label>> {
    fn go(start: Label, n: Label, k: usize, cur: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for l in start..=n {
            cur.push(l);
            go(l + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as Label, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct InstanceOptions {
    pub central: bool,
    pub mirrors: bool,
    pub kinds: Option<Vec<FamilyKind>>,
}

impl Default for InstanceOptions {
    fn default() -> Self {
        Self { central: true, mirrors: true, kinds: None }
    }
}

/// Every instance of every template of arity `≤ n`, all shifts, mirrors if
/// requested; exact duplicates removed, first occurrence kept.
pub fn all_instances(n: usize, opts: &InstanceOptions) -> Vec<RelationInstance> {
    instances_from(&templates(), n, opts)
}

pub fn instances_from(templates: &[Template], n: usize, opts: &InstanceOptions) -> Vec<RelationInstance> {
    let wanted = |k: FamilyKind| opts.kinds.as_ref().is_none_or(|ks| ks.contains(&k));
    let mut jobs = Vec::new();
    for t in templates.iter().filter(|t| t.arity <= n && wanted(t.kind)) {
        for tuple in increasing_tuples(n, t.arity) {
            for shift in 0..t.arity {
                jobs.push((t, tuple.clone(), shift, false));
                if opts.mirrors {
                    jobs.push((t, tuple.clone(), shift, true));
                }
            }
        }
    }
    let built: Vec<RelationInstance> = jobs
        .par_iter()
        .map(|(t, tuple, shift, mirrored)| t.instantiate(tuple, *shift, *mirrored).expect("catalog template parses"))
        .collect();
    let mut out = Vec::new();
    if opts.central && wanted(FamilyKind::Central) {
        out.extend(central_instances(n));
    }
    out.extend(built);
    let mut seen = HashSet::new();
    out.retain(|inst| !inst.element.is_zero() && seen.insert(inst.element.clone()));
    out
}

/// Instances sorted for export by `(family, tuple, shift, mirrored)`.
pub fn export_order(mut v: Vec<RelationInstance>) -> Vec<RelationInstance> {
    v.sort_by(|a, b| {
        (&a.family, &a.tuple, a.shift, a.mirrored, a.partner).cmp(&(&b.family, &b.tuple, b.shift, b.mirrored, b.partner))
    });
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn catalog_counts() {
        let ts = templates();
        let count = |k: FamilyKind| ts.iter().filter(|t| t.kind == k).count();
        assert_eq!(count(TypeOne), 10);
        assert_eq!(count(TypeTwo), 2);
        assert_eq!(ts.iter().filter(|t| t.family.starts_with("comm-2-3")).count(), 5);
        assert_eq!(ts.iter().filter(|t| t.family.starts_with("comm-2-2")).count(), 2);
        assert_eq!(ts.iter().filter(|t| t.family.starts_with("disjoint")).count(), 3);
        for t in &ts {
            t.formal_body().unwrap_or_else(|e| panic!("{}: {e}", t.family));
        }
    }

    #[test]
    fn crossing_commutator_body() {
        let t = template("comm-2-2-crossing").unwrap();
        let want = parse("s24 s13 - s13 s24 - (q^2 - q^-2)(s14 s23 - s12 s34)", 4).unwrap();
        assert_eq!(t.instantiate(&[1, 2, 3, 4], 0, false).unwrap().element, want);
        let want1 = parse("s13 s24 - s24 s13 - (q^2 - q^-2)(s12 s34 - s23 s14)", 4).unwrap();
        let i1 = t.instantiate(&[1, 2, 3, 4], 1, false).unwrap().element;
        assert_eq!(i1, want1);
    }

    #[test]
    fn mirror_instance_reverses_and_bars() {
        let t = template("type1-three-shared").unwrap();
        let plain = t.instantiate(&[1, 2, 3], 0, false).unwrap().element;
        let m = t.instantiate(&[1, 2, 3], 0, true).unwrap().element;
        assert_eq!(m, plain.mirror());
        assert_ne!(m, plain);
    }

    #[test]
    fn instantiate_errors() {
        let t = template("comm-2-2-crossing").unwrap();
        assert!(matches!(t.instantiate(&[1, 2, 3], 0, false), Err(InstantiateError::ArityMismatch { .. })));
        assert!(matches!(t.instantiate(&[1, 3, 2, 4], 0, false), Err(InstantiateError::NotIncreasing(_))));
        assert!(matches!(t.instantiate(&[1, 2, 3, 4], 4, false), Err(InstantiateError::BadShift { .. })));
    }

    #[test]
    fn instance_counts() {
        let only = |k| InstanceOptions { central: false, mirrors: false, kinds: Some(vec![k]) };
        let n5: Vec<_> = all_instances(5, &only(TypeTwo)).into_iter().filter(|i| i.family == "type2-disjoint").collect();
        assert_eq!(n5.len(), 5);
        let n4: Vec<_> =
            all_instances(4, &only(Commuting)).into_iter().filter(|i| i.family == "comm-2-2-crossing").collect();
        // v=2, 3 repeat v=0, 1 up to sign only, so all four survive deduplication
        assert_eq!(n4.len(), 4);
        let opts = InstanceOptions { central: false, mirrors: true, kinds: Some(vec![TypeOne]) };
        let n3 = all_instances(3, &opts);
        assert!(n3.iter().all(|i| i.family == "type1-three-shared"));
        assert!(!n3.is_empty() && n3.len() <= 6);
    }

    #[test]
    fn instantiation_is_deterministic() {
        for t in templates() {
            let tuple: Vec<Label> = (1..=t.arity as Label).collect();
            let a = t.instantiate(&tuple, 1 % t.arity, true).unwrap();
            let b = t.instantiate(&tuple, 1 % t.arity, true).unwrap();
            assert_eq!(a, b);
        }
    }
}
