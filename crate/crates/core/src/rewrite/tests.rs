use std::collections::HashSet;
use std::sync::OnceLock;

use num_traits::Zero;

use super::*;
use crate::parse::parse;
use crate::oracle::{eval_element, sample_tuples};
use crate::relcat::{all_instances, central_instances, instances_from, template, InstanceOptions};

fn rules6() -> &'static RuleSet {
    static R: OnceLock<RuleSet> = OnceLock::new();
    R.get_or_init(|| {
        RuleSet::standard(6).unwrap().0
    })
}

fn p(s: &str) -> Element {
    parse(s, 6).unwrap()
}

fn nf(e: &Element) -> Element {
    rules6().reduce(e).unwrap()
}

#[test]
fn crossing_pair_is_sorted() {
    assert_eq!(nf(&p("s24 s13")), p("s13 s24 + (q^2 - q^-2)(s14 s23 - s12 s34)"));
}

#[test]
fn adjacent_pair_rule() {
    let rule = rules6().rule_for(&p("s23 s12").leading().unwrap().0.clone()).expect("rule with lhs s23 s12");
    let expected = p("q^-2 s12 s23 + (1 - q^-2)(s22 s13 + t2 s123)");
    assert_eq!(rule.rhs, nf(&expected));
    assert_eq!(nf(&p("s23 s12")), nf(&expected));
}

#[test]
fn triple_square_has_its_own_rule() {
    let w = Word::from_gens(&[Gen::S3(1, 2, 3), Gen::S3(1, 2, 3)]);
    let rule = rules6().rule_for(&w).expect("rule with lhs s123 s123");
    assert!(rule.rhs.terms().all(|(x, _)| term_cmp(x, &w).is_lt()));
}

#[test]
fn centrality_cancels() {
    assert!(rules6().reduces_to_zero(&p("t2 s13 - s13 t2")).unwrap());
    assert!(rules6().reduces_to_zero(&p("t1 s123 t3 s12 - s123 t3 s12 t1")).unwrap());
}

#[test]
fn four_point_macro_is_shift_invariant() {
    // The macro on (2,3,4,1) agrees with the one on (1,2,3,4).
    let a = p("s1234");
    let b = p("b*(s24 s13 - q^2 s23 s14 - q^-2 s34 s12)");
    assert_ne!(a, b);
    assert!(rules6().reduces_to_zero(&a.sub(&b)).unwrap());
}

#[test]
fn every_kept_instance_reduces_to_zero() {
    let rs = rules6();
    let excluded: HashSet<&str> = rs.excluded.iter().map(|e| e.origin.as_str()).collect();
    for inst in all_instances(6, &InstanceOptions::default()) {
        let key = inst.key();
        if !excluded.contains(key.as_str()) {
            assert!(rs.reduces_to_zero(&inst.element).unwrap(), "{key}");
        }
    }
}

#[test]
fn exclusions_are_the_torsion_families() {
    let rs = rules6();
    assert_eq!(rs.excluded.len(), 140);
    for e in &rs.excluded {
        let ok = e.origin.starts_with("type1-three-shared") || (e.origin.starts_with("type2-shared") && e.origin.ends_with("mirror"));
        assert!(ok, "{}", e.origin);
    }
}

#[test]
fn every_rule_vanishes_at_q1() {
    let tuples = sample_tuples(6, 4, 21);
    for r in rules6().rules() {
        let e = r.equation();
        assert!(tuples.iter().all(|t| eval_element(&e, t, 1).is_zero() && eval_element(&e, t, -1).is_zero()), "{}", r.origin);
    }
}

#[test]
fn commutation_families_leave_torsion() {
    // Pair and pair/triple commutations alone already force c·x = 0 with
    // c vanishing at q = 1 and x nonzero there.
    let fams = ["disjoint-2-2", "comm-2-2-adjacent", "comm-2-2-crossing", "comm-2-3-nested", "comm-2-3-adjacent", "comm-2-3-outer", "comm-2-3-interleaved"];
    let ts: Vec<_> = fams.iter().map(|f| template(f).unwrap()).collect();
    let mut insts = central_instances(4);
    insts.extend(instances_from(&ts, 4, &InstanceOptions { central: false, mirrors: false, kinds: None }));
    let mut rs = RuleSet::orient(&insts).unwrap();
    let rep = rs.complete(4, 6).unwrap();
    assert!(rep.unresolved.iter().any(|u| u.origin == "critical word s14 s13 s12"));
    assert!(rs.log.iter().any(|l| l.starts_with("refused division")));
}

#[test]
fn scaling_an_instance_still_reduces_to_zero() {
    let inst = template("comm-2-2-adjacent").unwrap().instantiate(&[1, 2, 3], 0, false).unwrap();
    let e = inst.element.scale(&RingElem::q_pow(1)).add(&inst.element.scale(&RingElem::beta()));
    assert!(rules6().reduces_to_zero(&e).unwrap());
}

#[test]
fn pair_expansion_fixture() {
    // s13 s25 s46 expanded pairwise through the four-point macros.
    let lhs = p("s13 s25");
    let rhs = p("q^2 s12 s35 + q^-2 s23 s15 + a s1235");
    assert!(rules6().reduces_to_zero(&lhs.sub(&rhs)).unwrap());
}

#[test]
fn normal_form_is_idempotent_on_products() {
    for w in words_with_md(&[1, 2, 2, 1]) {
        let once = nf(&Element::word(w));
        assert_eq!(nf(&once), once);
    }
}

#[test]
fn window_products_descend_strictly() {
    for md in all_spanning_shapes() {
        for w in words_with_md(&md) {
            let r = rules6().normal_form(&Element::word(w.clone())).unwrap();
            assert_eq!(r.descent_violations, 0, "{w}");
            assert!(!r.unverified_window);
        }
    }
}

#[test]
fn unverified_window_is_flagged() {
    let r = rules6().normal_form(&p("s12 s34 s56 s12")).unwrap();
    assert!(r.unverified_window);
    let r = rules6().normal_form(&p("t1 t2 s34 s56")).unwrap();
    assert!(!r.unverified_window);
}

#[test]
fn step_cap_is_an_error() {
    let mut rs = rules6().clone();
    rs.max_steps = 3;
    let e = p("s35 s24 s13 s46");
    assert_eq!(rs.normal_form(&e).unwrap_err(), RewriteError::LimitExceeded { steps: 3 });
}

#[test]
fn trace_records_each_step() {
    let r = rules6().normal_form_with(&p("s24 s13"), Strategy::Canonical, true).unwrap();
    assert_eq!(r.trace.len(), r.steps);
    assert!(r.trace[0].origin.starts_with("comm-2-2-crossing"));
}

#[test]
fn random_strategy_agrees_on_pairs() {
    let rep = confluence_fuzz(rules6(), &Shape::Pairs { n: 4 }, 100, 3);
    assert!(rep.passed(), "{:?}", rep.divergences.first());
}

#[test]
fn unknown_spanning_case() {
    assert!(matches!(spanning_check(rules6(), &[3, 3], 2, 1), Err(SpanningError::UnknownCase(_))));
}

#[test]
fn spanning_five_distinct() {
    let r = spanning_check(rules6(), &[1, 1, 1, 1, 1], 3, 1).unwrap();
    assert_eq!(r.basis_count, 6);
    assert_eq!(r.rank, 6);
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn canonical_word_moves_t_first() {
    let w = Word::from_gens(&[Gen::S2(1, 2), Gen::T(3), Gen::S2(2, 3), Gen::T(1)]);
    assert_eq!(canonical_word(&w).to_string(), "t1 t3 s12 s23");
}

#[test]
fn commutator_with_t_factors_is_not_zero() {
    assert!(!rules6().reduces_to_zero(&p("t1 s123 t3 s12 - s12 t3 s123 t1")).unwrap());
}
