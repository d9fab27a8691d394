use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use skein::oracle::{eval_element, sample_tuples, MatrixTuple};
use skein::relcat::all_gens;
use skein::rewrite::RuleSet;
use skein::{parse, Element, Gen, RingElem, Word};

const N: usize = 4;

fn ring_elem() -> impl Strategy<Value = RingElem> {
    (prop::collection::vec((-12i32..=12, -6i64..=6), 0..5), 0i64..=3)
        .prop_map(|(pairs, k)| RingElem::make(pairs.into_iter().map(|(e, c)| (e, BigInt::from(c))), k).unwrap())
}

fn nonzero_ring_elem() -> impl Strategy<Value = RingElem> {
    ring_elem().prop_filter("nonzero", |c| !c.is_zero())
}

fn gens() -> &'static [Gen] {
    static G: OnceLock<Vec<Gen>> = OnceLock::new();
    G.get_or_init(|| all_gens(N))
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..gens().len(), 0..=max_len).prop_map(|ix| Word::from_gens(&ix.into_iter().map(|i| gens()[i]).collect::<Vec<_>>()))
}

fn element(max_terms: usize, max_len: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((word(max_len), ring_elem()), 0..=max_terms).prop_map(Element::from_terms)
}

fn tuple() -> &'static MatrixTuple {
    static T: OnceLock<MatrixTuple> = OnceLock::new();
    T.get_or_init(|| sample_tuples(N, 1, 99).remove(0))
}

fn rules() -> &'static RuleSet {
    static R: OnceLock<RuleSet> = OnceLock::new();
    R.get_or_init(|| RuleSet::standard(N).unwrap().0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_is_commutative_ring(a in ring_elem(), b in ring_elem(), c in ring_elem()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&RingElem::one()), a);
    }

    #[test]
    fn bar_is_involutive_ring_map(a in ring_elem(), b in ring_elem()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
        prop_assert_eq!(a.add(&b).bar(), a.bar().add(&b.bar()));
        prop_assert_eq!(RingElem::beta().bar(), RingElem::beta());
    }

    #[test]
    fn specialization_is_ring_map(a in ring_elem(), b in ring_elem(), sign in prop::sample::select(vec![1, -1])) {
        prop_assert_eq!(a.mul(&b).spec_at(sign), a.spec_at(sign) * b.spec_at(sign));
        prop_assert_eq!(a.add(&b).spec_at(sign), a.spec_at(sign) + b.spec_at(sign));
        prop_assert_eq!(a.bar().spec_at(sign), a.spec_at(sign));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in ring_elem(), b in nonzero_ring_elem()) {
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn element_product_is_associative(x in element(2, 2), y in element(2, 2), z in element(2, 2)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn mirror_is_involutive_antihomomorphism(x in element(3, 3), y in element(3, 3)) {
        prop_assert_eq!(x.mirror().mirror(), x.clone());
        prop_assert_eq!(x.mul(&y).mirror(), y.mirror().mul(&x.mirror()));
    }

    #[test]
    fn display_parses_back(x in element(4, 4)) {
        let text = x.to_string();
        prop_assert_eq!(parse(&text, N as u32).unwrap(), x, "{}", text);
    }

    #[test]
    fn oracle_is_multiplicative(x in element(2, 2), y in element(2, 2), sign in prop::sample::select(vec![1, -1])) {
        let t = tuple();
        prop_assert_eq!(eval_element(&x.mul(&y), t, sign), eval_element(&x, t, sign) * eval_element(&y, t, sign));
        prop_assert_eq!(eval_element(&x.mirror(), t, sign), eval_element(&x, t, sign));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_sound_and_idempotent(x in element(2, 3)) {
        let nf = rules().reduce(&x).unwrap();
        let t = tuple();
        for sign in [1, -1] {
            prop_assert_eq!(eval_element(&nf, t, sign), eval_element(&x, t, sign));
        }
        prop_assert_eq!(rules().reduce(&nf).unwrap(), nf);
    }
}
