//! The reduction engine against an independent tensor-space model.

mod common;

use common::{q, random_element, rank, rng, TensorModel};
use tiealg::rewrite::relations::{defining_relations, lemma_as_printed, lemma_corrected};
use tiealg::rewrite::{normal_form, span_basis};

fn models(n: usize) -> Vec<TensorModel> {
    let (d, k) = if n == 3 { (3, 3) } else { (2, 3) };
    vec![TensorModel::new(n, d, k, q(3, 1)), TensorModel::new(n, d, k, q(7, 2))]
}

#[test]
fn model_satisfies_the_defining_relations() {
    for n in [3, 4] {
        for m in models(n) {
            let vs = m.test_vectors(2, 1);
            for r in defining_relations(n) {
                assert!(m.kills(&r.difference(), &vs), "{} at u = {}", r.name, m.u);
            }
        }
    }
}

#[test]
fn normal_forms_act_like_their_inputs() {
    for n in [3, 4] {
        let mut r = rng(17 + n as u64);
        let cases = if n == 3 { 40 } else { 12 };
        for m in models(n).into_iter().take(1) {
            let vs = m.test_vectors(1, 2);
            for _ in 0..cases {
                let a = random_element(&mut r, n, 3, 6);
                let nf = normal_form(&a).unwrap();
                assert!(m.kills(&a.sub(&nf).unwrap(), &vs), "{a} vs {nf}");
            }
        }
    }
}

#[test]
fn printed_lemma_fails_and_corrected_lemma_holds_in_the_model() {
    for m in models(3) {
        let vs = m.test_vectors(2, 3);
        for r in lemma_as_printed(3) {
            assert!(!m.kills(&r.difference(), &vs), "{}", r.name);
        }
        for r in lemma_corrected(3) {
            assert!(m.kills(&r.difference(), &vs), "{}", r.name);
        }
    }
}

#[test]
fn thirty_words_are_independent_at_sample_points() {
    let words = span_basis(3).unwrap().words;
    for m in models(3) {
        let vs = m.test_vectors(4, 4);
        assert_eq!(rank(m.image_rows(&words, &vs)), 30, "u = {}", m.u);
    }
}
