//! Worked examples for the public operations.

use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use tiealg::hyperoct::{
    induced_rep, intertwines, phi0_rep, plus_minus_split, s_element, swap_intertwiner, t_element, to_erep,
    Bipartition, WAlgebra, WElement,
};
use tiealg::linalg::QMatrix;
use tiealg::rewrite::{check_identity, mul_reduced, normal_form, span_basis, structure_constants, RewriteError};
use tiealg::scalar::rat;
use tiealg::specht::{rep_dim, specht_rep, tensor_with_sign_character, Partition};
use tiealg::symmetric::{coset_reps, split_y, Permutation};
use tiealg::word::{Element, Word};

fn el(s: &str, n: usize) -> Element {
    Element::parse(s, n).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

#[test]
fn normal_form_examples() {
    let nf = |s: &str, n: usize| normal_form(&el(s, n)).unwrap();
    assert_eq!(nf("T1 T1", 2), el("1 + ((1-u)/u)*E1 - ((1-u)/u)*T1 E1", 2));
    assert_eq!(nf("E1 E1", 2), el("E1", 2));
    assert_eq!(nf("E1 T2 E1", 3), el("T2 E1 E2", 3));
    assert_eq!(nf("T1^-1", 2), el("T1 + (u-1)*T1 E1 + (1-u)*E1", 2));
    assert!(nf("0", 3).is_zero());
    for n in [2, 3] {
        let span: HashSet<Word> = span_basis(n).unwrap().words.into_iter().collect();
        assert!(nf("T1 T1 T1 E1 T1^-1", n).terms().all(|(w, _)| span.contains(w)));
    }
    assert!(matches!(normal_form(&el("T1", 5)), Err(RewriteError::Unsupported { .. })));
}

#[test]
fn mul_reduced_examples() {
    assert_eq!(mul_reduced(&el("T1", 2), &el("T1^-1", 2)).unwrap(), Element::one(2));
    assert_eq!(mul_reduced(&el("E1", 2), &el("T1 E1", 2)).unwrap(), el("T1 E1", 2));
    assert!(mul_reduced(&Element::zero(3), &el("T1 E2", 3)).unwrap().is_zero());
}

#[test]
fn check_identity_examples() {
    assert!(check_identity(&el("T1 T2 E2 T1", 3), &el("T2 T1 E1 T2", 3)).unwrap());
    assert!(!check_identity(&el("T1 E2", 3), &el("E2 T1", 3)).unwrap());
}

#[test]
fn structure_constant_examples() {
    let sc = structure_constants(2).unwrap();
    let pos = |s: &str| sc.basis.iter().position(|w| *w == Word::parse(s, 2).unwrap()).unwrap();
    assert_eq!(sc.get(pos("T1"), pos("T1")), &el("1 + ((1-u)/u)*E1 - ((1-u)/u)*T1 E1", 2));
    assert_eq!(sc.get(pos("E1"), pos("T1 E1")), &el("T1 E1", 2));
    let sc3 = structure_constants(3).unwrap();
    assert_eq!(sc3.table.len(), 30);
    let j = sc3.to_json();
    assert_eq!(j["n"], 3);
    assert!(j["table"][1][1].as_array().unwrap().iter().all(|t| t["word"].is_string() && t["coeff"].is_string()));
    assert!(structure_constants(4).is_err());
}

#[test]
fn coset_representatives_are_minimal() {
    for n in 1..=5 {
        for a in 0..=n {
            let sys = coset_reps(a, n - a);
            let fact = |k: usize| (1..=k).product::<usize>();
            assert_eq!(sys.len(), fact(n) / (fact(a) * fact(n - a)));
            assert!(sys.contains(&sys.w));
            for g in Permutation::all(n) {
                let (_, x) = sys.factor(&g);
                assert!(x.length() <= g.length());
                assert!(x == g || x.length() < g.length());
            }
        }
    }
}

#[test]
fn split_y_halves_the_representatives() {
    for m in 1..=2 {
        let sys = coset_reps(m, m);
        let y = split_y(m);
        let wy: Vec<Permutation> = y.iter().map(|u| sys.w.mul(u)).collect();
        let all: HashSet<Permutation> = y.iter().chain(&wy).cloned().collect();
        assert_eq!(all.len(), sys.len());
        assert_eq!(all, sys.reps.iter().cloned().collect());
    }
}

#[test]
fn sign_character_sits_on_the_second_block() {
    let r = tensor_with_sign_character(&specht_rep(&part(&[2])), &specht_rep(&part(&[1])), true);
    let signs = |k: usize| t_element(k, 3).signs;
    assert_eq!(r.sign_value(&signs(1)), BigRational::one());
    assert_eq!(r.sign_value(&signs(3)), -BigRational::one());
    assert_eq!(rep_dim(&part(&[2, 2])), 2);
}

#[test]
fn third_tie_image() {
    let s2 = WAlgebra::basis(s_element(2, 3).unwrap());
    let e1 = tiealg::hyperoct::e_element(1, 3);
    let mut e3 = WAlgebra::term(WElement::identity(3), rat(1, 2));
    e3.add_term(t_element(1, 3).mul(&t_element(3, 3)), rat(1, 2));
    assert_eq!(s2.mul(&e1).mul(&s2), e3);
}

#[test]
fn trivially_induced_modules() {
    for alpha in Partition::all(3) {
        let r = induced_rep(&Bipartition { alpha: alpha.clone(), beta: Partition::empty() }).unwrap();
        assert_eq!(r.dim(), rep_dim(&alpha));
        // (α,φ) and (φ,α) have the same dimension and the swap map relates them
        let eq = swap_intertwiner(&Bipartition { alpha: alpha.clone(), beta: Partition::empty() }).unwrap();
        assert_eq!(eq.to.dim(), eq.from.dim());
    }
}

fn is_permutation_matrix(m: &QMatrix) -> bool {
    let one = BigRational::one();
    (0..m.rows()).all(|i| {
        let row = m.row(i);
        row.iter().filter(|x| **x == one).count() == 1 && row.iter().all(|x| x.is_zero() || *x == one)
    })
}

#[test]
fn swap_map_is_a_permutation_and_preserves_characters() {
    let words = span_basis(3).unwrap().words;
    for bp in [Bipartition::new(&[2], &[1]), Bipartition::new(&[1, 1], &[1])] {
        let eq = swap_intertwiner(&bp).unwrap();
        assert_eq!(eq.phi.rows(), 3);
        assert!(is_permutation_matrix(&eq.phi));
        assert!(intertwines(&eq.phi, &eq.from, &eq.to));
        assert_eq!(eq.from.character(&words), eq.to.character(&words));
    }
}

#[test]
fn plus_minus_dimensions_and_direct_sum() {
    for (parts, m) in [(vec![1], 1u32), (vec![2], 2), (vec![1, 1], 2)] {
        let alpha = part(&parts);
        let (p, q) = plus_minus_split(&alpha).unwrap();
        let binom = [1, 2, 6][m as usize];
        assert_eq!(p.dim(), binom / 2 * rep_dim(&alpha).pow(2));
        assert_eq!(q.dim(), p.dim());
        let full = to_erep(&induced_rep(&Bipartition { alpha: alpha.clone(), beta: alpha.clone() }).unwrap()).unwrap();
        let sum = tiealg::hyperoct::ERep {
            n: full.n,
            label: "sum".into(),
            t: p.t.iter().zip(&q.t).map(|(a, b)| a.direct_sum(b)).collect(),
            e: p.e.iter().zip(&q.e).map(|(a, b)| a.direct_sum(b)).collect(),
        };
        assert!(tiealg::hyperoct::find_intertwiner(&sum, &full).is_some());
    }
}

#[test]
fn phi0_of_the_trivial_shape() {
    let r = phi0_rep(&part(&[3]));
    assert!(r.t.iter().all(|m| *m == QMatrix::identity(1)));
    assert!(r.e.iter().all(QMatrix::is_zero));
    r.check_relations().unwrap();
    let j = r.to_json();
    assert_eq!(j["label"], "([3],0)");
    assert_eq!(j["T"][0], serde_json::json!([["1"]]));
}
