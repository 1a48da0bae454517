mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::{random_element, random_word, rng};
use tiealg::diagram::{stack, to_diagram, to_word};
use tiealg::hyperoct::{phi0, psi, t_element, WElement};
use tiealg::rewrite::{mul_reduced, normal_form};
use tiealg::scalar::{Polynomial, RationalFunction as RF};
use tiealg::symmetric::w_ab;
use tiealg::word::{Element, Word};

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-4i64..=4, 0..4)
        .prop_map(|cs| Polynomial::from_coeffs(cs.into_iter().map(|c| BigRational::from_integer(BigInt::from(c))).collect()))
}

fn rf() -> impl Strategy<Value = RF> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(a, b)| RF::new(a, b).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in rf(), b in rf(), c in rf()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn coefficients_print_and_parse_back(a in rf()) {
        prop_assert_eq!(a.to_string().parse::<RF>().unwrap(), a);
    }

    #[test]
    fn elements_print_and_parse_back(seed in any::<u64>(), n in 2usize..=4) {
        let a = random_element(&mut rng(seed), n, 4, 5);
        prop_assert_eq!(Element::parse(&a.to_string(), n).unwrap(), a);
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>(), n in 2usize..=3) {
        let a = random_element(&mut rng(seed), n, 3, 6);
        let nf = normal_form(&a).unwrap();
        prop_assert_eq!(normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn reduced_product_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c] = [0; 3].map(|_| random_element(&mut r, 3, 2, 3));
        let left = mul_reduced(&mul_reduced(&a, &b).unwrap(), &c).unwrap();
        let right = mul_reduced(&a, &mul_reduced(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn psi_is_multiplicative(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let a = random_element(&mut r, n, 2, 4);
        let b = random_element(&mut r, n, 2, 4);
        prop_assert_eq!(psi(&mul_reduced(&a, &b).unwrap()).unwrap(), psi(&a).unwrap().mul(&psi(&b).unwrap()));
    }

    #[test]
    fn phi0_sees_through_reduction(seed in any::<u64>(), n in 2usize..=4) {
        let a = random_element(&mut rng(seed), n, 3, 5);
        prop_assert_eq!(phi0(&normal_form(&a).unwrap()).unwrap(), phi0(&a).unwrap());
    }

    #[test]
    fn diagrams_of_products_stack(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let (v, w) = (random_word(&mut r, n, 6, true), random_word(&mut r, n, 6, true));
        let (dv, dw) = (to_diagram(&v, n).unwrap(), to_diagram(&w, n).unwrap());
        prop_assert_eq!(to_word(&stack(&dv, &dw).unwrap()), v.concat(&w));
        if !v.is_empty() && !w.is_empty() {
            prop_assert_eq!(stack(&dv, &dw).unwrap(), to_diagram(&v.concat(&w), n).unwrap());
        }
    }

    #[test]
    fn stacking_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c] = [0; 3].map(|_| to_diagram(&random_word(&mut r, 3, 4, true), 3).unwrap());
        prop_assert_eq!(stack(&stack(&a, &b).unwrap(), &c).unwrap(), stack(&a, &stack(&b, &c).unwrap()).unwrap());
    }
}

/// Conjugating a diagonal sign matrix by `w_{a,b}` moves the last `b`
/// entries in front of the first `a`.
#[test]
fn conjugation_by_w_swaps_sign_blocks() {
    for n in 1..=4usize {
        for a in 0..=n {
            let w = WElement::from_perm(w_ab(a, n - a));
            for mask in 0..1u32 << n {
                let d = (1..=n)
                    .filter(|r| mask >> (r - 1) & 1 == 1)
                    .fold(WElement::identity(n), |acc, r| acc.mul(&t_element(r, n)));
                let conj = w.inverse().mul(&d).mul(&w);
                let swapped: Vec<bool> = d.signs[a..].iter().chain(&d.signs[..a]).copied().collect();
                assert_eq!(conj.signs, swapped, "a = {a}, n = {n}");
                assert!(conj.perm.is_identity());
            }
        }
    }
}

#[test]
fn words_print_and_parse_back() {
    let mut r = rng(9);
    for _ in 0..200 {
        let w = random_word(&mut r, 4, 8, true);
        assert_eq!(Word::parse(&w.to_string(), 4).unwrap(), w);
    }
}
