//! The signed permutation group W_3 and the morphism ψ into its group algebra.
use tiealg::hyperoct::{e_element, psi, t_element, WElement};
use tiealg::word::Element;

fn main() {
    let w3 = WElement::all(3);
    println!("|W_3| = {}", w3.len());
    let t12 = t_element(1, 3).mul(&t_element(2, 3));
    println!("t1 t2 = {t12}");
    for (g, c) in &e_element(1, 3).terms {
        println!("e1 has {c} * {g}");
    }
    // E1 T2 T1 and T2 T1 E2 agree under ψ
    let a = Element::parse("E1 T2 T1 - T2 T1 E2", 3).unwrap();
    println!("psi(E1 T2 T1 - T2 T1 E2) is zero: {}", psi(&a).unwrap().is_zero());
}
