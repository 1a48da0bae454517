use tiealg::rewrite::{dimension, generic_dimension};

fn main() {
    for n in 2..=4 {
        let d = dimension(n).unwrap();
        let g = generic_dimension(n).unwrap();
        println!("n = {n}: {} ({}), over Q(u): {g}", d.value, d.certificate);
    }
}
