//! Exact rank certificate for E_3(1).
use tiealg::hyperoct::semisimplicity_certificate;

fn main() {
    let c = semisimplicity_certificate().unwrap();
    println!("rank of the (phi0 + psi) image: {} / {}", c.rank, c.words.len());
    println!("phi0 block: {}, psi block: {}", c.phi0_rank, c.psi_rank);
    if let Some(v) = c.psi_kernel.first() {
        let support: Vec<String> =
            c.words.iter().zip(v).filter(|(_, x)| *x != "0").map(|(w, x)| format!("{x}*[{w}]")).collect();
        println!("a combination psi kills: {}", support.join(" + "));
    }
}
