//! The eight irreducible representations of E_3(1), with the induced
//! modules they come from.
use tiealg::hyperoct::{find_intertwiner, induced_rep, irreps_e3, swap_intertwiner, to_erep, Bipartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in irreps_e3()? {
        println!("{:<12} dim {}  commutant {}", r.label, r.dim(), r.commutant_dim());
    }

    let bp = Bipartition::new(&[2], &[1]);
    let eq = swap_intertwiner(&bp)?;
    println!("{} ≅ {} via the swap map", eq.from.label, eq.to.label);

    let v = to_erep(&induced_rep(&bp)?)?;
    let other = to_erep(&induced_rep(&Bipartition::new(&[1, 1], &[1]))?)?;
    println!("{} ≅ {}: {}", v.label, other.label, find_intertwiner(&v, &other).is_some());

    println!("{}", serde_json::to_string_pretty(&v.to_json())?);
    Ok(())
}
