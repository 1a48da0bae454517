//! Reduce a few elements of E_3(u) to normal form.
use tiealg::rewrite::{algebra, normal_form};
use tiealg::word::Element;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["T1 T1", "T1^-1", "E2 T1 T2", "T2 T1 E2 T1 T2", "(u+1)*E1 E2 - E2 E1"] {
        let a = Element::parse(text, 3)?;
        println!("{text:>20}  ->  {}", normal_form(&a)?);
    }
    let alg = algebra(3)?;
    println!("{} rewrite rules, basis of {} words", alg.rule_count(), alg.basis().len());
    Ok(())
}
