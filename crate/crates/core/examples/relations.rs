//! Check the defining relations and the derived identities at n = 3.
use tiealg::rewrite::check_identity;
use tiealg::rewrite::relations::{defining_relations, derived_identities, lemma_corrected};

fn main() {
    let rels = defining_relations(3).into_iter().chain(derived_identities(3)).chain(lemma_corrected(3));
    let mut failed = 0;
    for r in rels {
        let ok = check_identity(&r.lhs, &r.rhs).expect("n = 3 is supported");
        if !ok {
            failed += 1;
        }
        println!("{}  {}", if ok { "ok  " } else { "FAIL" }, r.name);
    }
    println!("{failed} identities fail");
}
