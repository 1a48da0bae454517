use tiealg::specht::{specht_rep, standard_tableaux, Partition};
use tiealg::symmetric::{coset_reps, w_ab};

fn main() {
    let shape = Partition::new(vec![2, 1]).unwrap();
    for t in standard_tableaux(&shape) {
        println!("tableau {:?}", t.reading_word(&shape));
    }
    let r = specht_rep(&shape);
    for (i, m) in r.gens.iter().enumerate() {
        println!("s{} -> {:?}", i + 1, m.to_rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    }
    let x = coset_reps(2, 2);
    println!("X_(2,2) = {}", x.reps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
    println!("w_(2,2) = {}", w_ab(2, 2));
}
