use tiealg::hyperoct::plus_minus_split;
use tiealg::specht::Partition;

fn main() {
    for parts in [vec![1], vec![2], vec![1, 1]] {
        let alpha = Partition::new(parts).unwrap();
        let (p, m) = plus_minus_split(&alpha).unwrap();
        println!("{}: dim {}, {}: dim {}", p.label, p.dim(), m.label, m.dim());
    }
}
