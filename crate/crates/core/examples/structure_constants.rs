use tiealg::rewrite::structure_constants;

fn main() {
    let sc = structure_constants(2).unwrap();
    for (i, a) in sc.basis.iter().enumerate() {
        for (j, b) in sc.basis.iter().enumerate() {
            println!("{a} * {b} = {}", sc.get(i, j));
        }
    }
    let json = structure_constants(3).unwrap().to_json();
    println!("n = 3 table: {} bytes of JSON", json.to_string().len());
}
