//! Draw a word as a tied braid diagram, in ASCII and SVG.
use tiealg::diagram::{stack, to_diagram, to_word, Format};
use tiealg::word::Word;

fn main() {
    let w = Word::parse("T1 E2 T1^-1", 3).unwrap();
    let d = to_diagram(&w, 3).unwrap();
    print!("{}", d.render(Format::Ascii));
    println!("{}", d.to_json());

    let both = stack(&d, &to_diagram(&Word::parse("E1", 3).unwrap(), 3).unwrap()).unwrap();
    println!("stacked: {}", to_word(&both));

    let svg = d.render(Format::Svg);
    println!("svg: {} bytes", svg.len());
}
