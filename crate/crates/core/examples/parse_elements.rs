//! Parsing elements, products and the mirror involution.
//!
//!     cargo run --example parse_elements -- "s12 t3 - (q - q^-1)*s123"

use skein::parse;

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "s12 t3 - (q - q^-1)*s123".into());
    let e = match parse(&input, 6) {
        Ok(e) => e,
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(1);
        }
    };
    println!("parsed      {e}");
    println!("terms       {}", e.len());
    if let Some((w, c)) = e.leading() {
        println!("leading     ({c}) * {w}  (reduced degree {}, crossings {})", w.reduced_degree(), w.crossing_number());
    }
    println!("mirror      {}", e.mirror());
    println!("square      {}", e.mul(&e));

    // repeated indices expand through the s_ii macro
    println!("s22       = {}", parse("s22", 6).unwrap());
    println!("s{{1,2,3,4}} has {} terms", parse("s{1,2,3,4}", 6).unwrap().len());
}
