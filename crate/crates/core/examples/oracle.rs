//! Evaluating elements at q = 1 as traces of random SL(2, Q) matrices.
//!
//!     cargo run --example oracle

use skein::oracle::{eval_element, sample_tuples, specialize};
use skein::parse;
use skein::relcat::template;

fn main() {
    let tuples = sample_tuples(4, 3, 11);
    for (k, t) in tuples.iter().enumerate() {
        println!("tuple {k}: x1 = {}", t.matrices[0]);
    }

    // a relation instance vanishes; a generic element does not
    let inst = template("type2-shared").unwrap().instantiate(&[1, 2, 3, 4], 0, false).unwrap();
    let junk = parse("s12 s34 - s13 s24", 4).unwrap();
    for t in &tuples {
        println!("{} -> {}   junk -> {}", inst.key(), eval_element(&inst.element, t, 1), eval_element(&junk, t, 1));
    }

    // the commutative q = 1 image of a quantum relation
    println!("\nq = 1 image has {} monomials", specialize(&inst.element, 1).0.len());

    let gate = skein::cli::suites::catalog_gate(4, 5, 7);
    println!("\ngate on 4 labels: {} instances, {} residuals", gate.instances, gate.residuals.len());
}
