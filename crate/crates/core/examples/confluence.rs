//! Comparing canonical and randomized rewriting on random inputs.
//!
//!     cargo run --release --example confluence -- 200

use skein::rewrite::{confluence_fuzz, RuleSet, Shape};

fn main() {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100);
    let (rules, _) = RuleSet::standard(4).expect("rules orient");
    for shape in [Shape::Pairs { n: 4 }, Shape::THeavy { n: 3 }, Shape::LabelCounts { md: vec![1, 1, 2, 2] }] {
        let r = confluence_fuzz(&rules, &shape, trials, 7);
        println!("{}: {} of {} trials diverge", r.shape, r.divergences.len(), r.trials);
        if let Some(d) = r.divergences.first() {
            println!("  e.g. {}", d.element);
        }
    }
}
