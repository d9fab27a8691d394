//! Reducing products of fixed label counts into a small set of basis words.
//!
//!     cargo run --release --example spanning

use skein::rewrite::{spanning_check, spanning_cases, RuleSet};

fn main() {
    let (rules, _) = RuleSet::standard(6).expect("rules orient");
    for case in spanning_cases() {
        let r = spanning_check(&rules, &case.md, 3, 7).expect("spanning check");
        println!(
            "{:<24} {:?}: {} basis words (rank {}), {}/{} products in span, {} oracle mismatches",
            r.case, r.md, r.basis_count, r.rank, r.in_span, r.products, r.oracle_mismatches
        );
        println!("    {}", r.basis_words.join(", "));
        for d in &r.dependent {
            println!("    dependent: {d}");
        }
    }
}
