//! Orienting the catalog into rewrite rules and reducing to normal form.
//!
//!     cargo run --release --example normal_form -- "s24 s13"

use skein::rewrite::{RuleSet, Strategy};
use skein::parse;

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "s24 s13".into());
    let (rules, completion) = RuleSet::standard(4).expect("rules orient");
    println!(
        "{} rules, {} critical words, {} unresolved",
        rules.len(),
        completion.critical_words,
        completion.unresolved.len()
    );

    let e = parse(&input, 4).expect("parse");
    let nf = rules.normal_form_with(&e, Strategy::Canonical, true).expect("within step cap");
    for s in &nf.trace {
        println!("  {} at {} by {}", s.word, s.position, s.origin);
    }
    println!("{e}\n  = {}", nf.result);
    println!("{} steps, max alpha power {}", nf.steps, nf.max_alpha_pow);
    println!("idempotent: {}", rules.reduce(&nf.result).unwrap() == nf.result);
}
