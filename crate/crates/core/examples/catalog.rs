//! The relation catalog: templates, instances and their JSON form.
//!
//!     cargo run --example catalog -- 4

use skein::relcat::{all_instances, export_order, templates, InstanceOptions};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);

    for t in templates() {
        println!("{:<24} {:?} arity {}  {}", t.family, t.kind, t.arity, t.source);
    }

    let instances = export_order(all_instances(n, &InstanceOptions::default()));
    let mirrors = instances.iter().filter(|i| i.mirrored).count();
    println!("\n{} instances on {n} labels, {mirrors} of them mirrors", instances.len());

    if let Some(first) = instances.iter().find(|i| i.family == "comm-2-2-crossing") {
        println!("{}: {}", first.key(), first.element);
        println!("{}", serde_json::to_string(first).unwrap());
    }
}
