//! The SL(2) trace identities the oracle rests on.
//!
//!     cargo run --example trace_identities

use skein::oracle::check_matrix_identities;

fn main() {
    for r in check_matrix_identities(50, 3) {
        let status = if r.passed() { "ok" } else { "FAILED" };
        println!("{:<24} {status} on {} tuples", r.name, r.trials);
        if let Some(w) = &r.witness {
            println!("  {w}");
        }
    }
}
