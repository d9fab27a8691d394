//! Exact coefficient arithmetic in Z[q^{±1/2}, β].
//!
//!     cargo run --example ring

use skein::RingElem;

fn main() {
    let q = RingElem::q_pow(1);
    let alpha = RingElem::alpha();
    let beta = RingElem::beta();

    println!("alpha        = {alpha}");
    println!("alpha * beta = {}", alpha.mul(&beta));

    // (q - q^-1)^2 / alpha, kept exact as a numerator over a power of alpha
    let d = q.sub(&RingElem::q_pow(-1));
    let c = d.mul(&d).mul(&beta);
    println!("c            = {c}");
    println!("bar(c)       = {}", c.bar());
    println!("c at q = 1   = {}", c.spec_q1());

    let h = RingElem::q_half_pow(1);
    println!("q^(1/2) at both signs: {} {}", h.spec_at(1), h.spec_at(-1));

    // exact division succeeds only when the quotient lies in the ring
    let q4 = RingElem::q_pow(4).sub(&RingElem::one());
    match q4.div_exact(&RingElem::q_pow(2).sub(&RingElem::one())) {
        Some(x) => println!("(q^4 - 1) / (q^2 - 1) = {x}"),
        None => println!("not divisible"),
    }
    println!("units: q^3 {}, alpha {}, 2 {}", RingElem::q_pow(3).is_unit(), alpha.is_unit(), RingElem::from_int(2).is_unit());
}
