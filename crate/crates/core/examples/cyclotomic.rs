//! Exact arithmetic in cyclotomic fields.
//!
//! `cargo run --example cyclotomic`

use mtclab::cyclotomic::{cyclotomic_polynomial, Cyclotomic};

fn main() {
    println!("Φ_15 coefficients: {:?}", cyclotomic_polynomial(15));

    let z = Cyclotomic::zeta_pow(16, 1);
    let sqrt2 = Cyclotomic::zeta_pow(16, 2).sub(&Cyclotomic::zeta_pow(16, 6));
    println!("√2 = {sqrt2}");
    println!("√2 · √2 = {}", sqrt2.mul(&sqrt2));
    println!("ζ_16^16 = {}", z.pow(16));

    let a = Cyclotomic::zeta_pow(5, 1).add(&Cyclotomic::from_int(5, 2));
    let inv = a.inverse().expect("nonzero");
    println!("(ζ_5 + 2)^-1 = {inv}");
    println!("check: {}", a.mul(&inv));

    // ζ_3 seen inside Q(ζ_15).
    let w = Cyclotomic::zeta_pow(3, 1);
    println!("ζ_3 in Q(ζ_15): {}  equal: {}", w.embed(15), w.embed(15) == Cyclotomic::zeta_pow(15, 5));
    println!("order of ζ_15^6: {:?}", Cyclotomic::zeta_pow(15, 6).root_of_unity_order());
}
