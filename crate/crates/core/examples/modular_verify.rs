//! Balancing, modularity and S-matrix zero checks on bundled modular data.
//!
//! `cargo run --example modular_verify`

use mtclab::catalog;
use mtclab::modular::{
    equal_row_detector, is_modular, orbit_zero_check, verify_balancing, zero_witnesses, ModularData,
};

fn report(name: &str, md: &ModularData) {
    let balancing = verify_balancing(md).expect("common conductor");
    println!("== {name} (rank {}, conductor {})", md.rank(), md.conductor());
    println!("  balancing ok: {}", balancing.is_empty());
    let modular = is_modular(md);
    println!("  modular: {modular}");
    if modular {
        println!("  zero witnesses: {:?}", zero_witnesses(md));
    }
    println!("  orbit-zero violations: {}", orbit_zero_check(md).len());
    println!("  equal S-rows: {:?}", equal_row_detector(md));
}

fn main() {
    for (name, md) in catalog::modular_data() {
        report(name, &md);
    }
    report("z3 all-ones", &catalog::z3_all_ones());
}
