//! Subring lattice report: invertibles, universal grading, adjoint subring,
//! stabilizers and the upper central series.
//!
//! `cargo run --example lattice_analysis [ring-name]`

use mtclab::catalog;
use mtclab::lattice::analyze;

fn main() {
    let want = std::env::args().nth(1).unwrap_or_else(|| "z3xfib".to_string());
    let mut rings = catalog::rings();
    rings.push(("f25", catalog::f25_orbit_ring()));
    let Some((name, ring)) = rings.into_iter().find(|(n, _)| *n == want) else {
        eprintln!("unknown ring {want}");
        std::process::exit(2);
    };
    let a = analyze(&ring).expect("analysis");
    println!("== {name}");
    print!("{}", a.to_text());
}
