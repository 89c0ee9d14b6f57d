//! Validate the bundled fusion rings, then a deliberately broken one.
//!
//! `cargo run --example validate_ring`

use mtclab::catalog;
use mtclab::ring::{validate_fusion_ring, FusionRing};

fn main() {
    for (name, ring) in catalog::rings() {
        let report = validate_fusion_ring(&ring);
        println!("{name:<10} rank {:>2}  valid: {}", ring.rank(), report.is_valid());
    }

    // Ising with σ⊗σ = 1: ψ⊗σ = σ is no longer matched by σ⊗σ ∋ ψ.
    let entries = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 2, 2, 1),
        (2, 0, 2, 1),
        (2, 1, 2, 1),
        (2, 2, 0, 1),
    ];
    let broken = FusionRing::new(3, vec![0, 1, 2], entries).expect("well formed");
    let report = validate_fusion_ring(&broken);
    println!("\nbroken ring: {} violation(s)", report.violations.len());
    for v in report.violations.iter().take(5) {
        println!("  {v}");
    }
}
