//! The rank-17 case with three invertibles: the orbit analysis closes the
//! two-fixed-object subcase and leaves dimensions 1^3 3^8 5^6 standing. The
//! bundled ring with those dimensions is validated and analysed.
//!
//! `cargo run --example rank17_gap`

use mtclab::catalog;
use mtclab::classifier::{g3_rank17_analysis, G3Status};
use mtclab::filters::{render_trace, saturate, Hypothesis, SatVerdict};
use mtclab::lattice::analyze;
use mtclab::ring::validate_fusion_ring;

fn main() {
    let sat = saturate(&Hypothesis::mnsd_modular(17).with_g_order(3), "r17.g3");
    let SatVerdict::Open { leaves } = sat.verdict else {
        println!("engine closed the case");
        return;
    };
    for (id, leaf) in leaves {
        println!("engine leaf {id}: {}", leaf.summary());
        if let Some(res) = g3_rank17_analysis(&leaf, &id) {
            print!("{}", render_trace(&res.trace.steps));
            if let G3Status::Open { witness } = res.status {
                println!("surviving dimensions {:?}, dim {}", witness.dims, witness.dim);
            }
        }
    }

    let ring = catalog::f25_orbit_ring();
    println!("\nwitness ring valid: {}", validate_fusion_ring(&ring).is_valid());
    print!("{}", analyze(&ring).expect("analysis").to_text());
}
