//! Frobenius-Perron dimensions: exact when integral, certified intervals
//! otherwise.
//!
//! `cargo run --example fp_dims`

use mtclab::catalog;
use mtclab::ring::{fp_dims, DimValue};

fn show(name: &str, ring: &mtclab::ring::FusionRing) {
    let dims = fp_dims(ring).expect("dims");
    let render = |d: &DimValue| match d.as_exact() {
        Some(v) => v.to_string(),
        None => {
            let iv = d.to_interval();
            format!("[{}, {}]", iv.lo, iv.hi)
        }
    };
    let list: Vec<String> = dims.dims.iter().map(render).collect();
    println!("{name}: dims {}  total {}  integral {}", list.join(" "), render(&dims.total_dim), dims.integral);
}

fn main() {
    show("fibonacci", &catalog::fibonacci());
    show("ising", &catalog::ising());
    show("z3xfib", &catalog::z3_fibonacci());
    show("rank-17 orbit ring", &catalog::f25_orbit_ring());
}
