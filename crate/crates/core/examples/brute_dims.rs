//! Exhaustive search for perfect-case dimension vectors, the oracle behind
//! the descent.
//!
//! `cargo run --release --example brute_dims -- <rank> <bound>`

use std::time::Instant;

use mtclab::classifier::brute_force_dims;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cases = match args[..] {
        [r, b] => vec![(r, b)],
        _ => vec![(13, 99), (15, 99), (17, 45), (19, 45)],
    };
    for (rank, bound) in cases {
        let t = Instant::now();
        let sols = brute_force_dims(rank, bound);
        println!("rank {rank}, d1 <= {bound}: {} solution(s) in {:.2?}", sols.len(), t.elapsed());
        for s in sols.iter().take(5) {
            println!("  {s:?}");
        }
    }
}
