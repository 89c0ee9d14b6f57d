//! Case analysis for every supported rank, with the case tree.
//!
//! `cargo run --example classify [rank...]`

use std::time::Instant;

use mtclab::classifier::classify;

fn main() {
    let ranks: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ranks = if ranks.is_empty() { vec![13, 15, 17, 19, 21, 23] } else { ranks };
    for rank in ranks {
        let t = Instant::now();
        match classify(rank) {
            Ok(c) => {
                print!("{}", c.to_text());
                println!("  ({} steps, {:.2?})\n", c.steps.len(), t.elapsed());
            }
            Err(e) => eprintln!("rank {rank}: {e}"),
        }
    }
}
