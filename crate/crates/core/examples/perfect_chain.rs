//! Dimension descent for the perfect case (no nontrivial invertibles).
//!
//! `cargo run --example perfect_chain -- <rank>`

use mtclab::classifier::{perfect_chain, BranchStatus};
use mtclab::filters::render_trace;

fn main() {
    let ranks: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ranks = if ranks.is_empty() { vec![13, 15, 17, 19, 21, 23] } else { ranks };
    for rank in ranks {
        let res = perfect_chain(rank, &format!("r{rank}.g1"));
        println!("== rank {rank}: {}", if res.refuted() { "refuted" } else { "open branches remain" });
        for b in &res.branches {
            let tag = match &b.status {
                BranchStatus::Refuted { .. } => "refuted",
                BranchStatus::Open { .. } => "open",
            };
            println!("  {} l = {}: {}  ({tag})", b.hyp, b.l, res.chain_text(b));
        }
        print!("{}", render_trace(&res.trace.steps));
    }
}
