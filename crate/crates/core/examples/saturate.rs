//! Run the rule engine on one MNSD hypothesis and print the proof trace.
//!
//! `cargo run --example saturate -- <rank> <|G|>`, e.g. `-- 15 3`.

use mtclab::filters::{render_trace, saturate, Hypothesis, SatVerdict};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (rank, g) = match args[..] {
        [r, g] => (r, g),
        _ => (15, 3),
    };
    let id = format!("r{rank}.g{g}");
    let sat = saturate(&Hypothesis::mnsd_modular(rank).with_g_order(g), &id);
    print!("{}", render_trace(&sat.trace.steps));
    match sat.verdict {
        SatVerdict::Refuted => println!("refuted after {} rule applications", sat.steps_used),
        SatVerdict::Inconclusive => println!("inconclusive: step budget exhausted"),
        SatVerdict::Open { leaves } => {
            for (leaf, h) in leaves {
                println!("open leaf {leaf}: {}", h.summary());
            }
        }
    }
}
