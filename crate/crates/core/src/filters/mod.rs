//! Hypothesis refinement rules and the saturation engine.

mod engine;
mod hypothesis;
mod rules;
mod trace;

pub use engine::{saturate, saturate_with_budget, step_budget, SatVerdict, Saturation, DEFAULT_STEP_BUDGET};
pub use hypothesis::{Cands, ComponentRanks, Flag, Hypothesis};
pub use rules::{anchor, apply_rule, entry, pair_partitions, Delta, Outcome, RuleEntry, RuleId, CATALOG, ENGINE_ORDER};
pub use trace::{render_trace, ProofStep, Trace};
