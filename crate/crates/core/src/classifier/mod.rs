//! End-to-end case analysis for MNSD modular categories of a given rank.
//!
//! The group order `|G(C)|` is bounded first. `|G| = rank` is pointed,
//! `|G| = 1` goes to the perfect-case descent, and every other order is
//! saturated by the rule engine. The rank-17, `|G| = 3` leaf gets the
//! dedicated orbit analysis.

mod brute;
mod chain;
mod orders;
mod rank17;

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use thiserror::Error;

pub use brute::brute_force_dims;
pub use chain::{perfect_chain, BranchStatus, ChainBranch, ChainResult};
pub use orders::{admissible_group_orders, admissible_with_reasons};
pub use rank17::{g3_rank17_analysis, G3Analysis, G3Status, Witness};

use crate::filters::{render_trace, saturate, Hypothesis, ProofStep, RuleId, SatVerdict, Trace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("rank {0} is not an odd integer in 3..=99")]
    UnsupportedRank(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pointed,
    /// Every non-pointed case is closed except perfect-case branches.
    PointedOrPerfect,
    Open,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pointed => "pointed",
            Verdict::PointedOrPerfect => "pointed-or-perfect",
            Verdict::Open => "open",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeStatus {
    Refuted,
    Pointed,
    PerfectOpen,
    Open,
}

impl std::fmt::Display for NodeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NodeStatus::Refuted => "refuted",
            NodeStatus::Pointed => "pointed",
            NodeStatus::PerfectOpen => "perfect-open",
            NodeStatus::Open => "open",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseNode {
    pub id: String,
    pub status: NodeStatus,
    /// The step that settles a leaf.
    pub closing_step: Option<String>,
    pub children: Vec<CaseNode>,
}

impl CaseNode {
    pub fn leaves(&self) -> Vec<&CaseNode> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(|c| c.leaves()).collect()
    }

    pub fn find(&self, id: &str) -> Option<&CaseNode> {
        if self.id == id {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(id))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub rank: u64,
    pub verdict: Verdict,
    /// False outside ranks 13 to 23, where the result is best effort.
    pub supported: bool,
    pub orders: Vec<u64>,
    pub tree: CaseNode,
    pub steps: Vec<ProofStep>,
    /// Witness left by the rank-17 orbit analysis, if any.
    pub witness: Option<Witness>,
}

impl Classification {
    pub fn trace_text(&self) -> String {
        render_trace(&self.steps)
    }

    pub fn tree_text(&self) -> String {
        let mut out = String::new();
        render_node(&self.tree, 0, &mut out);
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("rank {}: {}\n", self.rank, self.verdict);
        if !self.supported {
            out.push_str("note: rank outside 13..=23, result is best effort\n");
        }
        let _ = writeln!(out, "|G| in {:?}", self.orders);
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "surviving dimensions {:?} (dim {})", w.dims, w.dim);
        }
        out.push_str(&self.tree_text());
        out
    }
}

fn render_node(n: &CaseNode, depth: usize, out: &mut String) {
    let close = n.closing_step.as_deref().map(|s| format!(" ({s})")).unwrap_or_default();
    let _ = writeln!(out, "{}{} {}{close}", "  ".repeat(depth), n.id, n.status);
    for c in &n.children {
        render_node(c, depth + 1, out);
    }
}

pub fn classify(rank: u64) -> Result<Classification, ClassifyError> {
    let root = format!("r{rank}");
    let mut trace = Trace::default();
    let orders = orders::log_orders(&mut trace, &root, rank)?;
    let mut witness = None;
    let mut perfect_ids = Vec::new();
    for &o in &orders {
        let id = format!("{root}.g{o}");
        if o == rank {
            trace.push(&id, RuleId::PT, "pointed: |G| = rank, so every simple object is invertible");
        } else if o == 1 {
            trace.push(&id, RuleId::PT, "|G| = 1: perfect case, every non-invertible is graded nontrivially");
            trace.extend(perfect_chain(rank, &id).trace);
            perfect_ids.push(id);
        } else {
            let sat = saturate(&Hypothesis::mnsd_modular(rank).with_g_order(o), &id);
            trace.extend(sat.trace);
            if let SatVerdict::Open { leaves } = sat.verdict {
                for (leaf_id, leaf) in leaves {
                    if let Some(g3) = g3_rank17_analysis(&leaf, &leaf_id) {
                        trace.extend(g3.trace);
                        if let G3Status::Open { witness: w } = g3.status {
                            witness = Some(w);
                        }
                    }
                }
            }
        }
    }
    let tree = build_tree(&root, &trace.steps, &perfect_ids);
    let verdict = match tree.status {
        NodeStatus::Open | NodeStatus::Refuted => Verdict::Open,
        NodeStatus::PerfectOpen => Verdict::PointedOrPerfect,
        NodeStatus::Pointed => Verdict::Pointed,
    };
    Ok(Classification {
        rank,
        verdict,
        supported: (13..=23).contains(&rank),
        orders: orders.into_iter().collect(),
        tree,
        steps: trace.steps,
        witness,
    })
}

fn parent(id: &str) -> Option<&str> {
    id.rfind('.').map(|i| &id[..i])
}

fn build_tree(root: &str, steps: &[ProofStep], perfect_ids: &[String]) -> CaseNode {
    let mut by_hyp: BTreeMap<&str, Vec<&ProofStep>> = BTreeMap::new();
    let mut order: Vec<&str> = Vec::new();
    for s in steps {
        if !by_hyp.contains_key(s.hyp.as_str()) {
            order.push(&s.hyp);
        }
        by_hyp.entry(&s.hyp).or_default().push(s);
    }
    node(root, &order, &by_hyp, perfect_ids)
}

fn node(id: &str, order: &[&str], by_hyp: &BTreeMap<&str, Vec<&ProofStep>>, perfect_ids: &[String]) -> CaseNode {
    let children: Vec<CaseNode> =
        order.iter().filter(|h| parent(h) == Some(id)).map(|h| node(h, order, by_hyp, perfect_ids)).collect();
    if !children.is_empty() {
        let status = if children.iter().any(|c| c.status == NodeStatus::Open) {
            NodeStatus::Open
        } else if children.iter().any(|c| c.status == NodeStatus::PerfectOpen) {
            NodeStatus::PerfectOpen
        } else if children.iter().any(|c| c.status == NodeStatus::Pointed) {
            NodeStatus::Pointed
        } else {
            NodeStatus::Refuted
        };
        return CaseNode { id: id.to_string(), status, closing_step: None, children };
    }
    let perfect = perfect_ids.iter().any(|p| id == p || id.starts_with(&format!("{p}.")));
    let last = by_hyp.get(id).and_then(|v| v.last());
    let (status, closing_step) = match last {
        Some(s) if s.delta.starts_with("refuted") => (NodeStatus::Refuted, Some(s.id.clone())),
        Some(s) if s.delta.starts_with("pointed") => (NodeStatus::Pointed, Some(s.id.clone())),
        Some(s) if perfect => (NodeStatus::PerfectOpen, Some(s.id.clone())),
        Some(s) => (NodeStatus::Open, Some(s.id.clone())),
        None => (NodeStatus::Open, None),
    };
    CaseNode { id: id.to_string(), status, closing_step, children: vec![] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_by_rank() {
        assert_eq!(classify(13).unwrap().verdict, Verdict::Pointed);
        assert_eq!(classify(15).unwrap().verdict, Verdict::Pointed);
        assert_eq!(classify(17).unwrap().verdict, Verdict::Open);
        for r in [19, 21, 23] {
            assert_eq!(classify(r).unwrap().verdict, Verdict::PointedOrPerfect, "rank {r}");
        }
    }

    #[test]
    fn rank_17_open_leaf_is_the_orbit_case() {
        let c = classify(17).unwrap();
        let open: Vec<&str> =
            c.tree.leaves().into_iter().filter(|l| l.status == NodeStatus::Open).map(|l| l.id.as_str()).collect();
        assert!(open.iter().all(|id| id.starts_with("r17.g3.fix8")), "{open:?}");
        assert_eq!(c.witness.as_ref().unwrap().dim, 225);
    }

    #[test]
    fn rejects_bad_ranks() {
        assert_eq!(classify(12).unwrap_err(), ClassifyError::UnsupportedRank(12));
    }
}
