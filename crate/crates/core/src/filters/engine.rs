//! Saturation: apply rules in catalog order until nothing changes, then
//! split the smallest finite candidate set and recurse.

use serde::Serialize;

use super::hypothesis::{Cands, Hypothesis};
use super::rules::{apply_rule, Delta, Outcome, RuleId, ENGINE_ORDER};
use super::trace::Trace;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Budget from `MTCLAB_STEP_BUDGET`, falling back to the default.
pub fn step_budget() -> u64 {
    std::env::var("MTCLAB_STEP_BUDGET").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_STEP_BUDGET)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SatVerdict {
    Refuted,
    /// Fixpoint leaves that no rule closes, with their hypothesis ids.
    Open {
        leaves: Vec<(String, Hypothesis)>,
    },
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct Saturation {
    pub verdict: SatVerdict,
    pub trace: Trace,
    /// Rule applications attempted.
    pub steps_used: u64,
}

struct Run {
    trace: Trace,
    budget: u64,
    used: u64,
    leaves: Vec<(String, Hypothesis)>,
}

struct OutOfBudget;

enum Status {
    Refuted,
    Open,
}

pub fn saturate(h: &Hypothesis, id: &str) -> Saturation {
    saturate_with_budget(h, id, step_budget())
}

pub fn saturate_with_budget(h: &Hypothesis, id: &str, budget: u64) -> Saturation {
    let mut run = Run { trace: Trace::default(), budget, used: 0, leaves: Vec::new() };
    let verdict = match run.node(h.clone(), id.to_string()) {
        Ok(Status::Refuted) => SatVerdict::Refuted,
        Ok(Status::Open) => SatVerdict::Open { leaves: std::mem::take(&mut run.leaves) },
        Err(OutOfBudget) => {
            run.trace.push(id, RuleId::Split, format!("step budget of {budget} exhausted; verdict inconclusive"));
            SatVerdict::Inconclusive
        }
    };
    Saturation { verdict, trace: run.trace, steps_used: run.used }
}

fn describe(deltas: &[Delta]) -> String {
    deltas.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; ")
}

impl Run {
    fn node(&mut self, mut h: Hypothesis, id: String) -> Result<Status, OutOfBudget> {
        'restart: loop {
            for &rule in ENGINE_ORDER {
                if self.used >= self.budget {
                    return Err(OutOfBudget);
                }
                self.used += 1;
                match apply_rule(&h, rule) {
                    Outcome::NotApplicable => {}
                    Outcome::Refutation { why } => {
                        self.trace.push(&id, rule, format!("refuted: {why}"));
                        return Ok(Status::Refuted);
                    }
                    Outcome::Facts { deltas, why } => {
                        let mut next = h.clone();
                        let mut changed = Vec::new();
                        for d in &deltas {
                            match next.apply(d) {
                                Ok(true) => changed.push(d.clone()),
                                Ok(false) => {}
                                Err(conflict) => {
                                    let mut shown = changed.clone();
                                    shown.push(d.clone());
                                    self.trace.push(
                                        &id,
                                        rule,
                                        format!("refuted: {}: {conflict} [{why}]", describe(&shown)),
                                    );
                                    return Ok(Status::Refuted);
                                }
                            }
                        }
                        if !changed.is_empty() {
                            self.trace.push(&id, rule, format!("{} [{why}]", describe(&changed)));
                            h = next;
                            continue 'restart;
                        }
                    }
                }
            }
            break;
        }
        self.split(h, id)
    }

    fn split(&mut self, h: Hypothesis, id: String) -> Result<Status, OutOfBudget> {
        let sizes = [
            ("g", h.g_order.set().map(|s| s.len())),
            ("gad", h.g_ad_order.set().map(|s| s.len())),
            ("ad", h.rank_ad.set().map(|s| s.len())),
            ("c", h.components.set().map(|s| s.len())),
        ];
        let pick = sizes.iter().filter_map(|&(tag, n)| n.filter(|&n| n > 1).map(|n| (n, tag))).min_by_key(|&(n, _)| n);
        let Some((_, tag)) = pick else {
            self.leaves.push((id, h));
            return Ok(Status::Open);
        };
        let mut children: Vec<(String, Hypothesis)> = Vec::new();
        let field;
        match tag {
            "g" | "gad" | "ad" => {
                let slot = match tag {
                    "g" => &h.g_order,
                    "gad" => &h.g_ad_order,
                    _ => &h.rank_ad,
                };
                field = match tag {
                    "g" => format!("|G| in {slot}"),
                    "gad" => format!("|G_ad| in {slot}"),
                    _ => format!("rank_ad in {slot}"),
                };
                for &v in slot.set().expect("finite") {
                    let mut child = h.clone();
                    let c = Cands::known(v);
                    match tag {
                        "g" => child.g_order = c,
                        "gad" => child.g_ad_order = c,
                        _ => child.rank_ad = c,
                    }
                    children.push((format!("{id}.{tag}{v}"), child));
                }
            }
            _ => {
                field = format!("components in {}", h.components);
                for (i, comp) in h.components.set().expect("finite").iter().enumerate() {
                    let mut child = h.clone();
                    child.components = Cands::known(comp.clone());
                    children.push((format!("{id}.c{}", i + 1), child));
                }
            }
        }
        let names: Vec<&str> = children.iter().map(|(n, _)| n.as_str()).collect();
        self.trace.push(&id, RuleId::Split, format!("{field} -> {}", names.join(", ")));
        let mut all_refuted = true;
        for (cid, child) in children {
            if let Status::Open = self.node(child, cid)? {
                all_refuted = false;
            }
        }
        Ok(if all_refuted { Status::Refuted } else { Status::Open })
    }
}
