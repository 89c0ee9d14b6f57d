use std::fmt::Write;

use serde::Serialize;

use super::rules::{anchor, RuleId};

/// One derivation step. `hyp` names the hypothesis the step refines; step
/// ids are `<hyp>#<n>` with `n` counting from 1 within that hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofStep {
    pub id: String,
    pub hyp: String,
    pub rule: RuleId,
    pub delta: String,
    pub anchor: String,
}

/// Collects steps and hands out per-hypothesis step numbers.
#[derive(Debug, Default, Clone)]
pub struct Trace {
    pub steps: Vec<ProofStep>,
    counters: std::collections::BTreeMap<String, usize>,
}

impl Trace {
    pub fn push(&mut self, hyp: &str, rule: RuleId, delta: impl Into<String>) -> String {
        let n = self.counters.entry(hyp.to_string()).or_insert(0);
        *n += 1;
        let id = format!("{hyp}#{n}");
        self.steps.push(ProofStep {
            id: id.clone(),
            hyp: hyp.to_string(),
            rule,
            delta: delta.into(),
            anchor: anchor(rule),
        });
        id
    }

    /// Appends `other`, renumbering its step ids to continue this trace.
    pub fn extend(&mut self, other: Trace) {
        for mut s in other.steps {
            let n = self.counters.entry(s.hyp.clone()).or_insert(0);
            *n += 1;
            s.id = format!("{}#{n}", s.hyp);
            self.steps.push(s);
        }
    }
}

/// Line format: `id<TAB>hyp<TAB>rule<TAB>delta<TAB>anchor`.
pub fn render_trace(steps: &[ProofStep]) -> String {
    let mut out = String::new();
    for s in steps {
        let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", s.id, s.hyp, s.rule, s.delta.replace(['\t', '\n'], " "), s.anchor);
    }
    out
}
