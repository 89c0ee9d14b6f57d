//! Descent for the perfect case, where every non-invertible object is
//! non-trivially graded away from the unit.
//!
//! With dimensions `d_1 >= ... >= d_m >= 3` (one per dual pair) and
//! `dim = 1 + 2 Σ d_i²`, write `dim = l·d_1²`. Then `l` is odd,
//! `3 <= l <= 2m` and `l ≡ rank (mod 8)`. Put `c_1 = l - 2`, so
//! `c_j d_j² = 1 + 2 Σ_{i>j} d_i²`. When `d_{j+1} | d_j` with odd ratio `r`,
//! the stage bound is `c_j r² <= 2(m - j)` and `c_{j+1} = c_j r² - 2`.

use serde::Serialize;

use crate::filters::{RuleId, Trace};
use crate::group::is_square_free;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum BranchStatus {
    Refuted {
        reason: String,
    },
    /// Left open; `square_free_gap` marks a divisibility step that could not
    /// be established.
    Open {
        reason: String,
        square_free_gap: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainBranch {
    pub hyp: String,
    pub l: u64,
    /// Ratios `d_j / d_{j+1}` chosen along the branch.
    pub ratios: Vec<u64>,
    /// `l, c_1, c_2, ...` as the descent proceeds.
    pub coefficients: Vec<i64>,
    pub status: BranchStatus,
    pub closing_step: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ChainResult {
    pub rank: u64,
    pub branches: Vec<ChainBranch>,
    pub trace: Trace,
}

impl ChainResult {
    pub fn refuted(&self) -> bool {
        self.branches.iter().all(|b| matches!(b.status, BranchStatus::Refuted { .. }))
    }

    /// `l, c_1, ...` of the first branch, joined with arrows.
    pub fn chain_text(&self, branch: &ChainBranch) -> String {
        branch.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" -> ")
    }
}

/// Runs the descent for an odd rank with every branch logged under `id`.
pub fn perfect_chain(rank: u64, id: &str) -> ChainResult {
    let m = (rank - 1) / 2;
    let mut trace = Trace::default();
    let ls: Vec<u64> = (3..=2 * m).step_by(2).filter(|l| l % 8 == rank % 8).collect();
    let shown: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
    let mut head = format!(
        "l = dim/d1^2 is odd with 3 <= l <= 2m = {} and l ≡ {rank} ≡ {} (mod 8): l in {{{}}}",
        2 * m,
        rank % 8,
        shown.join(",")
    );
    if ls.len() == 1 {
        head.push_str(&format!(", and therefore l = {}", ls[0]));
    }
    let head_id = trace.push(id, RuleId::R1x12, head);
    let mut branches = Vec::new();
    if ls.is_empty() {
        branches.push(ChainBranch {
            hyp: id.to_string(),
            l: 0,
            ratios: vec![],
            coefficients: vec![],
            status: BranchStatus::Refuted { reason: "no admissible l".into() },
            closing_step: Some(head_id),
        });
        return ChainResult { rank, branches, trace };
    }
    let split = ls.len() > 1;
    if split {
        let names: Vec<String> = ls.iter().map(|l| format!("{id}.l{l}")).collect();
        trace.push(id, RuleId::Split, format!("l in {{{}}} -> {}", shown.join(","), names.join(", ")));
    }
    for &l in &ls {
        let hyp = if split { format!("{id}.l{l}") } else { id.to_string() };
        if split {
            trace.push(&hyp, RuleId::Chain, format!("l = {l}: c1 = l - 2 = {}", l - 2));
        }
        let start = Walk { l, j: 1, c: l as i64 - 2, ratios: vec![], coefficients: vec![l as i64, l as i64 - 2] };
        descend(m, &hyp, start, &mut trace, &mut branches);
    }
    ChainResult { rank, branches, trace }
}

#[derive(Clone)]
struct Walk {
    l: u64,
    j: u64,
    c: i64,
    ratios: Vec<u64>,
    coefficients: Vec<i64>,
}

fn descend(m: u64, hyp: &str, w: Walk, trace: &mut Trace, out: &mut Vec<ChainBranch>) {
    let branch = |w: &Walk, status, closing_step| ChainBranch {
        hyp: hyp.to_string(),
        l: w.l,
        ratios: w.ratios.clone(),
        coefficients: w.coefficients.clone(),
        status,
        closing_step,
    };
    let (j, c) = (w.j, w.c);
    if c <= 0 {
        let k = j;
        let prev = w.coefficients[w.coefficients.len() - 2];
        let why = if prev == 1 && w.ratios.last() == Some(&1) {
            format!("d{k}^2 = 1 + 2d{k}^2 + 2Σ_(i>{k}) d_i^2 is impossible")
        } else {
            format!("c{k} = {c} <= 0 but c{k}·d{k}^2 = 1 + 2Σ_(i>{k}) d_i^2 > 0")
        };
        let sid = trace.push(hyp, RuleId::Chain, format!("refuted: {why}"));
        out.push(branch(&w, BranchStatus::Refuted { reason: why }, Some(sid)));
        return;
    }
    if j == m {
        let why = format!("c{j}·d{j}^2 = 1 is impossible for d{j} >= 3");
        let sid = trace.push(hyp, RuleId::Chain, format!("refuted: {why}"));
        out.push(branch(&w, BranchStatus::Refuted { reason: why }, Some(sid)));
        return;
    }
    let big_r: u64 = w.ratios.iter().product();
    let cofactor = w.l * big_r * big_r;
    if !is_square_free(cofactor) {
        let why = format!(
            "l·R^2 = {cofactor} is not square-free, so d{}^2 | dim does not give d{} | d{j}; branch left open",
            j + 1,
            j + 1
        );
        let sid = trace.push(hyp, RuleId::Chain, format!("open: {why}"));
        out.push(branch(&w, BranchStatus::Open { reason: why, square_free_gap: true }, Some(sid)));
        return;
    }
    let bound = 2 * (m - j) as i64;
    let ratios: Vec<u64> = (1..).step_by(2).take_while(|&r: &u64| c * (r * r) as i64 <= bound).collect();
    if ratios.is_empty() {
        let why = format!("stage {j}: c{j} = {c} exceeds 2(m - {j}) = {bound}");
        let sid = trace.push(hyp, RuleId::Chain, format!("refuted: {why}"));
        out.push(branch(&w, BranchStatus::Refuted { reason: why }, Some(sid)));
        return;
    }
    let (a, b) = (j, j + 1);
    if ratios == [1] {
        trace.push(
            hyp,
            RuleId::Chain,
            format!("stage {j}: c{j}·r^2 <= {bound} forces r = 1, so d{a} = d{b}; c{b} = {c} - 2 = {}", c - 2),
        );
        let mut next = w.clone();
        next.j += 1;
        next.c = c - 2;
        next.ratios.push(1);
        next.coefficients.push(c - 2);
        descend(m, hyp, next, trace, out);
        return;
    }
    let shown: Vec<String> = ratios.iter().map(|r| r.to_string()).collect();
    let names: Vec<String> = ratios.iter().map(|r| format!("{hyp}.r{r}")).collect();
    trace.push(
        hyp,
        RuleId::Split,
        format!(
            "stage {j}: c{j}·r^2 <= {bound} allows r = d{a}/d{b} in {{{}}} -> {}",
            shown.join(","),
            names.join(", ")
        ),
    );
    for (r, child) in ratios.into_iter().zip(names) {
        let nc = c * (r * r) as i64 - 2;
        if r == 1 {
            trace.push(&child, RuleId::Chain, format!("r = 1: d{a} = d{b}; c{b} = {nc}"));
        } else {
            trace.push(&child, RuleId::Chain, format!("r = {r}: d{a} = {r}·d{b}; c{b} = {c}·{} - 2 = {nc}", r * r));
        }
        let mut next = w.clone();
        next.j += 1;
        next.c = nc;
        next.ratios.push(r);
        next.coefficients.push(nc);
        descend(m, &child, next, trace, out);
    }
}
