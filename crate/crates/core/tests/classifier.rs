use std::time::{Duration, Instant};

use mtclab::classifier::{
    admissible_group_orders, brute_force_dims, classify, g3_rank17_analysis, perfect_chain, BranchStatus, CaseNode,
    G3Status, NodeStatus, Verdict,
};
use mtclab::filters::{anchor, saturate, Cands, Flag, Hypothesis, RuleId, SatVerdict, CATALOG};

/// Unpruned enumeration of non-increasing odd tuples in `[3, bound]`.
fn naive_dims(rank: u64, bound: u64) -> Vec<Vec<u64>> {
    fn go(m: usize, max: u64, seq: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if seq.len() == m {
            let dim = 1 + 2 * seq.iter().map(|d| d * d).sum::<u64>();
            if seq.iter().all(|d| dim % (d * d) == 0) {
                out.push(seq.clone());
            }
            return;
        }
        let mut d = 3;
        while d <= max {
            seq.push(d);
            go(m, d, seq, out);
            seq.pop();
            d += 2;
        }
    }
    let mut out = Vec::new();
    go(((rank - 1) / 2) as usize, bound, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn count(n: &CaseNode) -> usize {
    1 + n.children.iter().map(count).sum::<usize>()
}

#[test]
fn admissible_orders_contain_the_expected_sets() {
    let has = |r: u64, v: &[u64]| {
        let s = admissible_group_orders(r).unwrap();
        v.iter().all(|o| s.contains(o))
    };
    assert!(has(13, &[1, 3, 13]));
    for o in [5, 7, 9, 11] {
        assert!(!admissible_group_orders(13).unwrap().contains(&o));
    }
    for r in [15, 17, 19, 21, 23] {
        assert!(has(r, &[1, 3, 5, 9, r]), "rank {r}");
    }
    assert!(has(21, &[15]) && has(23, &[15]));
    assert_eq!(admissible_group_orders(3).unwrap().into_iter().collect::<Vec<_>>(), vec![1, 3]);
    for r in (3..=99).step_by(2) {
        let s = admissible_group_orders(r).unwrap();
        assert!(s.contains(&1) && s.contains(&r));
        assert!(s.iter().all(|o| o % 2 == 1 && *o <= r));
    }
    assert!(admissible_group_orders(2).is_err());
    assert!(admissible_group_orders(1).is_err());
}

#[test]
fn brute_oracle_matches_unpruned_enumeration() {
    for (rank, bound) in
        [(3, 45), (5, 45), (7, 35), (9, 27), (11, 21), (13, 17), (15, 15), (17, 15), (19, 13), (23, 11)]
    {
        assert_eq!(brute_force_dims(rank, bound), naive_dims(rank, bound), "rank {rank} bound {bound}");
    }
}

#[test]
fn chain_refutations_agree_with_the_oracle() {
    for rank in [13, 15] {
        let chain = perfect_chain(rank, "p");
        assert!(chain.refuted(), "rank {rank}");
        let t = Instant::now();
        assert!(brute_force_dims(rank, 99).is_empty());
        assert!(t.elapsed() < Duration::from_secs(60));
    }
    for rank in (3..=11).step_by(2) {
        assert!(perfect_chain(rank, "p").refuted());
        assert!(brute_force_dims(rank, 99).is_empty());
    }
}

#[test]
fn chain_never_refutes_the_open_ranks() {
    for rank in [17, 19, 21, 23] {
        let chain = perfect_chain(rank, "p");
        assert!(!chain.refuted(), "rank {rank}");
        let open: Vec<_> = chain.branches.iter().filter(|b| matches!(b.status, BranchStatus::Open { .. })).collect();
        assert!(!open.is_empty());
        // Every oracle hit must sit on an open branch with its l.
        for d in brute_force_dims(rank, 45) {
            let dim = 1 + 2 * d.iter().map(|x| x * x).sum::<u64>();
            let l = dim / (d[0] * d[0]);
            assert!(open.iter().any(|b| b.l == l), "rank {rank}: {d:?} has l = {l}");
        }
    }
}

#[test]
fn chain_coefficients_follow_the_stage_recurrence() {
    for rank in [13, 15, 17, 19, 21, 23] {
        for b in perfect_chain(rank, "p").branches {
            let c = &b.coefficients;
            assert_eq!(c[0], b.l as i64);
            assert_eq!(c[1], b.l as i64 - 2);
            assert!(c.iter().all(|x| x % 2 != 0));
            for (k, r) in b.ratios.iter().enumerate() {
                assert_eq!(c[k + 2], c[k + 1] * (r * r) as i64 - 2, "{}", b.hyp);
            }
        }
    }
}

#[test]
fn rank_13_is_pointed_with_the_l_5_chain() {
    let t = Instant::now();
    let c = classify(13).unwrap();
    assert!(t.elapsed() < Duration::from_secs(5));
    assert_eq!(c.verdict, Verdict::Pointed);
    let text = c.trace_text();
    assert!(text.contains("and therefore l = 5"));
    assert!(text.contains("d1 = d2") && text.contains("d2 = d3"));
    assert!(text.contains("d3^2 = 1 + 2d3^2"));
    let r2 = c.steps.iter().find(|s| s.hyp == "r13.g3" && s.rule == RuleId::R2).unwrap();
    assert!(r2.delta.starts_with("refuted") && r2.delta.contains("rank_ad 5") && r2.delta.contains("rank_ad 7"));
    for leaf in c.tree.leaves() {
        assert!(matches!(leaf.status, NodeStatus::Refuted | NodeStatus::Pointed), "{}", leaf.id);
    }
}

#[test]
fn rank_15_is_pointed_with_the_l_7_descent() {
    let t = Instant::now();
    let c = classify(15).unwrap();
    assert!(t.elapsed() < Duration::from_secs(5));
    assert_eq!(c.verdict, Verdict::Pointed);
    let chain = perfect_chain(15, "r15.g1");
    assert_eq!(chain.chain_text(&chain.branches[0]), "7 -> 5 -> 3 -> 1 -> -1");
    let r10 = c.steps.iter().find(|s| s.hyp == "r15.g3" && s.rule == RuleId::R10).unwrap();
    assert!(r10.delta.contains("3 does not divide 5"), "{}", r10.delta);
}

#[test]
fn larger_ranks_leave_only_the_perfect_case() {
    for rank in [19, 21, 23] {
        let t = Instant::now();
        let c = classify(rank).unwrap();
        assert!(t.elapsed() < Duration::from_secs(30));
        assert_eq!(c.verdict, Verdict::PointedOrPerfect, "rank {rank}");
        let g1 = c.tree.find(&format!("r{rank}.g1")).unwrap();
        assert_eq!(g1.status, NodeStatus::PerfectOpen);
        for leaf in c.tree.leaves() {
            if !leaf.id.starts_with(&g1.id) {
                assert!(matches!(leaf.status, NodeStatus::Refuted | NodeStatus::Pointed), "{}", leaf.id);
            }
        }
    }
}

#[test]
fn rank_21_order_3_closes_at_adjoint_rank_7() {
    let c = classify(21).unwrap();
    let node = c.tree.find("r21.g3").unwrap();
    assert_eq!(node.status, NodeStatus::Refuted);
    let step = c.steps.iter().find(|s| Some(&s.id) == node.closing_step.as_ref()).unwrap();
    assert_eq!(step.rule, RuleId::R10);
    assert!(step.delta.contains("(7,7,7)") && step.delta.contains("3 does not divide 7"));
}

#[test]
fn rank_17_orbit_analysis() {
    let mut h = Hypothesis::mnsd_modular(17).with_g_order(3);
    h.rank_ad = Cands::known(11);
    h.set_flag(Flag::CptInsideCad, true);
    let g3 = g3_rank17_analysis(&h, "h").unwrap();
    let text: Vec<&str> = g3.trace.steps.iter().map(|s| s.delta.as_str()).collect();
    let has = |needle: &str| text.iter().any(|t| t.contains(needle));
    assert!(has("2 or 8 fixed elements"));
    assert!(has("d1 in [3]"));
    assert!(has("63 = 3^2·7"));
    assert!(has("l^2 <= 24"));
    let fix2 = g3.trace.steps.iter().rfind(|s| s.hyp == "h.fix2").unwrap();
    assert!(fix2.delta.starts_with("refuted"));
    // The subcase with 8 fixed objects leaves l = 5 standing.
    match g3.status {
        G3Status::Open { witness } => {
            assert_eq!(witness.dim, 225);
            assert!(witness.ring_checked);
        }
        G3Status::Refuted => panic!("the l = 5 candidate should survive"),
    }

    // Witness arithmetic, independently.
    let dims = [1u64, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3, 5, 5, 5, 5, 5, 5];
    let dim: u64 = dims.iter().map(|d| d * d).sum();
    assert_eq!(dim, 225);
    assert!(dims.iter().all(|d| dim.is_multiple_of(d * d)));
    assert_eq!(dim % 8, 17 % 8);
    assert_eq!(25, 1 + 6 * 4);

    h.rank_ad = Cands::known(9);
    assert!(g3_rank17_analysis(&h, "h").is_none());
}

#[test]
fn rank_17_stays_open() {
    let c = classify(17).unwrap();
    assert_eq!(c.verdict, Verdict::Open);
    assert_eq!(c.tree.find("r17.g1").unwrap().status, NodeStatus::PerfectOpen);
    assert_eq!(c.tree.find("r17.g3.fix2").unwrap().status, NodeStatus::Refuted);
    assert_eq!(c.tree.find("r17.g3.fix8").unwrap().status, NodeStatus::Open);
    for o in [5, 9] {
        assert_eq!(c.tree.find(&format!("r17.g{o}")).unwrap().status, NodeStatus::Refuted);
    }
    // The saturation alone leaves rank_ad = 11 for |G| = 3.
    let sat = saturate(&Hypothesis::mnsd_modular(17).with_g_order(3), "s");
    match sat.verdict {
        SatVerdict::Open { leaves } => {
            assert_eq!(leaves.len(), 1);
            assert_eq!(leaves[0].1.rank_ad_known(), Some(11));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn refuted_leaves_cite_registered_anchors() {
    for rank in [13, 15, 17, 19, 21, 23] {
        let c = classify(rank).unwrap();
        assert!(count(&c.tree) < 10_000);
        for leaf in c.tree.leaves() {
            if leaf.status != NodeStatus::Refuted {
                continue;
            }
            let id = leaf.closing_step.as_ref().unwrap_or_else(|| panic!("{} has no closing step", leaf.id));
            let step = c.steps.iter().find(|s| &s.id == id).unwrap();
            assert!(step.delta.starts_with("refuted"), "{}", step.delta);
            assert!(CATALOG.iter().any(|e| anchor(e.id) == step.anchor), "{}", step.anchor);
        }
        for s in &c.steps {
            assert_eq!(s.anchor, anchor(s.rule));
        }
        let mut ids: Vec<&str> = c.steps.iter().map(|s| s.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), c.steps.len(), "rank {rank}: duplicate step ids");
    }
}

#[test]
fn tree_status_is_the_join_of_its_leaves() {
    fn check(n: &CaseNode) {
        if n.children.is_empty() {
            return;
        }
        let all_refuted = n.children.iter().all(|c| c.status == NodeStatus::Refuted);
        assert_eq!(n.status == NodeStatus::Refuted, all_refuted, "{}", n.id);
        n.children.iter().for_each(check);
    }
    for rank in [13, 15, 17, 19, 21, 23] {
        check(&classify(rank).unwrap().tree);
    }
}

#[test]
fn classification_is_deterministic() {
    for rank in [13, 17, 23] {
        let a = classify(rank).unwrap();
        let b = classify(rank).unwrap();
        assert_eq!(a.trace_text(), b.trace_text());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn best_effort_outside_the_supported_range() {
    let c = classify(11).unwrap();
    assert!(!c.supported);
    let c = classify(25).unwrap();
    assert!(!c.supported);
    assert!(classify(13).unwrap().supported);
}
