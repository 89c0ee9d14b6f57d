use std::collections::BTreeSet;

use super::ClassifyError;
use crate::filters::{RuleId, Trace};
use crate::group::{divisors, factorize};

/// Odd group orders that survive the rank bounds, together with the
/// reasons each pruned order was dropped.
///
/// An order `o` survives when some divisor `g_ad` of `o` is compatible with
/// the rank: `g_ad = 1` needs `o | rank` (the rank factorises), and
/// `g_ad > 1` needs `rank >= g_ad + o + 2p - 3` for every prime `p | g_ad`
/// (the prime bound with `rank_ad >= g_ad`).
pub fn admissible_group_orders(rank: u64) -> Result<BTreeSet<u64>, ClassifyError> {
    Ok(admissible_with_reasons(rank)?.0)
}

pub fn admissible_with_reasons(rank: u64) -> Result<(BTreeSet<u64>, Vec<(u64, String)>), ClassifyError> {
    if rank.is_multiple_of(2) || !(3..=99).contains(&rank) {
        return Err(ClassifyError::UnsupportedRank(rank));
    }
    let mut keep = BTreeSet::from([1, rank]);
    let mut dropped = Vec::new();
    for o in (3..rank).step_by(2) {
        let mut reasons = Vec::new();
        let ok = divisors(o).into_iter().any(|gad| {
            if gad == 1 {
                let fits = rank.is_multiple_of(o);
                if !fits {
                    reasons.push(format!("|G_ad| = 1 needs {o} | {rank}"));
                }
                fits
            } else {
                let worst = factorize(gad).into_iter().map(|(p, _)| gad + o + 2 * p - 3).max().unwrap_or(0);
                if worst > rank {
                    reasons.push(format!("|G_ad| = {gad} needs rank >= {worst}"));
                }
                worst <= rank
            }
        });
        if ok {
            keep.insert(o);
        } else {
            dropped.push((o, reasons.join(", ")));
        }
    }
    Ok((keep, dropped))
}

pub(crate) fn log_orders(trace: &mut Trace, id: &str, rank: u64) -> Result<BTreeSet<u64>, ClassifyError> {
    let (keep, dropped) = admissible_with_reasons(rank)?;
    for (o, why) in &dropped {
        trace.push(id, RuleId::Ord, format!("|G| = {o} excluded: {why}"));
    }
    let shown: Vec<String> = keep.iter().map(|o| o.to_string()).collect();
    trace.push(id, RuleId::Ord, format!("|G| in {{{}}}", shown.join(",")));
    Ok(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_for_the_supported_ranks() {
        let s = |v: &[u64]| v.iter().copied().collect::<BTreeSet<u64>>();
        assert_eq!(admissible_group_orders(13).unwrap(), s(&[1, 3, 13]));
        assert_eq!(admissible_group_orders(15).unwrap(), s(&[1, 3, 5, 9, 15]));
        assert_eq!(admissible_group_orders(17).unwrap(), s(&[1, 3, 5, 9, 17]));
        assert_eq!(admissible_group_orders(19).unwrap(), s(&[1, 3, 5, 9, 19]));
        assert_eq!(admissible_group_orders(21).unwrap(), s(&[1, 3, 5, 7, 9, 15, 21]));
        assert_eq!(admissible_group_orders(23).unwrap(), s(&[1, 3, 5, 9, 15, 23]));
        assert_eq!(admissible_group_orders(3).unwrap(), s(&[1, 3]));
        assert!(admissible_group_orders(14).is_err());
        assert!(admissible_group_orders(101).is_err());
    }
}
