//! Exhaustive search for perfect-case dimension vectors, used to cross-check
//! the descent.

/// All non-increasing odd `d_1 >= ... >= d_m >= 3` with `d_1 <= bound`,
/// `m = (rank - 1)/2`, such that `dim = 1 + 2 Σ d_i²` is divisible by every
/// `d_i²` and `dim ≡ rank (mod 8)`.
pub fn brute_force_dims(rank: u64, bound: u64) -> Vec<Vec<u64>> {
    assert!(rank % 2 == 1 && rank >= 3, "rank must be odd and at least 3");
    let m = ((rank - 1) / 2) as usize;
    let mut found = Vec::new();
    for d1 in (3..=bound).step_by(2) {
        let sq = d1 * d1;
        // dim = l·d1² with 1 + 2d1² + 18(m-1) <= dim <= 1 + 2m·d1².
        let lo = 1 + 2 * sq + 18 * (m as u64 - 1);
        let hi = 1 + 2 * m as u64 * sq;
        let mut l = lo.div_ceil(sq);
        while l * sq <= hi {
            let dim = l * sq;
            if l % 2 == 1 && dim % 8 == rank % 8 {
                let rest = (dim - 1) / 2 - sq;
                let allowed: Vec<u64> = (3..=d1).rev().step_by(2).filter(|d| dim % (d * d) == 0).collect();
                let mut seq = vec![d1];
                fill(&allowed, 0, m - 1, rest, &mut seq, &mut found);
            }
            l += 1;
        }
    }
    found.sort();
    found
}

fn fill(allowed: &[u64], from: usize, left: usize, rest: u64, seq: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if left == 0 {
        if rest == 0 {
            out.push(seq.clone());
        }
        return;
    }
    for (i, &d) in allowed.iter().enumerate().skip(from) {
        let sq = d * d;
        if sq * left as u64 > rest {
            continue;
        }
        // Every later entry is at least 3.
        if sq + 9 * (left as u64 - 1) > rest {
            continue;
        }
        if sq * (left as u64) < rest {
            // Remaining terms are at most d², so this d and all smaller fail.
            break;
        }
        seq.push(d);
        fill(allowed, i, left - 1, rest - sq, seq, out);
        seq.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_solutions_for_the_closed_ranks() {
        assert!(brute_force_dims(13, 99).is_empty());
        assert!(brute_force_dims(15, 99).is_empty());
        assert!(brute_force_dims(11, 99).is_empty());
    }

    #[test]
    fn every_hit_satisfies_the_constraints() {
        for rank in [17, 19, 21] {
            for d in brute_force_dims(rank, 45) {
                let dim = 1 + 2 * d.iter().map(|x| x * x).sum::<u64>();
                assert!(d.iter().all(|x| x % 2 == 1 && dim % (x * x) == 0));
                assert_eq!(dim % 8, rank % 8);
            }
        }
    }
}
