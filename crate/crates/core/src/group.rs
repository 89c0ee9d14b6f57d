//! Finite abelian groups in invariant-factor form.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group is not abelian: {a}·{b} != {b}·{a}")]
    Nonabelian { a: usize, b: usize },
    #[error("operation table does not define a group")]
    NotAGroup,
}

/// `Z_{n1} x ... x Z_{nt}` with `n1 | n2 | ... | nt` and every `ni > 1`.
/// The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        AbelianGroup::from_factors(&[n])
    }

    /// Normalises any list of cyclic orders to invariant factors.
    pub fn from_factors(orders: &[u64]) -> Self {
        // Split into prime powers, then deal them out largest-first.
        let mut by_prime: Vec<(u64, Vec<u64>)> = Vec::new();
        for &n in orders {
            for (p, e) in factorize(n) {
                let q = p.pow(e);
                match by_prime.iter_mut().find(|(pp, _)| *pp == p) {
                    Some((_, v)) => v.push(q),
                    None => by_prime.push((p, vec![q])),
                }
            }
        }
        let t = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; t];
        for (_, mut powers) in by_prime {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, q) in factors.iter_mut().rev().zip(powers) {
                *slot *= q;
            }
        }
        factors.retain(|&f| f > 1);
        AbelianGroup { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), n)| (x + y) % n).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(x, n)| (n - x) % n).collect()
    }

    /// All elements in lexicographic order of coordinates.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &n in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Invariant factors of a group given by its operation on `0..n`, together
/// with coordinates of every element in the chosen basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub group: AbelianGroup,
    pub coords: Vec<Vec<u64>>,
}

pub fn decompose(n: usize, identity: usize, op: impl Fn(usize, usize) -> usize) -> Result<Decomposition, GroupError> {
    for a in 0..n {
        if op(identity, a) != a {
            return Err(GroupError::NotAGroup);
        }
        for b in 0..n {
            let ab = op(a, b);
            if ab >= n {
                return Err(GroupError::NotAGroup);
            }
            if ab != op(b, a) {
                return Err(GroupError::Nonabelian { a, b });
            }
        }
    }
    let order_of = |g: usize| {
        let mut x = g;
        let mut k = 1u64;
        while x != identity {
            x = op(x, g);
            k += 1;
            if k > n as u64 {
                return None;
            }
        }
        Some(k)
    };
    let mut orders = Vec::with_capacity(n);
    for g in 0..n {
        orders.push(order_of(g).ok_or(GroupError::NotAGroup)?);
    }

    // Invariant factors from counting elements of p-power order.
    let mut prime_parts: Vec<u64> = Vec::new();
    for (p, _) in factorize(n as u64) {
        let p_elems: Vec<u64> = orders.iter().copied().filter(|&o| is_power_of(o, p)).collect();
        if p_elems.len() as u64 != p.pow(factorize(n as u64).into_iter().find(|&(q, _)| q == p).unwrap().1) {
            return Err(GroupError::NotAGroup);
        }
        // Number of cyclic summands with exponent >= k is log_p(|Ω_k| / |Ω_{k-1}|).
        let mut k = 1u32;
        let mut prev = 1usize;
        let mut at_least = Vec::new();
        loop {
            let omega = p_elems.iter().filter(|&&o| p.pow(k) % o == 0).count();
            if omega == prev {
                break;
            }
            let mut ratio = omega / prev;
            let mut cnt = 0;
            while ratio > 1 {
                ratio /= p as usize;
                cnt += 1;
            }
            at_least.push(cnt);
            prev = omega;
            k += 1;
        }
        let t = at_least.first().copied().unwrap_or(0);
        for s in 0..t {
            let e = at_least.iter().filter(|&&c| c > s).count() as u32;
            prime_parts.push(p.pow(e));
        }
    }
    let group = AbelianGroup::from_factors(&prime_parts);
    if group.order() != n as u64 {
        return Err(GroupError::NotAGroup);
    }

    let basis = find_basis(n, identity, &op, &orders, group.factors()).ok_or(GroupError::NotAGroup)?;
    let mut coords = vec![Vec::new(); n];
    for c in group.elements() {
        let mut x = identity;
        for (&b, &a) in basis.iter().zip(&c) {
            for _ in 0..a {
                x = op(x, b);
            }
        }
        coords[x] = c;
    }
    Ok(Decomposition { group, coords })
}

/// Backtracking search for generators with orders equal to the invariant
/// factors whose products are all distinct.
fn find_basis(
    n: usize,
    identity: usize,
    op: &impl Fn(usize, usize) -> usize,
    orders: &[u64],
    factors: &[u64],
) -> Option<Vec<usize>> {
    fn span(identity: usize, op: &impl Fn(usize, usize) -> usize, gens: &[usize], n: usize) -> Vec<bool> {
        let mut inside = vec![false; n];
        inside[identity] = true;
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = op(x, g);
                if !inside[y] {
                    inside[y] = true;
                    frontier.push(y);
                }
            }
        }
        inside
    }
    fn go(
        n: usize,
        identity: usize,
        op: &impl Fn(usize, usize) -> usize,
        orders: &[u64],
        factors: &[u64],
        chosen: &mut Vec<usize>,
    ) -> bool {
        // Choose from the largest factor down; store in factor order at the end.
        let depth = chosen.len();
        if depth == factors.len() {
            return true;
        }
        let want = factors[factors.len() - 1 - depth];
        let target: u64 = factors[factors.len() - 1 - depth..].iter().product();
        for g in 0..n {
            if orders[g] != want {
                continue;
            }
            chosen.push(g);
            let size = span(identity, op, chosen, n).iter().filter(|&&b| b).count() as u64;
            if size == target && go(n, identity, op, orders, factors, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if go(n, identity, op, orders, factors, &mut chosen) {
        chosen.reverse();
        Some(chosen)
    } else {
        None
    }
}

fn is_power_of(mut x: u64, p: u64) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn is_square_free(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// `Some(p)` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power_base(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_factor_lists() {
        assert_eq!(AbelianGroup::from_factors(&[3, 5]).factors(), &[15]);
        assert_eq!(AbelianGroup::from_factors(&[9, 3]).factors(), &[3, 9]);
        assert_eq!(AbelianGroup::from_factors(&[2, 4, 3]).factors(), &[2, 12]);
        assert!(AbelianGroup::from_factors(&[1, 1]).is_trivial());
    }

    #[test]
    fn decomposes_products_of_cyclic_groups() {
        for factors in [vec![3usize, 3], vec![9], vec![3, 5], vec![2, 4], vec![3, 3, 3], vec![1]] {
            let n: usize = factors.iter().product();
            let decode = |mut x: usize| {
                let mut d = vec![0; factors.len()];
                for (slot, &f) in d.iter_mut().zip(&factors).rev() {
                    *slot = x % f;
                    x /= f;
                }
                d
            };
            let op = |a: usize, b: usize| {
                let (da, db) = (decode(a), decode(b));
                da.iter().zip(&db).zip(&factors).fold(0, |acc, ((x, y), f)| acc * f + (x + y) % f)
            };
            let dec = decompose(n, 0, op).unwrap();
            let expected = AbelianGroup::from_factors(&factors.iter().map(|&f| f as u64).collect::<Vec<_>>());
            assert_eq!(dec.group, expected);
            // coordinates give an isomorphism
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(dec.group.add(&dec.coords[a], &dec.coords[b]), dec.coords[op(a, b)]);
                }
            }
        }
    }

    #[test]
    fn rejects_nonabelian_tables() {
        // S3 as permutations of three points.
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let op = |a: usize, b: usize| {
            let c = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
            perms.iter().position(|p| *p == c).unwrap()
        };
        assert!(matches!(decompose(6, 0, op), Err(GroupError::Nonabelian { .. })));
    }
}
