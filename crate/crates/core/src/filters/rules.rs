//! Rule catalog: each rule refines a hypothesis soundly, refutes it, or
//! declares itself not applicable because a precondition is not established.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::hypothesis::{Cands, ComponentRanks, Flag, Hypothesis};
use crate::group::{divisors, factorize, is_prime, is_square_free, prime_power_base};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    PT,
    GR,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    R13,
    AD,
    /// Dimension cofactor congruence for the perfect descent.
    R1x12,
    /// Case split on a finite candidate set.
    Split,
    /// Pruning of admissible group orders.
    Ord,
    /// Perfect-case dimension descent.
    Chain,
    /// Order-3 analysis at rank 17.
    G3,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::PT => "PT",
            RuleId::GR => "GR",
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
            RuleId::R9 => "R9",
            RuleId::R10 => "R10",
            RuleId::R11 => "R11",
            RuleId::R12 => "R12",
            RuleId::R13 => "R13",
            RuleId::AD => "AD",
            RuleId::R1x12 => "R1x12",
            RuleId::Split => "SPLIT",
            RuleId::Ord => "ORD",
            RuleId::Chain => "CHAIN",
            RuleId::G3 => "G3",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CATALOG
            .iter()
            .map(|e| e.id)
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown rule id {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuleEntry {
    pub id: RuleId,
    pub anchor: &'static str,
    /// The rule rests on a result imported from outside the argument chain.
    pub imported: bool,
}

pub const CATALOG: &[RuleEntry] = &[
    RuleEntry { id: RuleId::PT, anchor: "pointed iff |G(C)| equals the rank", imported: false },
    RuleEntry { id: RuleId::GR, anchor: "universal grading by G(C) with trivial component C_ad", imported: false },
    RuleEntry { id: RuleId::R11, anchor: "G(C_ad) trivial iff G(C) trivial for MNSD ranks 13 to 23", imported: false },
    RuleEntry { id: RuleId::R4, anchor: "rank(C) = rank(C_ad) rank(C_pt) when G(C_ad) is trivial", imported: false },
    RuleEntry {
        id: RuleId::R13,
        anchor: "dual pairs: rank(C_g) = rank(C_-g) and subring ranks are odd",
        imported: false,
    },
    RuleEntry { id: RuleId::AD, anchor: "C_ad is not pointed unless C is pointed", imported: false },
    RuleEntry {
        id: RuleId::R3,
        anchor: "rank >= rank(C_ad) + |G(C)| + 2p - 3 for odd p dividing |G(C_ad)|",
        imported: false,
    },
    RuleEntry {
        id: RuleId::R5,
        anchor: "G(C_ad) of p-power order is not cyclic when cd(C) lies in 1 and pZ",
        imported: false,
    },
    RuleEntry { id: RuleId::R6, anchor: "FPdim(C_ad) is not the square of a prime dividing dim", imported: false },
    RuleEntry { id: RuleId::R7, anchor: "dimension p^4, or p^5 with p odd, forces pointed", imported: false },
    RuleEntry { id: RuleId::R8, anchor: "dimension p^3 forces a pointed adjoint subcategory", imported: false },
    RuleEntry {
        id: RuleId::R9,
        anchor: "square-free |G(C)| forces coprime non-invertible dimensions",
        imported: false,
    },
    RuleEntry { id: RuleId::R12, anchor: "d_X^2 divides dim for every simple X", imported: true },
    RuleEntry {
        id: RuleId::R1,
        anchor: "rank and dimension agree mod 8 for odd-dimensional subcategories",
        imported: false,
    },
    RuleEntry { id: RuleId::R2, anchor: "every grading component rank agrees with rank(C_ad) mod 8", imported: false },
    RuleEntry { id: RuleId::R10, anchor: "p divides rank(C_g) when G(C) is a p-group inside C_ad", imported: false },
    RuleEntry {
        id: RuleId::R1x12,
        anchor: "dim / d_1^2 is congruent to the rank mod 8 (mod-8 rank law with d^2 | dim)",
        imported: false,
    },
    RuleEntry { id: RuleId::Split, anchor: "case split over a finite candidate set", imported: false },
    RuleEntry { id: RuleId::Ord, anchor: "admissible orders of G(C) from the rank bounds", imported: false },
    RuleEntry { id: RuleId::Chain, anchor: "perfect case: descent on the ratios d_j / d_j+1", imported: false },
    RuleEntry { id: RuleId::G3, anchor: "rank 17 with |G(C)| = 3: fixed points of G(C) on C_ad", imported: false },
];

/// Order in which the engine tries the structural rules.
pub const ENGINE_ORDER: &[RuleId] = &[
    RuleId::PT,
    RuleId::GR,
    RuleId::R11,
    RuleId::R4,
    RuleId::R13,
    RuleId::AD,
    RuleId::R3,
    RuleId::R5,
    RuleId::R6,
    RuleId::R7,
    RuleId::R8,
    RuleId::R9,
    RuleId::R12,
    RuleId::R1,
    RuleId::R2,
    RuleId::R10,
];

pub fn entry(id: RuleId) -> &'static RuleEntry {
    CATALOG.iter().find(|e| e.id == id).expect("every rule is registered")
}

/// Trace anchor for a rule; imported rules are marked.
pub fn anchor(id: RuleId) -> String {
    let e = entry(id);
    if e.imported {
        format!("{} [imported]", e.anchor)
    } else {
        e.anchor.to_string()
    }
}

/// A typed refinement of one hypothesis field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Delta {
    Flag(Flag, bool),
    GOrder(Cands<u64>),
    GAdOrder(Cands<u64>),
    RankAd(Cands<u64>),
    Components(Cands<ComponentRanks>),
    Floor(u64),
    Dim(u64),
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Flag(fl, v) => write!(f, "{fl} = {v}"),
            Delta::GOrder(c) => write!(f, "|G| in {c}"),
            Delta::GAdOrder(c) => write!(f, "|G_ad| in {c}"),
            Delta::RankAd(c) => write!(f, "rank_ad in {c}"),
            Delta::Components(c) => write!(f, "components in {c}"),
            Delta::Floor(p) => write!(f, "some nontrivial component has rank >= {p}"),
            Delta::Dim(d) => write!(f, "dim = {d}"),
        }
    }
}

impl Hypothesis {
    /// Applies a delta; `Ok(true)` if anything changed. A conflict or an
    /// emptied candidate set is reported as `Err` with a description.
    pub fn apply(&mut self, d: &Delta) -> Result<bool, String> {
        fn narrow<T: Ord + Clone + fmt::Display>(
            slot: &mut Cands<T>,
            by: &Cands<T>,
            name: &str,
        ) -> Result<bool, String> {
            let next = slot.intersect(by);
            if next.is_empty() {
                return Err(format!("{name} has no remaining candidate ({slot} vs {by})"));
            }
            let changed = next != *slot;
            *slot = next;
            Ok(changed)
        }
        match d {
            Delta::Flag(fl, v) => match self.flag(*fl) {
                Some(cur) if cur == *v => Ok(false),
                Some(_) => Err(format!("{fl} is already {}", !v)),
                None => {
                    self.set_flag(*fl, *v);
                    Ok(true)
                }
            },
            Delta::GOrder(c) => narrow(&mut self.g_order, c, "|G|"),
            Delta::GAdOrder(c) => narrow(&mut self.g_ad_order, c, "|G_ad|"),
            Delta::RankAd(c) => narrow(&mut self.rank_ad, c, "rank_ad"),
            Delta::Components(c) => narrow(&mut self.components, c, "components"),
            Delta::Floor(p) => {
                if self.component_floor.is_none_or(|cur| cur < *p) {
                    self.component_floor = Some(*p);
                    Ok(true)
                } else {
                    Ok(false)
                }
            }
            Delta::Dim(v) => match self.dim {
                Some(cur) if cur == *v => Ok(false),
                Some(cur) => Err(format!("dim is already {cur}")),
                None => {
                    self.dim = Some(*v);
                    Ok(true)
                }
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    Facts { deltas: Vec<Delta>, why: String },
    Refutation { why: String },
    NotApplicable,
}

fn facts(deltas: Vec<Delta>, why: impl Into<String>) -> Outcome {
    Outcome::Facts { deltas, why: why.into() }
}

fn refute(why: impl Into<String>) -> Outcome {
    Outcome::Refutation { why: why.into() }
}

pub fn apply_rule(h: &Hypothesis, id: RuleId) -> Outcome {
    match id {
        RuleId::PT => rule_pt(h),
        RuleId::GR => rule_gr(h),
        RuleId::R1 => rule_r1(h),
        RuleId::R2 => rule_r2(h),
        RuleId::R3 => rule_r3(h),
        RuleId::R4 => rule_r4(h),
        RuleId::R5 => rule_r5(h),
        RuleId::R6 => rule_r6(h),
        RuleId::R7 => rule_r7(h),
        RuleId::R8 => rule_r8(h),
        RuleId::R9 => rule_r9(h),
        RuleId::R10 => rule_r10(h),
        RuleId::R11 => rule_r11(h),
        RuleId::R12 => rule_r12(h),
        RuleId::R13 => rule_r13(h),
        RuleId::AD => rule_ad(h),
        RuleId::R1x12 | RuleId::Split | RuleId::Ord | RuleId::Chain | RuleId::G3 => Outcome::NotApplicable,
    }
}

fn rule_pt(h: &Hypothesis) -> Outcome {
    let Some(rank) = h.rank else { return Outcome::NotApplicable };
    match h.g() {
        Some(g) if g > rank => refute(format!("|G| = {g} exceeds rank {rank}")),
        Some(g) if g == rank => facts(vec![Delta::Flag(Flag::Pointed, true)], format!("|G| = rank = {rank}")),
        Some(g) => facts(vec![Delta::Flag(Flag::Pointed, false)], format!("|G| = {g} < rank {rank}")),
        None if h.has(Flag::Pointed) => facts(vec![Delta::GOrder(Cands::known(rank))], "every simple is invertible"),
        None => Outcome::NotApplicable,
    }
}

fn rule_gr(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let Some(g) = h.g() else { return Outcome::NotApplicable };
    let mut d = vec![Delta::GAdOrder(Cands::from_iter(divisors(g)))];
    if h.has(Flag::Pointed) {
        d.push(Delta::RankAd(Cands::known(1)));
        d.push(Delta::GAdOrder(Cands::known(1)));
    }
    if let (Some(rank), true) = (h.rank, h.lacks(Flag::Pointed)) {
        if g == 1 {
            d.push(Delta::RankAd(Cands::known(rank)));
        } else {
            let lo = h.g_ad_order.set().and_then(|s| s.iter().next().copied()).unwrap_or(1);
            let hi = (rank + 1).saturating_sub(g);
            d.push(Delta::RankAd(Cands::from_iter(lo..=hi)));
        }
    }
    if let Some(gad) = h.g_ad() {
        d.push(Delta::Flag(Flag::CadptTrivial, gad == 1));
        d.push(Delta::Flag(Flag::CptInsideCad, gad == g));
    }
    if h.has(Flag::CptInsideCad) {
        d.push(Delta::GAdOrder(Cands::known(g)));
    }
    match h.flag(Flag::CadptTrivial) {
        Some(true) => d.push(Delta::GAdOrder(Cands::known(1))),
        Some(false) => d.push(Delta::GAdOrder(Cands::from_iter(divisors(g).into_iter().filter(|&v| v != 1)))),
        None => {}
    }
    facts(
        d,
        format!(
            "grading group has order {g}; G(C_ad) is a subgroup; each of the other {} components is nonempty",
            g - 1
        ),
    )
}

fn rule_r11(h: &Hypothesis) -> Outcome {
    let (Some(rank), Some(g)) = (h.rank, h.g()) else { return Outcome::NotApplicable };
    if !(13..=23).contains(&rank) || !h.mnsd || !h.lacks(Flag::Pointed) || !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    if g > 1 {
        facts(
            vec![
                Delta::Flag(Flag::CadptTrivial, false),
                Delta::GAdOrder(Cands::from_iter(divisors(g).into_iter().filter(|&v| v != 1))),
            ],
            format!("G(C) nontrivial (order {g}), so G(C_ad) is nontrivial"),
        )
    } else {
        facts(vec![Delta::Flag(Flag::CadptTrivial, true), Delta::GAdOrder(Cands::known(1))], "G(C) trivial")
    }
}

fn rule_r4(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::CadptTrivial) || !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let (Some(rank), Some(g)) = (h.rank, h.g()) else { return Outcome::NotApplicable };
    if rank % g != 0 {
        let extra = if is_prime(rank) { "; prime rank leaves only pointed or trivial C_pt" } else { "" };
        return refute(format!("|G| = {g} does not divide rank {rank}{extra}"));
    }
    facts(vec![Delta::RankAd(Cands::known(rank / g))], format!("rank_ad = {rank}/{g}"))
}

fn rule_r13(h: &Hypothesis) -> Outcome {
    if !h.mnsd {
        return Outcome::NotApplicable;
    }
    let odd = |v: &u64| v % 2 == 1;
    let d = vec![
        Delta::GOrder(h.g_order.retain(odd)),
        Delta::GAdOrder(h.g_ad_order.retain(odd)),
        Delta::RankAd(h.rank_ad.retain(odd)),
    ];
    facts(d, "C_pt, C_ad(C_pt) and C_ad are MNSD subcategories, so their ranks are odd")
}

fn rule_ad(h: &Hypothesis) -> Outcome {
    if !h.lacks(Flag::Pointed) || !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let Some(gad) = h.g_ad() else { return Outcome::NotApplicable };
    if h.rank_ad.set().is_none() {
        return Outcome::NotApplicable;
    }
    let why = if is_square_free(gad) {
        format!(
            "a pointed C_ad would make each X outside it satisfy d_X^2 = |G[X]| dividing the square-free {gad}, so X would be invertible"
        )
    } else if let Some((p, 2)) = prime_power_base(gad) {
        format!(
            "a pointed C_ad of order {gad} forces d_X = {p} and G[X] = G(C_ad) for every non-invertible X outside C_ad; the stabilizer intersection is then all of G(C_ad), contradicting isotropy"
        )
    } else {
        return Outcome::NotApplicable;
    };
    facts(vec![Delta::RankAd(h.rank_ad.retain(|&v| v >= gad + 2))], format!("rank_ad >= {}: {why}", gad + 2))
}

fn largest_odd_prime(n: u64) -> Option<u64> {
    factorize(n).into_iter().map(|(p, _)| p).filter(|&p| p % 2 == 1).max()
}

fn rule_r3(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::Modular) || !h.lacks(Flag::Pointed) {
        return Outcome::NotApplicable;
    }
    let (Some(rank), Some(g), Some(gad)) = (h.rank, h.g(), h.g_ad()) else { return Outcome::NotApplicable };
    let Some(p) = largest_odd_prime(gad) else { return Outcome::NotApplicable };
    let bound = (rank + 3) as i64 - g as i64 - 2 * p as i64;
    facts(
        vec![Delta::RankAd(h.rank_ad.retain(|&v| (v as i64) <= bound)), Delta::Floor(p)],
        format!("p = {p} divides |G_ad| = {gad}: some component holds at least {p} non-invertibles, so rank_ad <= {rank} - {g} - 2*{p} + 3 = {bound}"),
    )
}

fn rule_r5(h: &Hypothesis) -> Outcome {
    let from_flag = h.flags.iter().find_map(|(f, v)| match (f, v) {
        (Flag::CdInOneUnionPZ(p), true) => Some(*p),
        _ => None,
    });
    let from_dim = h.dim.and_then(prime_power_base).map(|(p, _)| p);
    let Some(p) = from_flag.or(from_dim) else { return Outcome::NotApplicable };
    if h.g_ad_order.set().is_none() {
        return Outcome::NotApplicable;
    }
    let is_p_power = |v: u64| v > 1 && prime_power_base(v).is_some_and(|(q, _)| q == p);
    if let Some(g) = h.g() {
        if is_square_free(g) {
            return facts(
                vec![Delta::GAdOrder(h.g_ad_order.retain(|&v| !is_p_power(v)))],
                format!("G(C) of square-free order {g} is cyclic, so G(C_ad) is not a nontrivial {p}-group"),
            );
        }
    }
    facts(
        vec![Delta::GAdOrder(h.g_ad_order.retain(|&v| v != p))],
        format!("a nontrivial {p}-group G(C_ad) is not cyclic, so its order is not {p}"),
    )
}

fn rule_r6(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::Integral) || !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let Some(dim) = h.dim else { return Outcome::NotApplicable };
    if h.g_order.set().is_none() {
        return Outcome::NotApplicable;
    }
    let bad = |o: u64| dim % o == 0 && prime_power_base(dim / o).is_some_and(|(p, e)| e == 2 && dim % p == 0);
    facts(vec![Delta::GOrder(h.g_order.retain(|&o| !bad(o)))], format!("FPdim(C_ad) = {dim}/|G| is not a prime square"))
}

fn rule_r7(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::Integral) || !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let Some(dim) = h.dim else { return Outcome::NotApplicable };
    let forced = match prime_power_base(dim) {
        Some((_, 4)) => true,
        Some((p, 5)) => p % 2 == 1,
        _ => false,
    };
    if !forced {
        return Outcome::NotApplicable;
    }
    if let Some(rank) = h.rank {
        if rank != dim {
            return refute(format!("dim {dim} forces pointed, but rank {rank} != dim"));
        }
    }
    facts(vec![Delta::Flag(Flag::Pointed, true)], format!("dim = {dim}"))
}

fn rule_r8(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::Integral) || !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let Some(dim) = h.dim else { return Outcome::NotApplicable };
    let mut d = Vec::new();
    let mut why = Vec::new();
    if let Some((p, 3)) = prime_power_base(dim) {
        d.push(Delta::Flag(Flag::CadPointed, true));
        why.push(format!("dim = {p}^3"));
    }
    if let Some(g) = h.g() {
        if dim % g == 0 {
            if let Some((p, 3)) = prime_power_base(dim / g) {
                d.push(Delta::GAdOrder(Cands::from_iter([p * p, p * p * p])));
                why.push(format!("FPdim(C_ad) = {p}^3"));
            }
        }
    }
    if d.is_empty() {
        Outcome::NotApplicable
    } else {
        facts(d, why.join("; "))
    }
}

fn rule_r9(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let Some(g) = h.g() else { return Outcome::NotApplicable };
    if !is_square_free(g) {
        return Outcome::NotApplicable;
    }
    match &h.dims {
        Some(dims) if !dims.is_empty() => {
            let gcd = dims.iter().fold(0u64, |acc, &d| num_integer::gcd(acc, d));
            if gcd != 1 {
                refute(format!("|G| = {g} is square-free but the non-invertible dimensions share the factor {gcd}"))
            } else {
                facts(vec![Delta::Flag(Flag::GcdOne, true)], format!("|G| = {g} is square-free"))
            }
        }
        _ => facts(vec![Delta::Flag(Flag::GcdOne, true)], format!("|G| = {g} is square-free")),
    }
}

fn rule_r12(h: &Hypothesis) -> Outcome {
    let Some(dims) = &h.dims else { return Outcome::NotApplicable };
    let mut d = Vec::new();
    let dim = match (h.dim, h.g()) {
        (Some(v), _) => v,
        (None, Some(g)) => {
            let v = g + dims.iter().map(|x| x * x).sum::<u64>();
            d.push(Delta::Dim(v));
            v
        }
        (None, None) => return Outcome::NotApplicable,
    };
    for &x in dims {
        if dim % (x * x) != 0 {
            return refute(format!("{x}^2 does not divide dim {dim}"));
        }
    }
    if let Some(&d1) = dims.iter().max() {
        let l = dim / (d1 * d1);
        if h.has(Flag::OddDim) && l % 2 == 0 {
            return refute(format!("l = {dim}/{d1}^2 = {l} is even"));
        }
    }
    if d.is_empty() {
        return Outcome::NotApplicable;
    }
    facts(d, "dim = |G| + sum of squared non-invertible dimensions; each square divides it")
}

fn rule_r1(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::OddDim) {
        return Outcome::NotApplicable;
    }
    let Some(dim) = h.dim else { return Outcome::NotApplicable };
    if let Some(rank) = h.rank {
        if (dim as i64 - rank as i64).rem_euclid(8) != 0 {
            return refute(format!("dim {dim} and rank {rank} differ mod 8"));
        }
    }
    if let Some(g) = h.g() {
        if dim % g == 0 && h.rank_ad.set().is_some() {
            let ad = dim / g;
            return facts(
                vec![Delta::RankAd(h.rank_ad.retain(|&v| (v as i64 - ad as i64).rem_euclid(8) == 0))],
                format!("C_ad has dimension {ad}, so rank_ad = {ad} mod 8"),
            );
        }
    }
    Outcome::NotApplicable
}

/// Decreasing `parts`-tuples of positive integers `≡ residue (mod 8)`
/// summing to `total`, with the largest part at least `floor`.
pub fn pair_partitions(total: u64, parts: u64, residue: u64, floor: u64) -> Vec<Vec<u64>> {
    fn go(total: u64, parts: u64, residue: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 0 {
            if total == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let first = if residue.is_multiple_of(8) { 8 } else { residue % 8 };
        let mut v = first;
        while v <= max.min(total) {
            // the remaining parts need at least `first` each
            if total - v >= (parts - 1) * first {
                acc.push(v);
                go(total - v, parts - 1, residue, v, acc, out);
                acc.pop();
            }
            v += 8;
        }
    }
    let mut out = Vec::new();
    go(total, parts, residue, total, &mut Vec::new(), &mut out);
    out.retain(|p| p.first().map_or(floor <= 1, |&m| m >= floor));
    out
}

fn rule_r2(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::OddDim) || !h.has(Flag::Modular) || !h.mnsd {
        return Outcome::NotApplicable;
    }
    let (Some(rank), Some(g)) = (h.rank, h.g()) else { return Outcome::NotApplicable };
    let Some(cands) = h.rank_ad.set() else { return Outcome::NotApplicable };
    if g % 2 == 0 {
        return Outcome::NotApplicable;
    }
    let pairs = (g - 1) / 2;
    let floor = h.component_floor.unwrap_or(1);
    let options = |a: u64| -> Vec<ComponentRanks> {
        if a > rank || (rank - a) % 2 == 1 {
            return Vec::new();
        }
        if pairs == 0 {
            return if a == rank { vec![ComponentRanks { identity: a, pairs: vec![] }] } else { Vec::new() };
        }
        pair_partitions((rank - a) / 2, pairs, a % 8, floor)
            .into_iter()
            .map(|p| ComponentRanks { identity: a, pairs: p })
            .collect()
    };
    let mut keep = BTreeSet::new();
    let mut notes = Vec::new();
    for &a in cands {
        let opts = options(a);
        if opts.is_empty() {
            notes.push(format!(
                "rank_ad {a}: no {pairs} pair rank(s) = {a} mod 8 summing to {}",
                (rank.saturating_sub(a)) / 2
            ));
        } else {
            keep.insert(a);
        }
    }
    let mut d = vec![Delta::RankAd(Cands::OneOf(keep.clone()))];
    if keep.len() == 1 {
        let a = *keep.iter().next().expect("one value");
        let opts = options(a);
        let shown: Vec<String> = opts.iter().map(|c| c.to_string()).collect();
        notes.push(format!("rank_ad {a}: components {}", shown.join(" or ")));
        d.push(Delta::Components(Cands::from_iter(opts)));
    }
    if keep.is_empty() {
        let floor_note = if floor > 1 { format!(" (largest pair rank >= {floor})") } else { String::new() };
        return refute(format!("{}{floor_note}", notes.join("; ")));
    }
    facts(d, notes.join("; "))
}

fn rule_r10(h: &Hypothesis) -> Outcome {
    if !h.has(Flag::CptInsideCad) || !h.has(Flag::Modular) {
        return Outcome::NotApplicable;
    }
    let Some(g) = h.g() else { return Outcome::NotApplicable };
    let Some((p, _)) = prime_power_base(g) else { return Outcome::NotApplicable };
    let Some(set) = h.components.set() else { return Outcome::NotApplicable };
    let bad: Vec<String> = set.iter().filter(|c| c.pairs.iter().any(|v| v % p != 0)).map(|c| c.to_string()).collect();
    if bad.len() == set.len() {
        let first = set.iter().next().expect("nonempty");
        let v = first.pairs.iter().find(|v| *v % p != 0).expect("offending pair");
        return refute(format!("components {}: {p} does not divide {v}", bad.join(", ")));
    }
    facts(
        vec![Delta::Components(Cands::OneOf(
            set.iter().filter(|c| c.pairs.iter().all(|v| v % p == 0)).cloned().collect(),
        ))],
        format!("G(C) is a {p}-group inside C_ad, so {p} divides every nontrivial component rank"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(pair_partitions(6, 2, 3, 1), vec![vec![3, 3]]);
        assert!(pair_partitions(6, 2, 3, 5).is_empty());
        assert_eq!(pair_partitions(5, 1, 5, 1), vec![vec![5]]);
        assert!(pair_partitions(4, 1, 5, 1).is_empty());
        assert_eq!(pair_partitions(10, 2, 1, 1), vec![vec![9, 1]]);
        assert_eq!(pair_partitions(0, 0, 3, 1), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn every_rule_has_an_anchor() {
        for id in ENGINE_ORDER {
            assert!(!entry(*id).anchor.is_empty());
        }
        assert!(anchor(RuleId::R12).ends_with("[imported]"));
        assert_eq!("r10".parse::<RuleId>().unwrap(), RuleId::R10);
        assert!("R99".parse::<RuleId>().is_err());
    }
}
