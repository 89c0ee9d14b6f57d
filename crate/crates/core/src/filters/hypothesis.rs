use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

/// A value that is either unconstrained or confined to a finite set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cands<T: Ord> {
    Any,
    OneOf(BTreeSet<T>),
}

impl<T: Ord + Clone> Cands<T> {
    pub fn known(v: T) -> Self {
        Cands::OneOf(BTreeSet::from([v]))
    }

    pub fn from_iter(it: impl IntoIterator<Item = T>) -> Self {
        Cands::OneOf(it.into_iter().collect())
    }

    pub fn single(&self) -> Option<&T> {
        match self {
            Cands::OneOf(s) if s.len() == 1 => s.iter().next(),
            _ => None,
        }
    }

    pub fn set(&self) -> Option<&BTreeSet<T>> {
        match self {
            Cands::Any => None,
            Cands::OneOf(s) => Some(s),
        }
    }

    pub fn allows(&self, v: &T) -> bool {
        match self {
            Cands::Any => true,
            Cands::OneOf(s) => s.contains(v),
        }
    }

    pub fn intersect(&self, other: &Cands<T>) -> Cands<T> {
        match (self, other) {
            (Cands::Any, x) | (x, Cands::Any) => x.clone(),
            (Cands::OneOf(a), Cands::OneOf(b)) => Cands::OneOf(a.intersection(b).cloned().collect()),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Cands::OneOf(s) if s.is_empty())
    }

    /// Keeps the candidates satisfying `keep`; `Any` is unchanged.
    pub fn retain(&self, keep: impl Fn(&T) -> bool) -> Cands<T> {
        match self {
            Cands::Any => Cands::Any,
            Cands::OneOf(s) => Cands::OneOf(s.iter().filter(|v| keep(v)).cloned().collect()),
        }
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Cands<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cands::Any => write!(f, "?"),
            Cands::OneOf(s) => {
                let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// Ranks of the universal-grading components: the trivial component, then
/// one value per dual pair `{C_g, C_{-g}}` in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComponentRanks {
    pub identity: u64,
    pub pairs: Vec<u64>,
}

impl ComponentRanks {
    pub fn total(&self) -> u64 {
        self.identity + 2 * self.pairs.iter().sum::<u64>()
    }
}

impl fmt::Display for ComponentRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![self.identity.to_string()];
        for p in &self.pairs {
            parts.push(format!("{p},{p}"));
        }
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Modular,
    Integral,
    /// Every simple object has odd dimension.
    OddDim,
    Pointed,
    /// `C_pt ⊆ C_ad`.
    CptInsideCad,
    /// `G(C_ad)` is trivial.
    CadptTrivial,
    Perfect,
    CadPointed,
    /// The non-invertible dimensions have gcd 1.
    GcdOne,
    /// Every dimension is 1 or divisible by `p`.
    CdInOneUnionPZ(u64),
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flag::Modular => write!(f, "modular"),
            Flag::Integral => write!(f, "integral"),
            Flag::OddDim => write!(f, "odd-dim"),
            Flag::Pointed => write!(f, "pointed"),
            Flag::CptInsideCad => write!(f, "cpt-inside-cad"),
            Flag::CadptTrivial => write!(f, "cadpt-trivial"),
            Flag::Perfect => write!(f, "perfect"),
            Flag::CadPointed => write!(f, "cad-pointed"),
            Flag::GcdOne => write!(f, "gcd-one"),
            Flag::CdInOneUnionPZ(p) => write!(f, "cd-in-1-union-{p}Z"),
        }
    }
}

/// Classification state. Unknown quantities are `None` or `Cands::Any`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hypothesis {
    pub rank: Option<u64>,
    pub mnsd: bool,
    pub dim: Option<u64>,
    pub g_order: Cands<u64>,
    pub g_ad_order: Cands<u64>,
    pub rank_ad: Cands<u64>,
    pub components: Cands<ComponentRanks>,
    /// Some non-trivial component has at least this rank.
    pub component_floor: Option<u64>,
    /// Dimensions of the non-invertible simple objects, decreasing.
    pub dims: Option<Vec<u64>>,
    pub flags: BTreeMap<Flag, bool>,
}

impl Default for Hypothesis {
    fn default() -> Self {
        Hypothesis {
            rank: None,
            mnsd: false,
            dim: None,
            g_order: Cands::Any,
            g_ad_order: Cands::Any,
            rank_ad: Cands::Any,
            components: Cands::Any,
            component_floor: None,
            dims: None,
            flags: BTreeMap::new(),
        }
    }
}

impl Hypothesis {
    /// An MNSD modular category of the given rank; such categories are
    /// integral with odd dimensions.
    pub fn mnsd_modular(rank: u64) -> Self {
        let mut h = Hypothesis { rank: Some(rank), mnsd: true, ..Default::default() };
        h.set_flag(Flag::Modular, true);
        h.set_flag(Flag::Integral, true);
        h.set_flag(Flag::OddDim, true);
        h
    }

    pub fn with_g_order(mut self, g: u64) -> Self {
        self.g_order = Cands::known(g);
        self
    }

    pub fn flag(&self, f: Flag) -> Option<bool> {
        self.flags.get(&f).copied()
    }

    pub fn has(&self, f: Flag) -> bool {
        self.flag(f) == Some(true)
    }

    pub fn lacks(&self, f: Flag) -> bool {
        self.flag(f) == Some(false)
    }

    pub fn set_flag(&mut self, f: Flag, v: bool) {
        self.flags.insert(f, v);
    }

    pub fn g(&self) -> Option<u64> {
        self.g_order.single().copied()
    }

    pub fn g_ad(&self) -> Option<u64> {
        self.g_ad_order.single().copied()
    }

    pub fn rank_ad_known(&self) -> Option<u64> {
        self.rank_ad.single().copied()
    }

    /// One-line summary used in traces and reports.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if let Some(r) = self.rank {
            parts.push(format!("rank={r}"));
        }
        if self.mnsd {
            parts.push("mnsd".to_string());
        }
        if let Some(d) = self.dim {
            parts.push(format!("dim={d}"));
        }
        parts.push(format!("|G|={}", self.g_order));
        parts.push(format!("|G_ad|={}", self.g_ad_order));
        parts.push(format!("rank_ad={}", self.rank_ad));
        if let Cands::OneOf(c) = &self.components {
            let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            parts.push(format!("components={{{}}}", cs.join(",")));
        }
        if let Some(fl) = self.component_floor {
            parts.push(format!("floor={fl}"));
        }
        if let Some(d) = &self.dims {
            let ds: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            parts.push(format!("dims=[{}]", ds.join(",")));
        }
        for (f, v) in &self.flags {
            parts.push(if *v { f.to_string() } else { format!("!{f}") });
        }
        parts.join(" ")
    }
}
