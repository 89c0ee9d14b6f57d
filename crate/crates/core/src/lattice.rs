//! Named subrings of a fusion ring and the grading structure built on them.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;
use thiserror::Error;

use crate::group::{decompose, AbelianGroup, GroupError};
use crate::ring::{fp_dims, DimError, FpDims, FusionRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("the invertible objects form a nonabelian group")]
    NonabelianInvertibles,
    #[error("the universal grading group is nonabelian")]
    NonabelianGrading,
    #[error("adjoint cosets do not multiply consistently")]
    InconsistentGrading,
    #[error(transparent)]
    Dims(#[from] DimError),
}

/// Sorted set of object indices containing the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Subring {
    members: Vec<usize>,
}

impl Subring {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn rank(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Subring) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    pub fn whole(ring: &FusionRing) -> Self {
        Subring { members: (0..ring.rank()).collect() }
    }

    pub fn unit() -> Self {
        Subring { members: vec![0] }
    }

    pub fn intersect(&self, other: &Subring) -> Subring {
        Subring { members: self.members.iter().copied().filter(|&m| other.contains(m)).collect() }
    }

    /// Whether the set is unit-containing, dual-closed and fusion-closed.
    pub fn is_closed_in(&self, ring: &FusionRing) -> bool {
        self.contains(0)
            && self.members.iter().all(|&i| self.contains(ring.dual(i)))
            && self
                .members
                .iter()
                .all(|&i| self.members.iter().all(|&j| ring.product(i, j).all(|(k, _)| self.contains(k))))
    }

    /// Subring from an explicit member list; the caller vouches for closure.
    pub fn from_members(members: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = members.into_iter().collect();
        Subring { members: set.into_iter().collect() }
    }
}

impl std::fmt::Display for Subring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Smallest subring containing `seed` and the unit.
pub fn generated_subring(ring: &FusionRing, seed: &[usize]) -> Subring {
    let mut inside = vec![false; ring.rank()];
    inside[0] = true;
    let mut members = vec![0];
    for &s in seed {
        for x in [s, ring.dual(s)] {
            if !inside[x] {
                inside[x] = true;
                members.push(x);
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = members.clone();
        for &i in &snapshot {
            for &j in &snapshot {
                for (k, _) in ring.product(i, j) {
                    if !inside[k] {
                        inside[k] = true;
                        members.push(k);
                        changed = true;
                    }
                }
            }
        }
    }
    Subring::from_members(members)
}

/// Invertible objects and the group they form.
pub fn pointed_subring(ring: &FusionRing) -> Result<(Subring, AbelianGroup), LatticeError> {
    let inv = ring.invertibles();
    let group = invertible_group(ring, &inv)?;
    Ok((Subring::from_members(inv), group))
}

fn invertible_group(ring: &FusionRing, members: &[usize]) -> Result<AbelianGroup, LatticeError> {
    let pos = |x: usize| members.iter().position(|&m| m == x).expect("invertibles are closed");
    let op = |a: usize, b: usize| pos(ring.translate(members[a], members[b]).expect("product of invertibles"));
    match decompose(members.len(), 0, op) {
        Ok(d) => Ok(d.group),
        Err(GroupError::Nonabelian { .. }) => Err(LatticeError::NonabelianInvertibles),
        Err(GroupError::NotAGroup) => Err(LatticeError::NonabelianInvertibles),
    }
}

/// Subring generated by every constituent of every `X ⊗ X*`.
pub fn adjoint_subring(ring: &FusionRing) -> Subring {
    adjoint_of(ring, &Subring::whole(ring))
}

fn adjoint_of(ring: &FusionRing, within: &Subring) -> Subring {
    let mut seed = Vec::new();
    for &x in within.members() {
        for (k, _) in ring.product(x, ring.dual(x)) {
            seed.push(k);
        }
    }
    generated_subring(ring, &seed)
}

/// Faithful grading: `deg[i]` is a coordinate tuple in `group`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub group: AbelianGroup,
    pub deg: Vec<Vec<u64>>,
}

impl Grading {
    /// Objects of each degree, listed in the group's lexicographic element order.
    pub fn components(&self) -> Vec<(Vec<u64>, Vec<usize>)> {
        self.group
            .elements()
            .into_iter()
            .map(|g| {
                let members = (0..self.deg.len()).filter(|&i| self.deg[i] == g).collect();
                (g, members)
            })
            .collect()
    }

    pub fn component_ranks(&self) -> Vec<usize> {
        self.components().into_iter().map(|(_, m)| m.len()).collect()
    }
}

/// Grading by cosets of the adjoint subring.
pub fn universal_grading(ring: &FusionRing) -> Result<Grading, LatticeError> {
    let r = ring.rank();
    let ad = adjoint_subring(ring);
    let mut class = vec![usize::MAX; r];
    let mut reps = Vec::new();
    for x in 0..r {
        if class[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        let mut stack = vec![x];
        class[x] = c;
        while let Some(i) = stack.pop() {
            for &a in ad.members() {
                for (k, _) in ring.product(i, a) {
                    if class[k] == usize::MAX {
                        class[k] = c;
                        stack.push(k);
                    }
                }
            }
        }
    }
    let n = reps.len();
    let mut table = vec![vec![usize::MAX; n]; n];
    for i in 0..r {
        for j in 0..r {
            for (k, _) in ring.product(i, j) {
                let slot = &mut table[class[i]][class[j]];
                if *slot == usize::MAX {
                    *slot = class[k];
                } else if *slot != class[k] {
                    return Err(LatticeError::InconsistentGrading);
                }
            }
        }
    }
    let dec = decompose(n, class[0], |a, b| table[a][b]).map_err(|e| match e {
        GroupError::Nonabelian { .. } => LatticeError::NonabelianGrading,
        GroupError::NotAGroup => LatticeError::InconsistentGrading,
    })?;
    let deg = (0..r).map(|i| dec.coords[class[i]].clone()).collect();
    Ok(Grading { group: dec.group, deg })
}

/// `G[x]`: invertibles `g` with `g ⊗ x = x`.
pub fn stabilizer(ring: &FusionRing, x: usize) -> Vec<usize> {
    ring.invertibles().into_iter().filter(|&g| ring.n(g, x, x) == 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigG {
    pub members: Vec<usize>,
    /// No non-invertible simple object lies outside the adjoint subring, so
    /// the value is `G(C_ad)` by convention.
    pub empty_family: bool,
}

/// Intersection of `G[X]` over non-invertible `X` outside the adjoint subring.
pub fn big_g(ring: &FusionRing) -> BigG {
    let ad = adjoint_subring(ring);
    let g_ad: Vec<usize> = ring.invertibles().into_iter().filter(|&g| ad.contains(g)).collect();
    let scope: Vec<usize> = (0..ring.rank()).filter(|&x| !ring.is_invertible(x) && !ad.contains(x)).collect();
    if scope.is_empty() {
        return BigG { members: g_ad, empty_family: true };
    }
    let mut members = g_ad;
    for x in scope {
        let st = stabilizer(ring, x);
        members.retain(|g| st.contains(g));
    }
    BigG { members, empty_family: false }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralSeries {
    pub terms: Vec<Subring>,
    pub nilpotent: bool,
    /// Number of adjoint steps to reach the unit, when nilpotent.
    pub class: Option<usize>,
}

/// Iterated adjoints starting from the whole ring, stopped once a term
/// repeats or the unit subring is reached.
pub fn upper_central_series(ring: &FusionRing) -> CentralSeries {
    let mut terms = vec![Subring::whole(ring)];
    if terms[0].is_trivial() {
        return CentralSeries { terms, nilpotent: true, class: Some(0) };
    }
    for _ in 0..ring.rank() {
        let prev = terms.last().expect("nonempty");
        let next = adjoint_of(ring, prev);
        let stop = &next == prev || next.is_trivial();
        terms.push(next);
        if stop {
            break;
        }
    }
    let last = terms.last().expect("nonempty");
    let nilpotent = last.is_trivial();
    let class = nilpotent.then(|| terms.len() - 1);
    CentralSeries { terms, nilpotent, class }
}

/// Everything `analyze` prints, in a stable order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub rank: usize,
    pub mnsd: bool,
    pub dims: FpDims,
    pub pointed: Subring,
    pub invertible_group: AbelianGroup,
    pub grading_group: AbelianGroup,
    pub degrees: Vec<Vec<u64>>,
    pub component_ranks: Vec<usize>,
    pub adjoint: Subring,
    pub stabilizers: Vec<Vec<usize>>,
    pub big_g: BigG,
    pub central_series: CentralSeries,
}

pub fn analyze(ring: &FusionRing) -> Result<Analysis, LatticeError> {
    let dims = fp_dims(ring)?;
    let (pointed, invertible_group) = pointed_subring(ring)?;
    let grading = universal_grading(ring)?;
    Ok(Analysis {
        rank: ring.rank(),
        mnsd: ring.is_mnsd(),
        dims,
        pointed,
        invertible_group,
        component_ranks: grading.component_ranks(),
        grading_group: grading.group,
        degrees: grading.deg,
        adjoint: adjoint_subring(ring),
        stabilizers: (0..ring.rank()).map(|x| stabilizer(ring, x)).collect(),
        big_g: big_g(ring),
        central_series: upper_central_series(ring),
    })
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "rank: {}", self.rank);
        let _ = writeln!(out, "mnsd: {}", self.mnsd);
        let _ = writeln!(out, "[dims]");
        for (i, d) in self.dims.dims.iter().enumerate() {
            let _ = writeln!(out, "  {i}: {}", render_dim(d));
        }
        let _ = writeln!(out, "  total: {}", render_dim(&self.dims.total_dim));
        let _ = writeln!(out, "  integral: {}", self.dims.integral);
        let _ = writeln!(out, "[invertibles]");
        let _ = writeln!(out, "  members: {}", self.pointed);
        let _ = writeln!(out, "  group: {}", self.invertible_group);
        let _ = writeln!(out, "[universal grading]");
        let _ = writeln!(out, "  group: {}", self.grading_group);
        let _ = writeln!(out, "  component ranks: {}", list(&self.component_ranks));
        let _ = writeln!(out, "[adjoint]");
        let _ = writeln!(out, "  members: {}", self.adjoint);
        let _ = writeln!(out, "[stabilizers]");
        for (i, s) in self.stabilizers.iter().enumerate() {
            let _ = writeln!(out, "  {i}: {{{}}}", list(s));
        }
        let _ = writeln!(out, "[big G]");
        let _ = writeln!(out, "  members: {{{}}}", list(&self.big_g.members));
        let _ = writeln!(out, "  empty family: {}", self.big_g.empty_family);
        let _ = writeln!(out, "[central series]");
        for t in &self.central_series.terms {
            let _ = writeln!(out, "  {t}");
        }
        match self.central_series.class {
            Some(c) => {
                let _ = writeln!(out, "  nilpotent, class {c}");
            }
            None => {
                let _ = writeln!(out, "  not nilpotent");
            }
        }
        out
    }
}

pub(crate) fn render_dim(d: &crate::ring::DimValue) -> String {
    match d {
        crate::ring::DimValue::Exact(v) => v.to_string(),
        crate::ring::DimValue::Interval(iv) => format!("[{}, {}] ~ {:.10}", iv.lo, iv.hi, iv.midpoint_f64()),
    }
}
