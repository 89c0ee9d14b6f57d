//! Structural consequences of modularity checked against concrete data.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use super::{is_modular, ModularData, ModularError};
use crate::cyclotomic::Cyclotomic;
use crate::lattice::{generated_subring, stabilizer, Subring};

/// `{Y : s_{X,Y} = d_X d_Y for all X in k}`.
pub fn centralizer(md: &ModularData, k: &Subring) -> Subring {
    let members = (0..md.rank()).filter(|&y| k.members().iter().all(|&x| *md.s(x, y) == md.dim(x).mul(md.dim(y))));
    Subring::from_members(members)
}

/// `ξ_g(X) = s_{g,X} / d_X`.
pub fn xi_values(md: &ModularData, g: usize) -> Result<Vec<Cyclotomic>, ModularError> {
    if !md.ring().is_invertible(g) {
        return Err(ModularError::NotInvertible(g));
    }
    (0..md.rank()).map(|x| md.s(g, x).div(md.dim(x)).ok_or(ModularError::ZeroDimension(x))).collect()
}

/// For each `X` with a nontrivial stabilizer, the first `Y` with `s_{X,Y} = 0`.
pub fn zero_witnesses(md: &ModularData) -> Result<BTreeMap<usize, usize>, ModularError> {
    let mut out = BTreeMap::new();
    for x in 0..md.rank() {
        if stabilizer(md.ring(), x).len() <= 1 {
            continue;
        }
        match (0..md.rank()).find(|&y| md.s(x, y).is_zero()) {
            Some(y) => {
                out.insert(x, y);
            }
            None => return Err(ModularError::MissingZeroWitness { x }),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitViolation {
    pub x: usize,
    pub z: usize,
    pub h: usize,
}

/// Pairs `(X, Z)` with `s_{X,Z} = 0` whose zero does not survive translating
/// `X` by some invertible `h`.
pub fn orbit_zero_check(md: &ModularData) -> Vec<OrbitViolation> {
    let ring = md.ring();
    let inv = ring.invertibles();
    let mut out = Vec::new();
    for x in 0..md.rank() {
        for z in 0..md.rank() {
            if !md.s(x, z).is_zero() {
                continue;
            }
            for &h in &inv {
                let hx = ring.translate(h, x).expect("invertible translate is simple");
                if !md.s(hx, z).is_zero() {
                    out.push(OrbitViolation { x, z, h });
                }
            }
        }
    }
    out
}

/// Unordered pairs `i < j` whose S-rows coincide.
pub fn equal_row_detector(md: &ModularData) -> Vec<(usize, usize)> {
    let r = md.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            if (0..r).all(|k| md.s(i, k) == md.s(j, k)) {
                out.push((i, j));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PerfectReport {
    NotApplicable {
        reason: String,
    },
    Checked {
        /// Nontrivial single-generator subrings contained in their centralizer.
        symmetric: Vec<Subring>,
        /// Subrings meeting their centralizer beyond the unit.
        degenerate: Vec<Subring>,
        /// `(X, Y)` with coprime integer dimensions and `s_{X,Y} ∉ {0, d_X d_Y}`.
        coprime_entries: Vec<(usize, usize)>,
    },
}

impl PerfectReport {
    pub fn is_clean(&self) -> bool {
        match self {
            PerfectReport::NotApplicable { .. } => true,
            PerfectReport::Checked { symmetric, degenerate, coprime_entries } => {
                symmetric.is_empty() && degenerate.is_empty() && coprime_entries.is_empty()
            }
        }
    }
}

/// Consequences of having no nontrivial invertibles and odd dimension. With
/// `bypass` the preconditions are skipped so the checks can run on any data.
pub fn perfect_checks(md: &ModularData, bypass: bool) -> PerfectReport {
    let ring = md.ring();
    if !bypass {
        if !is_modular(md) {
            return PerfectReport::NotApplicable { reason: "S is degenerate".into() };
        }
        if ring.invertibles().len() > 1 {
            return PerfectReport::NotApplicable { reason: "nontrivial invertible objects".into() };
        }
        let odd_total = md.integer_dims().map(|d| d.iter().map(|v| v * v).sum::<i64>() % 2 == 1);
        if odd_total != Some(true) {
            return PerfectReport::NotApplicable { reason: "total dimension is not an odd integer".into() };
        }
    }
    let mut subrings: Vec<Subring> = (1..ring.rank()).map(|x| generated_subring(ring, &[x])).collect();
    subrings.sort();
    subrings.dedup();
    let mut symmetric = Vec::new();
    let mut degenerate = Vec::new();
    for k in subrings {
        let kc = centralizer(md, &k);
        if k.is_subset(&kc) {
            symmetric.push(k.clone());
        }
        if !k.intersect(&kc).is_trivial() {
            degenerate.push(k);
        }
    }
    let mut coprime_entries = Vec::new();
    if let Some(d) = md.integer_dims() {
        for x in 0..ring.rank() {
            for y in 0..ring.rank() {
                if d[x].gcd(&d[y]) != 1 {
                    continue;
                }
                let s = md.s(x, y);
                let full = Cyclotomic::from_int(md.conductor(), d[x] * d[y]);
                if !s.is_zero() && *s != full {
                    coprime_entries.push((x, y));
                }
            }
        }
    }
    PerfectReport::Checked { symmetric, degenerate, coprime_entries }
}
