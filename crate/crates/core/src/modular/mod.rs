//! Modular data `(S, θ)` over a fusion ring, with exact verification.

mod checks;
mod io;

pub use checks::{
    centralizer, equal_row_detector, orbit_zero_check, perfect_checks, xi_values, zero_witnesses, OrbitViolation,
    PerfectReport,
};
pub use io::{modular_to_json, parse_modular, parse_modular_with_base, ModularFile, ModularParseError};

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::ring::FusionRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("S has {rows} rows, expected rank {rank}")]
    SRows { rank: usize, rows: usize },
    #[error("row {row} of S has {len} entries, expected rank {rank}")]
    SRowLength { rank: usize, row: usize, len: usize },
    #[error("{got} twists given, expected rank {rank}")]
    Twists { rank: usize, got: usize },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("S entry ({x},{y}) has conductor {found}, data conductor is {expected}")]
    ConductorMismatch { x: usize, y: usize, found: u64, expected: u64 },
    #[error("object {0} is not invertible")]
    NotInvertible(usize),
    #[error("dimension of object {0} is zero")]
    ZeroDimension(usize),
    #[error("object {x} has a nontrivial stabilizer but no zero in its S-row")]
    MissingZeroWitness { x: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularData {
    ring: FusionRing,
    conductor: u64,
    twists: Vec<u64>,
    s: Vec<Vec<Cyclotomic>>,
}

impl ModularData {
    /// Shape checks only; use [`verify_balancing`] for the equations.
    pub fn new(
        ring: FusionRing,
        conductor: u64,
        twists: Vec<i64>,
        s: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, ModularError> {
        let rank = ring.rank();
        if conductor == 0 {
            return Err(ModularError::ZeroConductor);
        }
        if twists.len() != rank {
            return Err(ModularError::Twists { rank, got: twists.len() });
        }
        if s.len() != rank {
            return Err(ModularError::SRows { rank, rows: s.len() });
        }
        for (row, r) in s.iter().enumerate() {
            if r.len() != rank {
                return Err(ModularError::SRowLength { rank, row, len: r.len() });
            }
        }
        let twists = twists.into_iter().map(|t| t.rem_euclid(conductor as i64) as u64).collect();
        Ok(ModularData { ring, conductor, twists, s })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn twist_exponents(&self) -> &[u64] {
        &self.twists
    }

    pub fn theta(&self, x: usize) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.conductor, self.twists[x] as i64)
    }

    pub fn s(&self, x: usize, y: usize) -> &Cyclotomic {
        &self.s[x][y]
    }

    pub fn s_matrix(&self) -> &[Vec<Cyclotomic>] {
        &self.s
    }

    /// `d_X = s_{0,X}`.
    pub fn dim(&self, x: usize) -> &Cyclotomic {
        &self.s[0][x]
    }

    /// Integer dimensions, when every `d_X` is a rational integer.
    pub fn integer_dims(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        (0..self.rank())
            .map(|x| {
                let r = self.dim(x).as_rational()?;
                if r.is_integer() {
                    r.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Same data with every entry embedded in one field `Q(ζ_m)`, `m` the
    /// lcm of the stated conductor and all entry conductors.
    pub fn with_common_conductor(&self) -> ModularData {
        let m = self.s.iter().flatten().fold(self.conductor, |acc, c| acc.lcm(&c.conductor()));
        let factor = m / self.conductor;
        ModularData {
            ring: self.ring.clone(),
            conductor: m,
            twists: self.twists.iter().map(|t| t * factor).collect(),
            s: self.s.iter().map(|row| row.iter().map(|c| c.embed(m)).collect()).collect(),
        }
    }
}

/// Failures of the structural identities and of the balancing equation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BalancingReport {
    /// `θ_0 != 1`.
    pub unit_twist: bool,
    /// Objects whose twist differs from their dual's.
    pub dual_twists: Vec<usize>,
    /// `(X, Y)` with `s_{X,Y} != s_{Y,X}`, listed with `X < Y`.
    pub asymmetric: Vec<(usize, usize)>,
    /// `(X, Y)` where `s_{X,Y} != θ_X⁻¹ θ_Y⁻¹ Σ_Z N^Z_{XY} θ_Z d_Z`.
    pub violations: Vec<(usize, usize)>,
}

impl BalancingReport {
    pub fn is_empty(&self) -> bool {
        !self.unit_twist && self.dual_twists.is_empty() && self.asymmetric.is_empty() && self.violations.is_empty()
    }
}

pub fn verify_balancing(md: &ModularData) -> Result<BalancingReport, ModularError> {
    let r = md.rank();
    let n = md.conductor;
    for x in 0..r {
        for y in 0..r {
            let found = md.s[x][y].conductor();
            if found != n {
                return Err(ModularError::ConductorMismatch { x, y, found, expected: n });
            }
        }
    }
    let mut report = BalancingReport { unit_twist: md.twists[0] != 0, ..Default::default() };
    for x in 0..r {
        if md.twists[x] != md.twists[md.ring.dual(x)] {
            report.dual_twists.push(x);
        }
        for y in x + 1..r {
            if md.s[x][y] != md.s[y][x] {
                report.asymmetric.push((x, y));
            }
        }
    }
    let weighted: Vec<Cyclotomic> = (0..r).map(|z| md.theta(z).mul(md.dim(z))).collect();
    for x in 0..r {
        for y in 0..r {
            let mut acc = Cyclotomic::zero(n);
            for (z, c) in md.ring.product(x, y) {
                acc = acc.add(&weighted[z].scale(&num_rational::BigRational::from_integer(c.into())));
            }
            let e = -((md.twists[x] + md.twists[y]) as i64);
            let rhs = acc.mul(&Cyclotomic::zeta_pow(n, e));
            if rhs != md.s[x][y] {
                report.violations.push((x, y));
            }
        }
    }
    Ok(report)
}

/// Determinant by fraction-free elimination; divisions are exact.
pub fn determinant(m: &[Vec<Cyclotomic>], conductor: u64) -> Cyclotomic {
    let size = m.len();
    if size == 0 {
        return Cyclotomic::one(conductor);
    }
    let mut a: Vec<Vec<Cyclotomic>> = m.to_vec();
    let mut prev = Cyclotomic::one(conductor);
    let mut negate = false;
    for k in 0..size {
        let Some(p) = (k..size).find(|&r| !a[r][k].is_zero()) else {
            return Cyclotomic::zero(conductor);
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        if k + 1 == size {
            break;
        }
        let prev_inv = prev.inverse().expect("previous pivot is nonzero");
        for i in k + 1..size {
            for j in k + 1..size {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.mul(&prev_inv);
            }
            a[i][k] = Cyclotomic::zero(conductor);
        }
        prev = a[k][k].clone();
    }
    let d = a[size - 1][size - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Nondegeneracy of `S`.
pub fn is_modular(md: &ModularData) -> bool {
    !determinant(&md.s, md.conductor).is_zero()
}

/// `S · conj(S)`, which is `dim · I` for modular data with unitary normalisation.
pub fn s_times_conj_s(md: &ModularData) -> Vec<Vec<Cyclotomic>> {
    let r = md.rank();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    (0..r).fold(Cyclotomic::zero(md.conductor), |acc, k| acc.add(&md.s[i][k].mul(&md.s[j][k].conj())))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn pointed_data_balances_and_is_modular() {
        for n in [3, 5, 7, 9, 15] {
            let md = catalog::pointed_modular(n);
            assert!(verify_balancing(&md).unwrap().is_empty(), "Z{n}");
            assert!(is_modular(&md), "Z{n}");
            let p = s_times_conj_s(&md);
            for (i, row) in p.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let want = if i == j { n as i64 } else { 0 };
                    assert_eq!(*v, Cyclotomic::from_int(n, want));
                }
            }
        }
    }

    #[test]
    fn perturbed_twist_breaks_balancing() {
        let md = catalog::pointed_modular(5);
        let mut t: Vec<i64> = md.twist_exponents().iter().map(|&t| t as i64).collect();
        t[1] += 1;
        let bad = ModularData::new(md.ring().clone(), 5, t, md.s_matrix().to_vec()).unwrap();
        let rep = verify_balancing(&bad).unwrap();
        assert!(rep.violations.iter().any(|&(x, _)| x == 1));
    }

    #[test]
    fn all_ones_is_premodular_only() {
        let md = catalog::z3_all_ones();
        assert!(verify_balancing(&md).unwrap().is_empty());
        assert!(!is_modular(&md));
    }

    #[test]
    fn ising_balances() {
        let md = catalog::ising_modular();
        assert!(verify_balancing(&md).unwrap().is_empty());
        assert!(is_modular(&md));
    }

    #[test]
    fn mismatched_conductor_is_an_error() {
        let md = catalog::pointed_modular(3);
        let mut s = md.s_matrix().to_vec();
        s[1][1] = s[1][1].embed(9);
        let bad = ModularData::new(md.ring().clone(), 3, vec![0, 1, 1], s).unwrap();
        assert!(matches!(verify_balancing(&bad), Err(ModularError::ConductorMismatch { x: 1, y: 1, .. })));
        assert!(verify_balancing(&bad.with_common_conductor()).unwrap().is_empty());
    }

    #[test]
    fn restricted_subring_is_degenerate() {
        let md = catalog::pointed_modular(9);
        let members = [0usize, 3, 6];
        let s: Vec<Vec<Cyclotomic>> =
            members.iter().map(|&i| members.iter().map(|&j| md.s(i, j).clone()).collect()).collect();
        assert!(s.iter().flatten().all(Cyclotomic::is_one));
        assert!(determinant(&s, 9).is_zero());
    }
}
