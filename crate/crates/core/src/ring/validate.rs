use std::fmt;

use serde::Serialize;

use super::FusionRing;

/// A violated axiom with the index tuple that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum Violation {
    /// `dual(0) != 0`.
    DualUnit { dual: usize },
    /// `dual(dual(i)) != i`.
    DualInvolution { i: usize },
    /// `N^k_{0j}` or `N^k_{j0}` differs from `δ_{jk}`.
    Unit { i: usize, j: usize, k: usize },
    /// `N^0_{ij} != δ_{j,dual(i)}`.
    Duality { i: usize, j: usize, k: usize },
    /// `N^k_{ij} != N^{k*}_{j*i*}`.
    DualReversal { i: usize, j: usize, k: usize },
    /// `N^k_{ij} != N^{i*}_{j k*}`.
    DualRotation { i: usize, j: usize, k: usize },
    /// `(i⊗j)⊗k` and `i⊗(j⊗k)` disagree at `l`.
    Associativity { i: usize, j: usize, k: usize, l: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::DualUnit { dual } => write!(f, "dual of the unit is {dual}, expected 0"),
            Violation::DualInvolution { i } => write!(f, "dual is not an involution at {i}"),
            Violation::Unit { i, j, k } => write!(f, "unit axiom violated at ({i},{j},{k})"),
            Violation::Duality { i, j, k } => write!(f, "duality axiom violated at ({i},{j},{k})"),
            Violation::DualReversal { i, j, k } => {
                write!(f, "dual symmetry N^k_ij = N^k*_j*i* violated at ({i},{j},{k})")
            }
            Violation::DualRotation { i, j, k } => {
                write!(f, "dual symmetry N^k_ij = N^i*_jk* violated at ({i},{j},{k})")
            }
            Violation::Associativity { i, j, k, l } => {
                write!(f, "associativity violated at ({i},{j},{k},{l})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every fusion-ring axiom exhaustively. Witnesses are listed in
/// axiom order, then lexicographically by index tuple.
pub fn validate_fusion_ring(ring: &FusionRing) -> ValidationReport {
    let r = ring.rank();
    let d = |i: usize| ring.dual(i);
    let mut out = Vec::new();

    if d(0) != 0 {
        out.push(Violation::DualUnit { dual: d(0) });
    }
    for i in 0..r {
        if d(d(i)) != i {
            out.push(Violation::DualInvolution { i });
        }
    }
    for j in 0..r {
        for k in 0..r {
            let want = u32::from(j == k);
            if ring.n(0, j, k) != want {
                out.push(Violation::Unit { i: 0, j, k });
            }
            if j != 0 && ring.n(j, 0, k) != want {
                out.push(Violation::Unit { i: j, j: 0, k });
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            if ring.n(i, j, 0) != u32::from(j == d(i)) {
                out.push(Violation::Duality { i, j, k: 0 });
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let n = ring.n(i, j, k);
                if n != ring.n(d(j), d(i), d(k)) {
                    out.push(Violation::DualReversal { i, j, k });
                }
                if n != ring.n(j, d(k), d(i)) {
                    out.push(Violation::DualRotation { i, j, k });
                }
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            let ij: Vec<(usize, u32)> = ring.product(i, j).collect();
            for k in 0..r {
                let jk: Vec<(usize, u32)> = ring.product(j, k).collect();
                for l in 0..r {
                    let lhs: u64 = ij.iter().map(|&(m, a)| a as u64 * ring.n(m, k, l) as u64).sum();
                    let rhs: u64 = jk.iter().map(|&(m, a)| a as u64 * ring.n(i, m, l) as u64).sum();
                    if lhs != rhs {
                        out.push(Violation::Associativity { i, j, k, l });
                    }
                }
            }
        }
    }
    ValidationReport { violations: out }
}
