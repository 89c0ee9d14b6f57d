//! Fusion rings: a basis of simple objects with nonnegative structure
//! constants `N^k_{ij}` and a duality involution. Object 0 is the unit.

mod dims;
mod io;
mod validate;

pub use dims::{fp_dims, DimError, DimValue, FpDims, Interval};
pub(crate) use io::write_ring_object;
pub use io::{parse_ring, ring_to_json, ParseError, RingFile};
pub use validate::{validate_fusion_ring, ValidationReport, Violation};

use std::collections::BTreeMap;

use thiserror::Error;

/// Structural problems that make a ring unrepresentable. Axiom failures are
/// reported by [`validate_fusion_ring`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("rank must be at least 1")]
    EmptyRing,
    #[error("dual has length {got}, expected rank {rank}")]
    DualLength { rank: usize, got: usize },
    #[error("dual is not a permutation: index {0} is hit twice or out of range")]
    DualNotPermutation(usize),
    #[error("coefficient ({i},{j},{k}) is out of range for rank {rank}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, rank: usize },
    #[error("coefficient ({i},{j},{k}) is given twice")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("coefficient ({i},{j},{k}) is zero; absent triples already mean zero")]
    ZeroEntry { i: usize, j: usize, k: usize },
}

/// One nonzero structure constant `N^k_{ij} = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub n: u32,
}

/// Sparse entries in canonical `(i, j, k)` order with a dense lookup table
/// alongside for the hot loops (associativity, power iteration).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    dual: Vec<usize>,
    entries: Vec<Entry>,
    table: Vec<u32>,
}

impl FusionRing {
    pub fn new(
        rank: usize,
        dual: Vec<usize>,
        entries: impl IntoIterator<Item = (usize, usize, usize, u32)>,
    ) -> Result<Self, RingError> {
        if rank == 0 {
            return Err(RingError::EmptyRing);
        }
        if dual.len() != rank {
            return Err(RingError::DualLength { rank, got: dual.len() });
        }
        let mut seen = vec![false; rank];
        for &d in &dual {
            if d >= rank || seen[d] {
                return Err(RingError::DualNotPermutation(d));
            }
            seen[d] = true;
        }
        let mut map = BTreeMap::new();
        for (i, j, k, n) in entries {
            if i >= rank || j >= rank || k >= rank {
                return Err(RingError::IndexOutOfRange { i, j, k, rank });
            }
            if n == 0 {
                return Err(RingError::ZeroEntry { i, j, k });
            }
            if map.insert((i, j, k), n).is_some() {
                return Err(RingError::DuplicateEntry { i, j, k });
            }
        }
        let mut table = vec![0u32; rank * rank * rank];
        let entries: Vec<Entry> = map
            .into_iter()
            .map(|((i, j, k), n)| {
                table[(i * rank + j) * rank + k] = n;
                Entry { i, j, k, n }
            })
            .collect();
        Ok(FusionRing { rank, dual, entries, table })
    }

    /// Builds a ring from a coefficient function; zero values are skipped.
    pub fn from_fn(
        rank: usize,
        dual: Vec<usize>,
        mut n: impl FnMut(usize, usize, usize) -> u32,
    ) -> Result<Self, RingError> {
        let mut entries = Vec::new();
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    let v = n(i, j, k);
                    if v > 0 {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        FusionRing::new(rank, dual, entries)
    }

    /// Group ring of `Z_{n1} x ... x Z_{nt}`; element `(a_1..a_t)` gets the
    /// mixed-radix index with the first factor most significant.
    pub fn group_ring(factors: &[usize]) -> Self {
        let order: usize = factors.iter().product();
        let decode = |mut x: usize| {
            let mut digits = vec![0; factors.len()];
            for (slot, &f) in digits.iter_mut().zip(factors).rev() {
                *slot = x % f;
                x /= f;
            }
            digits
        };
        let encode = |digits: &[usize]| digits.iter().zip(factors).fold(0, |acc, (&d, &f)| acc * f + d);
        let dual = (0..order)
            .map(|x| {
                let d: Vec<usize> = decode(x).iter().zip(factors).map(|(&a, &f)| (f - a) % f).collect();
                encode(&d)
            })
            .collect();
        let entries = (0..order).flat_map(|i| {
            (0..order).map(move |j| {
                let s: Vec<usize> =
                    decode(i).iter().zip(decode(j)).zip(factors).map(|((&a, b), &f)| (a + b) % f).collect();
                (i, j, encode(&s), 1)
            })
        });
        FusionRing::new(order, dual, entries.collect::<Vec<_>>()).expect("group ring is well formed")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// `N^k_{ij}`.
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.table[(i * self.rank + j) * self.rank + k]
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Nonzero constituents of `i ⊗ j` as `(k, N^k_{ij})`.
    pub fn product(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let base = (i * self.rank + j) * self.rank;
        self.table[base..base + self.rank].iter().enumerate().filter(|(_, &n)| n > 0).map(|(k, &n)| (k, n))
    }

    /// `i ⊗ i*` is the unit alone.
    pub fn is_invertible(&self, i: usize) -> bool {
        self.product(i, self.dual[i]).map(|(_, n)| n as u64).sum::<u64>() == 1
    }

    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.is_invertible(i)).collect()
    }

    /// For invertible `g`, the unique simple `g ⊗ x`.
    pub fn translate(&self, g: usize, x: usize) -> Option<usize> {
        let mut it = self.product(g, x);
        match (it.next(), it.next()) {
            (Some((k, 1)), None) => Some(k),
            _ => None,
        }
    }

    /// The unit is the only self-dual simple object.
    pub fn is_mnsd(&self) -> bool {
        (1..self.rank).all(|i| self.dual[i] != i) && self.dual[0] == 0
    }

    /// Ring on `a.rank * b.rank` objects; pair `(i, i')` has index `i * b.rank + i'`.
    pub fn deligne_product(a: &FusionRing, b: &FusionRing) -> FusionRing {
        let rb = b.rank;
        let rank = a.rank * rb;
        let dual = (0..rank).map(|x| a.dual[x / rb] * rb + b.dual[x % rb]).collect();
        let mut entries = Vec::new();
        for ea in &a.entries {
            for eb in &b.entries {
                entries.push((ea.i * rb + eb.i, ea.j * rb + eb.j, ea.k * rb + eb.k, ea.n * eb.n));
            }
        }
        FusionRing::new(rank, dual, entries).expect("product of well-formed rings")
    }

    /// Relabels objects: new object `p` is old object `order[p]`. `order` must
    /// be a permutation starting with 0.
    pub fn permute(&self, order: &[usize]) -> Result<FusionRing, RingError> {
        self.restrict(order)
    }

    /// The sub-ring on `members` (in the given order, which becomes the new
    /// indexing). Entries whose target falls outside `members` are dropped,
    /// so the caller should pass a fusion-closed, dual-closed set.
    pub fn restrict(&self, members: &[usize]) -> Result<FusionRing, RingError> {
        let mut pos = vec![usize::MAX; self.rank];
        for (p, &m) in members.iter().enumerate() {
            if m >= self.rank {
                return Err(RingError::IndexOutOfRange { i: m, j: 0, k: 0, rank: self.rank });
            }
            pos[m] = p;
        }
        let mut dual = Vec::with_capacity(members.len());
        for &m in members {
            let d = pos[self.dual[m]];
            if d == usize::MAX {
                return Err(RingError::DualNotPermutation(self.dual[m]));
            }
            dual.push(d);
        }
        let entries: Vec<_> = self
            .entries
            .iter()
            .filter(|e| pos[e.i] != usize::MAX && pos[e.j] != usize::MAX && pos[e.k] != usize::MAX)
            .map(|e| (pos[e.i], pos[e.j], pos[e.k], e.n))
            .collect();
        FusionRing::new(members.len(), dual, entries)
    }

    /// Ordering that puts each non-self-dual pair on adjacent indices
    /// `(2i-1, 2i)` after the unit and any self-dual objects.
    pub fn paired_order(&self) -> Vec<usize> {
        let mut order = vec![0];
        let mut placed = vec![false; self.rank];
        placed[0] = true;
        for i in 1..self.rank {
            if !placed[i] && self.dual[i] == i {
                order.push(i);
                placed[i] = true;
            }
        }
        for i in 1..self.rank {
            if !placed[i] {
                order.push(i);
                order.push(self.dual[i]);
                placed[i] = true;
                placed[self.dual[i]] = true;
            }
        }
        order
    }

    /// Left multiplication matrix of object `i`: row `j`, column `k` is `N^k_{ij}`.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank).map(|j| (0..self.rank).map(|k| self.n(i, j, k)).collect()).collect()
    }
}
