//! Frobenius–Perron dimensions.
//!
//! The dimension vector is the Perron eigenvector of the (strictly positive)
//! matrix of multiplication by the regular element, normalised at the unit.
//! An approximate eigenvector is rounded and checked exactly over the
//! integers first; otherwise each `FPdim(X_i)` is enclosed with
//! Collatz–Wielandt bounds `min_j (L_i x)_j / x_j <= ρ(L_i) <= max_j (...)`,
//! evaluated in exact rationals for a positive rational vector `x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use super::FusionRing;

pub const WIDTH_TARGET: f64 = 1e-9;
pub const ITERATION_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimError {
    #[error("dimension enclosure did not reach width 1e-9 within {0} iterations")]
    CertificationFailure(usize),
}

/// Closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(v: BigRational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        // Both operands are positive here.
        Interval { lo: &self.lo * &other.lo, hi: &self.hi * &other.hi }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimValue {
    Exact(u64),
    Interval(Interval),
}

impl DimValue {
    pub fn as_exact(&self) -> Option<u64> {
        match self {
            DimValue::Exact(v) => Some(*v),
            DimValue::Interval(_) => None,
        }
    }

    pub fn to_interval(&self) -> Interval {
        match self {
            DimValue::Exact(v) => Interval::point(BigRational::from_integer(BigInt::from(*v))),
            DimValue::Interval(iv) => iv.clone(),
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            DimValue::Exact(v) => *v as f64,
            DimValue::Interval(iv) => iv.midpoint_f64(),
        }
    }

    fn same_value(&self, other: &DimValue) -> bool {
        match (self, other) {
            (DimValue::Exact(a), DimValue::Exact(b)) => a == b,
            _ => self.to_interval().overlaps(&other.to_interval()),
        }
    }
}

impl Serialize for DimValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            DimValue::Exact(v) => s.serialize_u64(*v),
            DimValue::Interval(iv) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("lo", &iv.lo.to_string())?;
                m.serialize_entry("hi", &iv.hi.to_string())?;
                m.end()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FpDims {
    pub dims: Vec<DimValue>,
    pub total_dim: DimValue,
    pub integral: bool,
    /// Distinct dimension values; exact ones first in increasing order,
    /// then enclosures by lower endpoint. Overlapping enclosures count once.
    pub cd_set: Vec<DimValue>,
}

impl FpDims {
    pub fn exact(&self) -> Option<Vec<u64>> {
        self.dims.iter().map(DimValue::as_exact).collect()
    }
}

pub fn fp_dims(ring: &FusionRing) -> Result<FpDims, DimError> {
    let r = ring.rank();
    let regular = regular_matrix(ring);
    let (approx, mut iterations) = float_power_iteration(&regular);

    if let Some(exact) = integer_candidate(ring, &approx) {
        let total = exact.iter().map(|d| d * d).sum();
        return Ok(assemble(exact.into_iter().map(DimValue::Exact).collect(), Some(total)));
    }

    let width_target = rational_from_f64(WIDTH_TARGET);
    let mut x: Vec<BigRational> = approx.iter().map(|&v| rational_from_f64(v)).collect();
    loop {
        let mut dims: Vec<DimValue> = Vec::with_capacity(r);
        let mut wide = false;
        for i in 0..r {
            let d = ring.dual(i);
            if d < i {
                dims.push(dims[d].clone());
                continue;
            }
            if ring.is_invertible(i) {
                dims.push(DimValue::Exact(1));
                continue;
            }
            let iv = collatz_wielandt(ring, i, &x);
            if iv.width() > width_target {
                wide = true;
            }
            dims.push(DimValue::Interval(iv));
        }
        if !wide {
            return Ok(assemble(dims, None));
        }
        if iterations >= ITERATION_CAP {
            return Err(DimError::CertificationFailure(ITERATION_CAP));
        }
        x = rational_power_step(&regular, &x);
        iterations += 1;
    }
}

fn assemble(dims: Vec<DimValue>, exact_total: Option<u64>) -> FpDims {
    let integral = dims.iter().all(|d| d.as_exact().is_some());
    let total_dim = match exact_total {
        Some(t) => DimValue::Exact(t),
        None => {
            let mut acc = Interval::point(BigRational::zero());
            for d in &dims {
                let iv = d.to_interval();
                acc = acc.add(&iv.mul(&iv));
            }
            DimValue::Interval(acc)
        }
    };
    let mut cd_set: Vec<DimValue> = Vec::new();
    for d in &dims {
        if !cd_set.iter().any(|c| c.same_value(d)) {
            cd_set.push(d.clone());
        }
    }
    cd_set.sort_by(|a, b| match (a, b) {
        (DimValue::Exact(x), DimValue::Exact(y)) => x.cmp(y),
        (DimValue::Exact(_), DimValue::Interval(_)) => std::cmp::Ordering::Less,
        (DimValue::Interval(_), DimValue::Exact(_)) => std::cmp::Ordering::Greater,
        (DimValue::Interval(x), DimValue::Interval(y)) => x.lo.cmp(&y.lo),
    });
    FpDims { dims, total_dim, integral, cd_set }
}

/// Entry `(j, k)` is `Σ_i N^k_{ij}`; `d` is its eigenvector for `Σ_i d_i`.
fn regular_matrix(ring: &FusionRing) -> Vec<Vec<u64>> {
    let r = ring.rank();
    let mut m = vec![vec![0u64; r]; r];
    for e in ring.entries() {
        m[e.j][e.k] += e.n as u64;
    }
    m
}

fn float_power_iteration(m: &[Vec<u64>]) -> (Vec<f64>, usize) {
    let r = m.len();
    let mut x = vec![1.0f64; r];
    let mut iterations = 0;
    while iterations < 10_000 {
        let mut y: Vec<f64> = m.iter().map(|row| row.iter().zip(&x).map(|(&a, &b)| a as f64 * b).sum()).collect();
        let scale = y[0];
        for v in &mut y {
            *v /= scale;
        }
        iterations += 1;
        let delta = x.iter().zip(&y).map(|(a, b)| ((a - b) / b).abs()).fold(0.0, f64::max);
        x = y;
        if delta < 1e-15 {
            break;
        }
    }
    (x, iterations)
}

fn integer_candidate(ring: &FusionRing, approx: &[f64]) -> Option<Vec<u64>> {
    let cand: Vec<u64> =
        approx.iter().map(|&v| if v.is_finite() && (0.5..1e15).contains(&v) { v.round() as u64 } else { 0 }).collect();
    if cand.contains(&0) || cand[0] != 1 {
        return None;
    }
    let r = ring.rank();
    for i in 0..r {
        for j in 0..r {
            let rhs: u128 = ring.product(i, j).map(|(k, n)| n as u128 * cand[k] as u128).sum();
            if cand[i] as u128 * cand[j] as u128 != rhs {
                return None;
            }
        }
    }
    Some(cand)
}

fn collatz_wielandt(ring: &FusionRing, i: usize, x: &[BigRational]) -> Interval {
    let r = ring.rank();
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for j in 0..r {
        let mut s = BigRational::zero();
        for (k, n) in ring.product(i, j) {
            s += &x[k] * BigRational::from_integer(BigInt::from(n));
        }
        let q = s / &x[j];
        if lo.as_ref().is_none_or(|l| &q < l) {
            lo = Some(q.clone());
        }
        if hi.as_ref().is_none_or(|h| &q > h) {
            hi = Some(q);
        }
    }
    Interval { lo: lo.expect("rank >= 1"), hi: hi.expect("rank >= 1") }
}

/// One power step in exact arithmetic, rounded to a dyadic grid so the
/// denominators stay bounded. Positivity is preserved since the matrix is
/// strictly positive.
fn rational_power_step(m: &[Vec<u64>], x: &[BigRational]) -> Vec<BigRational> {
    let grid = BigInt::one() << 96u32;
    let y: Vec<BigRational> = m
        .iter()
        .map(|row| row.iter().zip(x).map(|(&a, b)| b * BigRational::from_integer(BigInt::from(a))).sum())
        .collect();
    let scale = y[0].clone();
    y.into_iter()
        .map(|v| {
            let scaled = (v / &scale) * BigRational::from_integer(grid.clone());
            let rounded = scaled.round().to_integer();
            let rounded = if rounded.is_positive() { rounded } else { BigInt::one() };
            BigRational::new(rounded, grid.clone())
        })
        .collect()
}

fn rational_from_f64(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite float")
}
