//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is a rational vector over the power basis `1, ζ, …, ζ^{φ(n)-1}`
//! kept reduced modulo the cyclotomic polynomial `Φ_n`. Binary operations on
//! elements of different conductors first embed both into `Q(ζ_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache lock").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().expect("cache lock").insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (t, &b) in den.iter().enumerate() {
            rem[k + t] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

/// Integer numerators over the lcm of the denominators.
fn clear_denominators(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (num, den)
}

fn over(num: Vec<BigInt>, den: &BigInt) -> Vec<BigRational> {
    num.into_iter().map(|c| BigRational::new(c, den.clone())).collect()
}

/// Reduces an integer polynomial modulo the monic `Φ_n` in place and
/// truncates it to `φ(n)` coefficients.
fn reduce_int(n: u64, poly: &mut Vec<BigInt>) {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for k in (deg..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut poly[k]);
        for (t, &b) in phi[..deg].iter().enumerate() {
            match b {
                0 => {}
                1 => poly[k - deg + t] -= &c,
                -1 => poly[k - deg + t] += &c,
                _ => poly[k - deg + t] -= &c * b,
            }
        }
    }
    poly.resize(deg, BigInt::zero());
}

#[derive(Debug, Clone)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        Cyclotomic { n, coeffs: vec![BigRational::zero(); euler_phi(n)] }
    }

    pub fn one(n: u64) -> Self {
        Cyclotomic::from_rational(n, BigRational::one())
    }

    pub fn from_int(n: u64, v: i64) -> Self {
        Cyclotomic::from_rational(n, q(v))
    }

    pub fn from_rational(n: u64, v: BigRational) -> Self {
        let mut z = Cyclotomic::zero(n);
        z.coeffs[0] = v;
        z
    }

    /// `ζ_n^e` for any integer `e`.
    pub fn zeta_pow(n: u64, e: i64) -> Self {
        let e = e.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Cyclotomic::from_poly(n, poly)
    }

    /// Reduces an arbitrary polynomial in `ζ_n` (constant term first).
    pub fn from_poly(n: u64, poly: Vec<BigRational>) -> Self {
        let (mut num, den) = clear_denominators(&poly);
        reduce_int(n, &mut num);
        Cyclotomic { n, coeffs: over(num, &den) }
    }

    /// Coefficients must already number `φ(n)`.
    pub fn from_coeffs(n: u64, coeffs: Vec<BigRational>) -> Option<Self> {
        (coeffs.len() == euler_phi(n)).then_some(Cyclotomic { n, coeffs })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Image under `Q(ζ_n) -> Q(ζ_m)`, `ζ_n ↦ ζ_m^{m/n}`. Requires `n | m`.
    pub fn embed(&self, m: u64) -> Cyclotomic {
        assert!(m.is_multiple_of(self.n), "cannot embed conductor {} into {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut poly = vec![BigRational::zero(); step * self.coeffs.len().max(1)];
        for (e, c) in self.coeffs.iter().enumerate() {
            poly[e * step] = c.clone();
        }
        Cyclotomic::from_poly(m, poly)
    }

    fn unify(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = self.n.lcm(&other.n);
        (self.embed(m), other.embed(m))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.unify(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { n: a.n, coeffs }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.unify(other);
        let (x, dx) = clear_denominators(&a.coeffs);
        let (y, dy) = clear_denominators(&b.coeffs);
        let mut poly = vec![BigInt::zero(); (x.len() * 2).saturating_sub(1).max(1)];
        for (i, u) in x.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (j, v) in y.iter().enumerate() {
                if !v.is_zero() {
                    poly[i + j] += u * v;
                }
            }
        }
        reduce_int(a.n, &mut poly);
        Cyclotomic { n: a.n, coeffs: over(poly, &(dx * dy)) }
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn pow(&self, mut k: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Complex conjugation `ζ^e ↦ ζ^{-e}`.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.n as usize;
        let mut poly = vec![BigRational::zero(); n.max(1)];
        for (e, c) in self.coeffs.iter().enumerate() {
            poly[(n - e) % n] += c;
        }
        Cyclotomic::from_poly(self.n, poly)
    }

    /// Multiplicative inverse by solving `self · y = 1` with fraction-free
    /// elimination on the integer multiplication matrix.
    pub fn inverse(&self) -> Option<Cyclotomic> {
        let d = self.coeffs.len();
        let (a, den) = clear_denominators(&self.coeffs);
        // Column e of the multiplication matrix is a · ζ^e.
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(d);
        let mut col = a;
        for _ in 0..d {
            let mut next = Vec::with_capacity(d + 1);
            next.push(BigInt::zero());
            next.extend(col.iter().cloned());
            cols.push(col);
            reduce_int(self.n, &mut next);
            col = next;
        }
        let mut m: Vec<Vec<BigInt>> = (0..d)
            .map(|row| {
                let mut r: Vec<BigInt> = cols.iter().map(|c| c[row].clone()).collect();
                r.push(if row == 0 { BigInt::one() } else { BigInt::zero() });
                r
            })
            .collect();
        let mut prev = BigInt::one();
        for k in 0..d {
            let pivot = (k..d).find(|&r| !m[r][k].is_zero())?;
            m.swap(k, pivot);
            for i in k + 1..d {
                for j in k + 1..=d {
                    let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let mut y = vec![BigRational::zero(); d];
        for i in (0..d).rev() {
            let mut acc = BigRational::from_integer(m[i][d].clone());
            for j in i + 1..d {
                if !m[i][j].is_zero() {
                    acc -= &y[j] * BigRational::from_integer(m[i][j].clone());
                }
            }
            y[i] = acc / BigRational::from_integer(m[i][i].clone());
        }
        let den = BigRational::from_integer(den);
        Some(Cyclotomic { n: self.n, coeffs: y.into_iter().map(|c| c * &den).collect() })
    }

    pub fn div(&self, other: &Cyclotomic) -> Option<Cyclotomic> {
        Some(self.mul(&other.inverse()?))
    }

    /// Order of `self` as a root of unity, if it is one.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        let big = self.n.lcm(&2);
        if !self.pow(big).is_one() {
            return None;
        }
        (1..=big).filter(|d| big.is_multiple_of(*d)).find(|&d| self.pow(d).is_one())
    }

    /// Numerical value `(re, im)` with `ζ_n = exp(2πi/n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * e as f64 / self.n as f64;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{e}", self.n)?,
                (_, false) => write!(f, "{mag}*z{}^{e}", self.n)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(16), vec![1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(euler_phi(45), 24);
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..=45 {
            let z = Cyclotomic::zeta_pow(n, 1);
            assert!(z.pow(n).is_one());
            assert_eq!(z.root_of_unity_order(), Some(if n == 2 { 2 } else { n }));
        }
    }

    #[test]
    fn sqrt2_in_conductor_8() {
        let z = |e| Cyclotomic::zeta_pow(8, e);
        let s = z(1).sub(&z(3));
        assert_eq!(s.mul(&s), Cyclotomic::from_int(8, 2));
        assert_eq!(s.conj(), s);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Cyclotomic::zeta_pow(15, 2).add(&Cyclotomic::from_int(15, 3));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_one());
        assert!(Cyclotomic::zero(7).inverse().is_none());
    }

    #[test]
    fn mixed_conductors_unify() {
        let a = Cyclotomic::zeta_pow(3, 1);
        let b = Cyclotomic::zeta_pow(5, 1);
        let c = a.mul(&b);
        assert_eq!(c.conductor(), 15);
        assert_eq!(c, Cyclotomic::zeta_pow(15, 5 + 3));
        assert_eq!(Cyclotomic::zeta_pow(3, 1), Cyclotomic::zeta_pow(9, 3));
    }
}
