//! Bundled example rings and modular data.

use std::path::{Path, PathBuf};

use crate::cyclotomic::Cyclotomic;
use crate::modular::{modular_to_json, ModularData};
use crate::ring::{ring_to_json, FusionRing};

/// The trivial ring with only the unit.
pub fn vec_ring() -> FusionRing {
    FusionRing::new(1, vec![0], [(0, 0, 0, 1)]).expect("valid")
}

pub fn cyclic(n: usize) -> FusionRing {
    FusionRing::group_ring(&[n])
}

pub fn z3_z3() -> FusionRing {
    FusionRing::group_ring(&[3, 3])
}

/// Objects `1, τ` with `τ ⊗ τ = 1 ⊕ τ`.
pub fn fibonacci() -> FusionRing {
    FusionRing::new(2, vec![0, 1], [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)])
        .expect("valid")
}

/// Objects `1, ψ, σ` with `ψ ⊗ ψ = 1`, `ψ ⊗ σ = σ`, `σ ⊗ σ = 1 ⊕ ψ`.
pub fn ising() -> FusionRing {
    FusionRing::new(
        3,
        vec![0, 1, 2],
        [
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 2, 2, 1),
            (2, 0, 2, 1),
            (2, 1, 2, 1),
            (2, 2, 0, 1),
            (2, 2, 1, 1),
        ],
    )
    .expect("valid")
}

/// `Z_3 ⊠ Fib`; the pair `(a, x)` has index `2a + x`.
pub fn z3_fibonacci() -> FusionRing {
    FusionRing::deligne_product(&cyclic(3), &fibonacci())
}

/// Rank-17 MNSD ring with dimensions `1³ 3⁸ 5⁶` and total dimension 225.
///
/// Objects: invertibles `0..3` forming `Z_3`; `3..11` the orbits of
/// `F_25^×` under multiplication by a cube root of unity `ω`, each fixed by
/// `Z_3`; `11..14` and `14..17` two free `Z_3`-orbits `Y_a`, `Z_a` with
/// `Y_a* = Z_{-a}`. Orbit products add representatives in `F_25`; products
/// of the five-dimensional objects follow a `Z_3`-shift with multiplicities
/// `(1, 2, 2)`.
pub fn f25_orbit_ring() -> FusionRing {
    // F_25 = F_5[a]/(a² - 2); (x, y) stands for x + y·a.
    type F = (u8, u8);
    let mul = |u: F, v: F| -> F { ((u.0 * v.0 + 2 * u.1 * v.1) % 5, (u.0 * v.1 + v.0 * u.1) % 5) };
    let add = |u: F, v: F| -> F { ((u.0 + v.0) % 5, (u.1 + v.1) % 5) };
    let elems: Vec<F> = (0..5).flat_map(|x| (0..5).map(move |y| (x, y))).collect();
    let one = (1, 0);
    let w = *elems.iter().find(|&&e| e != one && e != (0, 0) && mul(mul(e, e), e) == one).expect("ω exists");
    let mut orbits: Vec<[F; 3]> = Vec::new();
    for &e in &elems {
        if e == (0, 0) || orbits.iter().any(|o| o.contains(&e)) {
            continue;
        }
        orbits.push([e, mul(w, e), mul(w, mul(w, e))]);
    }
    let orbit_of = |e: F| orbits.iter().position(|o| o.contains(&e)).expect("nonzero element");
    let o = |k: usize| 3 + k;
    let y = |a: usize| 11 + a % 3;
    let z = |a: usize| 14 + a % 3;
    const F_SHIFT: [u32; 3] = [1, 2, 2];

    let r = 17;
    let mut n = vec![vec![vec![0u32; r]; r]; r];
    for a in 0..3 {
        for b in 0..3 {
            n[a][b][(a + b) % 3] += 1;
        }
        for k in 0..8 {
            n[a][o(k)][o(k)] += 1;
            n[o(k)][a][o(k)] += 1;
        }
        for b in 0..3 {
            n[a][y(b)][y(a + b)] += 1;
            n[y(b)][a][y(a + b)] += 1;
            n[a][z(b)][z(a + b)] += 1;
            n[z(b)][a][z(a + b)] += 1;
        }
    }
    for k in 0..8 {
        for l in 0..8 {
            let mut done: Vec<(F, F)> = Vec::new();
            for &p in &orbits[k] {
                for &q in &orbits[l] {
                    if done.contains(&(p, q)) {
                        continue;
                    }
                    let (p1, q1) = (mul(w, p), mul(w, q));
                    let (p2, q2) = (mul(w, p1), mul(w, q1));
                    done.extend([(p, q), (p1, q1), (p2, q2)]);
                    let s = add(p, q);
                    if s == (0, 0) {
                        for a in 0..3 {
                            n[o(k)][o(l)][a] += 1;
                        }
                    } else {
                        n[o(k)][o(l)][o(orbit_of(s))] += 1;
                    }
                }
            }
        }
        for b in 0..3 {
            for c in 0..3 {
                n[o(k)][y(b)][y(c)] += 1;
                n[y(b)][o(k)][y(c)] += 1;
                n[o(k)][z(b)][z(c)] += 1;
                n[z(b)][o(k)][z(c)] += 1;
            }
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            n[y(a)][z(b)][(a + b) % 3] += 1;
            n[z(b)][y(a)][(a + b) % 3] += 1;
            for k in 0..8 {
                n[y(a)][z(b)][o(k)] += 1;
                n[z(b)][y(a)][o(k)] += 1;
            }
            for c in 0..3 {
                n[y(a)][y(b)][z(c)] += F_SHIFT[(c + 6 - a - b) % 3];
                n[z(a)][z(b)][y(c)] += F_SHIFT[(a + b + 3 - c) % 3];
            }
        }
    }
    let neg = |e: F| ((5 - e.0) % 5, (5 - e.1) % 5);
    let mut dual = vec![0, 2, 1];
    dual.extend((0..8).map(|k| o(orbit_of(neg(orbits[k][0])))));
    dual.extend((0..3).map(|a| z(3 - a)));
    dual.extend((0..3).map(|a| y(3 - a)));
    FusionRing::from_fn(r, dual, |i, j, k| n[i][j][k]).expect("valid")
}

/// Pointed data on `Z_n`, `n` odd: `S_{jk} = ζ_n^{2jk}`, `θ_j = ζ_n^{j²}`.
pub fn pointed_modular(n: u64) -> ModularData {
    let ring = cyclic(n as usize);
    let s = (0..n).map(|j| (0..n).map(|k| Cyclotomic::zeta_pow(n, (2 * j * k % n) as i64)).collect()).collect();
    let twists = (0..n).map(|j| (j * j % n) as i64).collect();
    ModularData::new(ring, n, twists, s).expect("well formed")
}

/// Ising data over `Q(ζ_16)`: `θ = (1, -1, ζ_16)`, `√2 = ζ_16² - ζ_16⁶`.
pub fn ising_modular() -> ModularData {
    let n = 16;
    let one = Cyclotomic::one(n);
    let zero = Cyclotomic::zero(n);
    let r2 = Cyclotomic::zeta_pow(n, 2).sub(&Cyclotomic::zeta_pow(n, 6));
    let s = vec![
        vec![one.clone(), one.clone(), r2.clone()],
        vec![one.clone(), one, r2.neg()],
        vec![r2.clone(), r2.neg(), zero],
    ];
    ModularData::new(ising(), n, vec![0, 8, 1], s).expect("well formed")
}

/// `Z_3` with trivial twists and the all-ones S-matrix (symmetric braiding).
pub fn z3_all_ones() -> ModularData {
    let s = vec![vec![Cyclotomic::one(3); 3]; 3];
    ModularData::new(cyclic(3), 3, vec![0; 3], s).expect("well formed")
}

pub fn vec_modular() -> ModularData {
    ModularData::new(vec_ring(), 1, vec![0], vec![vec![Cyclotomic::one(1)]]).expect("well formed")
}

/// Exported rings, keyed by file stem.
pub fn rings() -> Vec<(&'static str, FusionRing)> {
    vec![
        ("z3", cyclic(3)),
        ("z5", cyclic(5)),
        ("z7", cyclic(7)),
        ("z9", cyclic(9)),
        ("z15", cyclic(15)),
        ("z3xz3", z3_z3()),
        ("fibonacci", fibonacci()),
        ("ising", ising()),
        ("z3xfib", z3_fibonacci()),
    ]
}

/// Exported modular data, keyed by file stem.
pub fn modular_data() -> Vec<(&'static str, ModularData)> {
    vec![
        ("z3", pointed_modular(3)),
        ("z5", pointed_modular(5)),
        ("z7", pointed_modular(7)),
        ("z9", pointed_modular(9)),
        ("z15", pointed_modular(15)),
        ("ising", ising_modular()),
    ]
}

/// Writes `<stem>.ring` and `<stem>.modular` files into `dir`.
pub fn export(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (stem, ring) in rings() {
        let path = dir.join(format!("{stem}.ring"));
        std::fs::write(&path, ring_to_json(&ring))?;
        written.push(path);
    }
    for (stem, md) in modular_data() {
        let path = dir.join(format!("{stem}.modular"));
        std::fs::write(&path, modular_to_json(&md))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{fp_dims, validate_fusion_ring};

    #[test]
    fn every_catalog_ring_is_valid() {
        for (name, ring) in rings() {
            assert!(validate_fusion_ring(&ring).is_valid(), "{name}");
        }
        assert!(validate_fusion_ring(&vec_ring()).is_valid());
    }

    #[test]
    fn f25_orbit_ring_shape() {
        let ring = f25_orbit_ring();
        assert!(validate_fusion_ring(&ring).is_valid());
        assert!(ring.is_mnsd());
        assert_eq!(ring.duals(), &[0, 2, 1, 6, 5, 4, 3, 10, 9, 8, 7, 14, 16, 15, 11, 13, 12]);
        let dims = fp_dims(&ring).unwrap().exact().unwrap();
        let mut expected = vec![1; 3];
        expected.extend([3; 8]);
        expected.extend([5; 6]);
        assert_eq!(dims, expected);
    }
}
