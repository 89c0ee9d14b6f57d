use mtclab::cyclotomic::{euler_phi, Cyclotomic};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_element(rng: &mut ChaCha8Rng, n: u64) -> Cyclotomic {
    // A random polynomial in ζ_n of degree < n, reduced on construction.
    let poly: Vec<BigRational> = (0..n)
        .map(|_| {
            let num: i64 = rng.gen_range(-6..=6);
            let den: i64 = rng.gen_range(1..=4);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect();
    Cyclotomic::from_poly(n, poly)
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs().max(a.1.abs()).max(b.0.abs()).max(b.1.abs());
    (a.0 - b.0).abs() <= 1e-7 * scale && (a.1 - b.1).abs() <= 1e-7 * scale
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

#[test]
fn randomized_field_laws_for_conductors_up_to_45() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for iter in 0..1000 {
        let n: u64 = rng.gen_range(1..=45);
        let a = random_element(&mut rng, n);
        let b = random_element(&mut rng, n);
        assert_eq!(a.coeffs().len(), euler_phi(n));

        // Reduction is idempotent.
        assert_eq!(Cyclotomic::from_poly(n, a.coeffs().to_vec()), a);

        // Arithmetic matches the complex embedding.
        assert!(close(
            a.add(&b).to_complex(),
            (a.to_complex().0 + b.to_complex().0, a.to_complex().1 + b.to_complex().1)
        ));
        assert!(close(a.mul(&b).to_complex(), cmul(a.to_complex(), b.to_complex())));
        let c = a.conj().to_complex();
        assert!(close(c, (a.to_complex().0, -a.to_complex().1)));
        // Inversion is the slow path; every fifth sample covers it.
        if iter % 5 == 0 && !a.is_zero() {
            assert!(a.mul(&a.inverse().unwrap()).is_one());
        }

        // Embedding into a multiple conductor is a ring map.
        let k: u64 = rng.gen_range(1..=3);
        let m = n * k;
        if m <= 45 {
            assert_eq!(a.mul(&b).embed(m), a.embed(m).mul(&b.embed(m)));
            assert_eq!(a.add(&b).embed(m), a.embed(m).add(&b.embed(m)));
            assert!(close(a.embed(m).to_complex(), a.to_complex()));
            assert_eq!(a.embed(m), a);
        }
    }
}

#[test]
fn zeta_to_the_n_is_one() {
    for n in 1..=45u64 {
        assert!(Cyclotomic::zeta_pow(n, 1).pow(n).is_one(), "n = {n}");
        assert_eq!(Cyclotomic::zeta_pow(n, 1).root_of_unity_order(), Some(n));
        assert!(Cyclotomic::zeta_pow(n, -1).mul(&Cyclotomic::zeta_pow(n, 1)).is_one());
    }
}

#[test]
fn sum_of_primitive_roots_is_mobius() {
    // Σ over primitive n-th roots equals μ(n).
    for (n, mu) in [(1u64, 1i64), (2, -1), (3, -1), (4, 0), (6, 1), (9, 0), (15, 1), (30, -1), (45, 0)] {
        let mut s = Cyclotomic::zero(n);
        for e in 1..=n {
            if num_integer::gcd(e, n) == 1 {
                s = s.add(&Cyclotomic::zeta_pow(n, e as i64));
            }
        }
        assert_eq!(s, Cyclotomic::from_int(n, mu), "n = {n}");
    }
}
