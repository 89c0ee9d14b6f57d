#![allow(dead_code)]

use mtclab::catalog;
use mtclab::ring::FusionRing;
use proptest::prelude::*;

/// Small rings for property tests: catalog entries, group rings and
/// products, all of rank at most 12.
pub fn small_rings() -> Vec<(String, FusionRing)> {
    let mut out: Vec<(String, FusionRing)> =
        catalog::rings().into_iter().filter(|(_, r)| r.rank() <= 12).map(|(n, r)| (n.to_string(), r)).collect();
    out.push(("vec".into(), catalog::vec_ring()));
    out.push(("fib x fib".into(), FusionRing::deligne_product(&catalog::fibonacci(), &catalog::fibonacci())));
    out.push(("ising x z3".into(), FusionRing::deligne_product(&catalog::ising(), &catalog::cyclic(3))));
    out.push(("z2 x z4".into(), FusionRing::group_ring(&[2, 4])));
    out.push(("z11".into(), catalog::cyclic(11)));
    out
}

/// Group ring of a random abelian group of order at most 12, or a product
/// of one with Fibonacci or Ising.
pub fn arb_ring() -> impl Strategy<Value = FusionRing> {
    let factors =
        prop::collection::vec(2usize..=6, 1..=2).prop_filter("order <= 12", |f| f.iter().product::<usize>() <= 12);
    (factors, 0u8..3).prop_map(|(f, extra)| {
        let g = FusionRing::group_ring(&f);
        match extra {
            1 if g.rank() <= 6 => FusionRing::deligne_product(&g, &catalog::fibonacci()),
            2 if g.rank() <= 4 => FusionRing::deligne_product(&g, &catalog::ising()),
            _ => g,
        }
    })
}
