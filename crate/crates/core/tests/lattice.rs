mod common;

use mtclab::catalog;
use mtclab::lattice::{
    adjoint_subring, analyze, big_g, generated_subring, pointed_subring, stabilizer, universal_grading,
    upper_central_series, Subring,
};
use mtclab::modular::centralizer;
use mtclab::ring::FusionRing;
use proptest::prelude::*;

#[test]
fn generated_subring_examples() {
    assert_eq!(generated_subring(&catalog::cyclic(9), &[3]).members(), &[0, 3, 6]);
    assert_eq!(generated_subring(&catalog::fibonacci(), &[1]).members(), &[0, 1]);
    assert!(generated_subring(&catalog::ising(), &[]).is_trivial());
}

#[test]
fn pointed_subring_examples() {
    let (s, g) = pointed_subring(&catalog::z3_z3()).unwrap();
    assert_eq!(s.rank(), 9);
    assert_eq!(g.factors(), &[3, 3]);
    let (s, g) = pointed_subring(&catalog::fibonacci()).unwrap();
    assert!(s.is_trivial() && g.is_trivial());
    let (s, g) = pointed_subring(&catalog::cyclic(9)).unwrap();
    assert_eq!((s.rank(), g.factors().to_vec()), (9, vec![9]));
}

#[test]
fn adjoint_examples() {
    for n in [3, 5, 9, 15] {
        assert!(adjoint_subring(&catalog::cyclic(n)).is_trivial());
    }
    assert_eq!(adjoint_subring(&catalog::fibonacci()).rank(), 2);
    assert_eq!(adjoint_subring(&catalog::z3_fibonacci()).members(), &[0, 1]);
}

#[test]
fn grading_examples() {
    let g = universal_grading(&catalog::cyclic(5)).unwrap();
    assert_eq!(g.group.order(), 5);
    assert_eq!(g.component_ranks(), vec![1; 5]);
    assert!(universal_grading(&catalog::fibonacci()).unwrap().group.is_trivial());
    let g = universal_grading(&catalog::z3_fibonacci()).unwrap();
    assert_eq!(g.group.order(), 3);
    assert_eq!(g.component_ranks(), vec![2, 2, 2]);
}

#[test]
fn stabilizer_examples() {
    assert_eq!(stabilizer(&catalog::ising(), 2), vec![0, 1]);
    assert_eq!(stabilizer(&catalog::fibonacci(), 1), vec![0]);
    for x in 0..7 {
        assert_eq!(stabilizer(&catalog::cyclic(7), x), vec![0]);
    }
}

#[test]
fn big_g_examples() {
    let b = big_g(&catalog::cyclic(5));
    assert!(b.empty_family);
    assert_eq!(b.members, vec![0]);
    let b = big_g(&catalog::z3_fibonacci());
    assert!(!b.empty_family);
    assert_eq!(b.members, vec![0]);
    let b = big_g(&catalog::ising());
    assert!(!b.empty_family);
    assert_eq!(b.members, vec![0, 1]);
}

#[test]
fn central_series_examples() {
    let s = upper_central_series(&catalog::cyclic(5));
    assert_eq!(s.terms.len(), 2);
    assert_eq!((s.nilpotent, s.class), (true, Some(1)));
    let s = upper_central_series(&catalog::fibonacci());
    assert!(!s.nilpotent);
    assert_eq!(s.terms[0], s.terms[1]);
    let s = upper_central_series(&catalog::z3_fibonacci());
    assert!(!s.nilpotent);
    assert_eq!(s.terms.last().unwrap().members(), &[0, 1]);
}

fn check_grading(ring: &FusionRing) {
    let g = universal_grading(ring).unwrap();
    // Faithful: every degree occurs.
    assert!(g.components().iter().all(|(_, m)| !m.is_empty()));
    // Homogeneous: N^k_ij > 0 forces deg k = deg i + deg j.
    for i in 0..ring.rank() {
        for j in 0..ring.rank() {
            for (k, _) in ring.product(i, j) {
                assert_eq!(g.deg[k], g.group.add(&g.deg[i], &g.deg[j]));
            }
        }
    }
    // The identity component is the adjoint subring.
    let id = g.group.identity();
    let trivial: Vec<usize> = (0..ring.rank()).filter(|&x| g.deg[x] == id).collect();
    assert_eq!(trivial, adjoint_subring(ring).members());
}

fn check_stabilizers(ring: &FusionRing) {
    let inv = ring.invertibles();
    for x in 0..ring.rank() {
        let st = stabilizer(ring, x);
        assert!(st.contains(&0));
        for &a in &st {
            for &b in &st {
                let ab = ring.translate(a, b).unwrap();
                assert!(st.contains(&ab));
            }
        }
        for &g in &inv {
            let gx = ring.translate(g, x).unwrap();
            assert_eq!(stabilizer(ring, gx), st);
        }
    }
}

fn check_mnsd_subrings(ring: &FusionRing) {
    if !ring.is_mnsd() {
        return;
    }
    let subs = [adjoint_subring(ring), pointed_subring(ring).unwrap().0, Subring::whole(ring)];
    for s in subs {
        assert_eq!(s.rank() % 2, 1, "{s}");
    }
    for x in 0..ring.rank() {
        assert_eq!(generated_subring(ring, &[x]).rank() % 2, 1);
    }
}

#[test]
fn invariants_on_the_catalog() {
    let mut rings = common::small_rings();
    rings.push(("z15".into(), catalog::cyclic(15)));
    rings.push(("f25".into(), catalog::f25_orbit_ring()));
    for (_, ring) in &rings {
        check_grading(ring);
        check_stabilizers(ring);
        check_mnsd_subrings(ring);
    }
}

#[test]
fn component_ranks_agree_with_rank_ad_mod_8_for_odd_dimensional_rings() {
    let mut rings = catalog::rings();
    rings.push(("f25", catalog::f25_orbit_ring()));
    let mut checked = 0;
    for (name, ring) in rings {
        let a = analyze(&ring).unwrap();
        let Some(dims) = a.dims.exact() else { continue };
        if dims.iter().any(|d| d % 2 == 0) {
            continue;
        }
        checked += 1;
        let rank_ad = a.adjoint.rank();
        for r in &a.component_ranks {
            assert_eq!((*r as i64 - rank_ad as i64).rem_euclid(8), 0, "{name}: {:?}", a.component_ranks);
        }
    }
    assert!(checked >= 7);
    let a = analyze(&catalog::f25_orbit_ring()).unwrap();
    assert_eq!(a.component_ranks, vec![11, 3, 3]);
}

#[test]
fn grading_group_matches_invertibles_for_modular_data() {
    // |U(C)| = |G(C)| for every shipped modular example.
    for (name, md) in catalog::modular_data() {
        let g = universal_grading(md.ring()).unwrap();
        let (_, inv) = pointed_subring(md.ring()).unwrap();
        assert_eq!(g.group.order(), inv.order(), "{name}");
        // The adjoint subring is the centralizer of the pointed part.
        let (pt, _) = pointed_subring(md.ring()).unwrap();
        assert_eq!(centralizer(&md, &pt), adjoint_subring(md.ring()), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn grading_and_stabilizers_on_generated_rings(ring in common::arb_ring()) {
        check_grading(&ring);
        check_stabilizers(&ring);
        check_mnsd_subrings(&ring);
    }

    #[test]
    fn generated_subrings_are_closed(ring in common::arb_ring(), seed in prop::collection::vec(0usize..64, 0..3)) {
        let seed: Vec<usize> = seed.into_iter().map(|x| x % ring.rank()).collect();
        let s = generated_subring(&ring, &seed);
        prop_assert!(s.is_closed_in(&ring));
        for x in &seed {
            prop_assert!(s.contains(*x));
        }
    }
}
