//! Property-based invariants over randomized inputs.

use proptest::prelude::*;

use atlas_core::{
    bose_distance, coset_of, defining_set, dimension_brute, ia_partition, interval_reconstruct,
    is_coset_leader, BinaryPolynomial, CodeLength, Scheme,
};

const EXPONENTS: [u32; 10] = [3, 4, 5, 6, 7, 10, 11, 12, 13, 14];

fn length_and_residue() -> impl Strategy<Value = (u32, u64)> {
    prop::sample::select(&EXPONENTS[..])
        .prop_flat_map(|m| (Just(m), 1..(1u64 << m) + 1))
}

fn length_and_delta() -> impl Strategy<Value = (u32, u64)> {
    prop::sample::select(&EXPONENTS[..])
        .prop_flat_map(|m| (Just(m), 2..(1u64 << m) + 2))
}

fn poly(max_words: usize) -> impl Strategy<Value = BinaryPolynomial> {
    prop::collection::vec(any::<u64>(), 1..=max_words).prop_map(BinaryPolynomial::from_words)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cosets_are_negation_closed((m, x) in length_and_residue()) {
        let len = CodeLength::new(m).unwrap();
        let rec = coset_of(x, len).unwrap();
        for &e in &rec.elements {
            let neg = (len.n() - e) % len.n();
            prop_assert!(rec.elements.binary_search(&neg).is_ok(), "missing -{e}");
        }
        prop_assert!(rec.size as u32 <= len.ord());
        prop_assert_eq!(len.ord() % rec.size as u32, 0, "orbit size divides 2m");
    }

    #[test]
    fn leader_is_orbit_minimum((m, x) in length_and_residue()) {
        let len = CodeLength::new(m).unwrap();
        let rec = coset_of(x, len).unwrap();
        prop_assert_eq!(rec.leader, *rec.elements.iter().min().unwrap());
        prop_assert_eq!(is_coset_leader(x, len).unwrap(), x == rec.leader);
        if x % 2 == 0 {
            prop_assert!(!is_coset_leader(x, len).unwrap(), "even residues never lead");
        }
        // every element of the orbit reproduces the same orbit
        let back = coset_of(rec.elements[rec.size / 2], len).unwrap();
        prop_assert_eq!(back.elements, rec.elements);
    }

    #[test]
    fn defining_sets_grow_with_delta((m, delta) in length_and_delta()) {
        let len = CodeLength::new(m).unwrap();
        let s1 = defining_set(len, delta, 1).unwrap();
        let s0 = defining_set(len, delta, 0).unwrap();
        prop_assert_eq!(s0.size, s1.size + 1, "b = 0 adds exactly the zero coset");
        prop_assert_eq!(
            dimension_brute(len, delta, 0).unwrap() + 1,
            dimension_brute(len, delta, 1).unwrap()
        );
        if delta < len.n() {
            let bigger = defining_set(len, delta + 1, 1).unwrap();
            prop_assert!(bigger.size >= s1.size);
            prop_assert!(bigger.leaders.len() >= s1.leaders.len());
        }
        prop_assert!(s1.leaders.windows(2).all(|w| w[0] < w[1]), "leaders ascend");
    }

    #[test]
    fn bose_distance_is_a_fixed_point((m, delta) in length_and_delta()) {
        let len = CodeLength::new(m).unwrap();
        let bose = bose_distance(len, delta, 1).unwrap();
        prop_assert!(bose >= delta);
        prop_assert_eq!(bose_distance(len, delta, 0).unwrap(), bose, "independent of b");
        // same defining set at delta and at its Bose distance, and the
        // distance is a fixed point of the map
        prop_assert_eq!(
            defining_set(len, delta, 1).unwrap().size,
            defining_set(len, bose, 1).unwrap().size
        );
        if bose < len.n() {
            prop_assert_eq!(bose_distance(len, bose, 1).unwrap(), bose);
            prop_assert!(is_coset_leader(bose, len).unwrap(), "an interior Bose distance leads");
        }
    }

    #[test]
    fn reciprocal_is_an_involution(p in poly(4)) {
        let mut p = p;
        if !p.coefficient(0) {
            p = p.add(&BinaryPolynomial::one());
        }
        let r = p.reciprocal().unwrap();
        prop_assert_eq!(r.reciprocal().unwrap(), p.clone());
        prop_assert_eq!(r.weight(), p.weight());
        prop_assert_eq!(r.degree(), p.degree());
    }

    #[test]
    fn polynomial_ring_identities(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&b), a.clone());
        if !a.is_zero() && !b.is_zero() {
            let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
            prop_assert_eq!(a.mul(&b).degree(), Some(da + db));
            prop_assert!(a.divides(&a.mul(&b)));
        }
    }

    #[test]
    fn remainders_are_reduced(a in poly(4), b in poly(2)) {
        prop_assume!(!b.is_zero());
        let r = a.rem(&b);
        if let Some(rd) = r.degree() {
            prop_assert!(rd < b.degree().unwrap());
        }
        // a and r differ by a multiple of b
        prop_assert!(b.divides(&a.add(&r)));
    }

    #[test]
    fn partitions_tile_and_locate(t1 in 5u32..=12, t2 in 2u32..=8) {
        for (scheme, t) in [(Scheme::Ia1, t1), (Scheme::Ia2, t2)] {
            let p = ia_partition(scheme, t).unwrap();
            prop_assert_eq!(p.intervals[0].0, 1);
            prop_assert!(p.intervals.windows(2).all(|w| w[1].0 == w[0].1 + 1));
            for (idx, &iv) in p.intervals.iter().enumerate() {
                prop_assert_eq!(interval_reconstruct(scheme, t, idx as u64 + 1).unwrap(), iv);
            }
        }
    }
}
