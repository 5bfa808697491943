//! Property tests for the operator laws: random partitions and subsets for
//! the generic space operators, random small rings and ideals for the
//! ideal-relative ones.

use proptest::prelude::*;

use rough_rings::ideal::Ideal;
use rough_rings::ring::FiniteRing;
use rough_rings::rough;
use rough_rings::set::ElementSet;
use rough_rings::space::{numbered_labels, ApproximationSpace};
use rough_rings::SumMode;

fn space_and_sets() -> impl Strategy<Value = (ApproximationSpace, ElementSet, ElementSet)> {
    (1usize..=8).prop_flat_map(|n| {
        (prop::collection::vec(0..n, n), 0u64..(1u64 << n), 0u64..(1u64 << n)).prop_map(
            move |(classes, x_bits, y_bits)| {
                let space =
                    ApproximationSpace::from_classes(numbered_labels("e", n), &classes).unwrap();
                (space, ElementSet::from_bits(n, x_bits), ElementSet::from_bits(n, y_bits))
            },
        )
    })
}

fn ring_strategy() -> impl Strategy<Value = FiniteRing> {
    prop_oneof![
        (1usize..=12).prop_map(|n| FiniteRing::zn(n).unwrap()),
        (2usize..=4, 2usize..=4).prop_map(|(a, b)| {
            FiniteRing::zn(a).unwrap().direct_product(&FiniteRing::zn(b).unwrap()).unwrap()
        }),
    ]
}

/// A ring, an ideal selector, and two raw subset patterns; the selector and
/// patterns are resolved against the ring inside each test.
fn ring_ideal_sets() -> impl Strategy<Value = (FiniteRing, usize, u64, u64)> {
    ring_strategy().prop_flat_map(|ring| {
        let n = ring.size();
        (Just(ring), any::<usize>(), 0u64..(1u64 << n), 0u64..(1u64 << n))
    })
}

fn pick_ideal<'r>(ring: &'r FiniteRing, selector: usize) -> Ideal<'r> {
    let ideals = Ideal::all(ring);
    let index = selector % ideals.len();
    ideals.into_iter().nth(index).unwrap()
}

proptest! {
    #[test]
    fn space_operator_laws((space, x, y) in space_and_sets()) {
        let n = space.universe_size();
        let empty = ElementSet::empty(n);
        let full = ElementSet::full(n);

        prop_assert!(space.lower(&x).is_subset_of(&x));
        prop_assert!(x.is_subset_of(&space.upper(&x)));
        prop_assert_eq!(space.lower(&empty), empty);
        prop_assert_eq!(space.upper(&empty), empty);
        prop_assert_eq!(space.lower(&full), full);
        prop_assert_eq!(space.upper(&full), full);

        prop_assert_eq!(
            space.lower(&x.intersection(&y)),
            space.lower(&x).intersection(&space.lower(&y))
        );
        prop_assert_eq!(space.upper(&x.union(&y)), space.upper(&x).union(&space.upper(&y)));
        prop_assert!(space.lower(&x).union(&space.lower(&y)).is_subset_of(&space.lower(&x.union(&y))));
        prop_assert!(space.upper(&x.intersection(&y)).is_subset_of(&space.upper(&x).intersection(&space.upper(&y))));

        prop_assert_eq!(space.lower(&x.complement()), space.upper(&x).complement());
        prop_assert_eq!(space.upper(&x.complement()), space.lower(&x).complement());

        let lo = space.lower(&x);
        let up = space.upper(&x);
        prop_assert_eq!(space.lower(&lo), lo);
        prop_assert_eq!(space.upper(&lo), lo);
        prop_assert_eq!(space.upper(&up), up);
        prop_assert_eq!(space.lower(&up), up);
    }

    #[test]
    fn exactness_is_block_union((space, x, _y) in space_and_sets()) {
        let is_block_union = space
            .blocks()
            .iter()
            .all(|block| block.is_subset_of(&x) || !block.intersects(&x));
        prop_assert_eq!(space.is_exact(&x), is_block_union);
        prop_assert_eq!(space.is_exact(&x), space.lower(&x) == space.upper(&x));
        prop_assert_eq!(space.is_rough(&x), !space.boundary(&x).is_empty());
    }

    #[test]
    fn ring_axioms_hold(ring in ring_strategy(), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let n = ring.size();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(ring.add(a, b), ring.add(b, a));
        prop_assert_eq!(ring.add(a, ring.neg(a)), ring.zero());
        prop_assert_eq!(ring.mul(a, ring.one()), a);
        prop_assert_eq!(ring.mul(a, b), ring.mul(b, a));
        prop_assert_eq!(
            ring.mul(a, ring.add(b, c)),
            ring.add(ring.mul(a, b), ring.mul(a, c))
        );
        prop_assert_eq!(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
    }

    #[test]
    fn coset_operators_match_partition_operators((ring, sel, x_bits, _y) in ring_ideal_sets()) {
        let ideal = pick_ideal(&ring, sel);
        let space = ideal.coset_partition();
        let x = ElementSet::from_bits(ring.size(), x_bits);
        prop_assert_eq!(rough::upper(&ideal, &x), space.upper(&x));
        prop_assert_eq!(rough::lower(&ideal, &x), space.lower(&x));
    }

    #[test]
    fn approximations_are_unions_of_cosets((ring, sel, x_bits, _y) in ring_ideal_sets()) {
        let ideal = pick_ideal(&ring, sel);
        let x = ElementSet::from_bits(ring.size(), x_bits);
        let apr = rough::approximate(&ideal, &x);
        prop_assert!(apr.lower.is_subset_of(&apr.subset));
        prop_assert!(apr.subset.is_subset_of(&apr.upper));
        prop_assert_eq!(apr.boundary, apr.upper.difference(&apr.lower));
        prop_assert_eq!(apr.rough, !apr.boundary.is_empty());
        for side in [apr.lower, apr.upper] {
            for e in side.iter() {
                prop_assert!(ideal.coset_of(e).is_subset_of(&side));
            }
        }
    }

    #[test]
    fn upper_respects_pairwise_sums((ring, sel, a_bits, b_bits) in ring_ideal_sets()) {
        prop_assume!(a_bits != 0 && b_bits != 0);
        let ideal = pick_ideal(&ring, sel);
        let n = ring.size();
        let a = ElementSet::from_bits(n, a_bits);
        let b = ElementSet::from_bits(n, b_bits);
        let sum_of_uppers = rough::set_sum(
            &ring,
            &rough::upper(&ideal, &a),
            &rough::upper(&ideal, &b),
            SumMode::Pairwise,
        )
        .unwrap();
        let upper_of_sum = rough::upper(
            &ideal,
            &rough::set_sum(&ring, &a, &b, SumMode::Pairwise).unwrap(),
        );
        prop_assert_eq!(sum_of_uppers, upper_of_sum);
    }

    #[test]
    fn lower_sums_land_inside_lower_of_sum((ring, sel, a_bits, b_bits) in ring_ideal_sets()) {
        prop_assume!(a_bits != 0 && b_bits != 0);
        let ideal = pick_ideal(&ring, sel);
        let n = ring.size();
        let a = ElementSet::from_bits(n, a_bits);
        let b = ElementSet::from_bits(n, b_bits);
        let lo_a = rough::lower(&ideal, &a);
        let lo_b = rough::lower(&ideal, &b);
        if !lo_a.is_empty() && !lo_b.is_empty() {
            let sum_of_lowers = rough::set_sum(&ring, &lo_a, &lo_b, SumMode::Pairwise).unwrap();
            let lower_of_sum = rough::lower(
                &ideal,
                &rough::set_sum(&ring, &a, &b, SumMode::Pairwise).unwrap(),
            );
            prop_assert!(sum_of_lowers.is_subset_of(&lower_of_sum));
        }
    }

    #[test]
    fn product_of_uppers_lands_inside_upper_of_product((ring, sel, a_bits, b_bits) in ring_ideal_sets()) {
        prop_assume!(a_bits != 0 && b_bits != 0);
        let ideal = pick_ideal(&ring, sel);
        let n = ring.size();
        let a = ElementSet::from_bits(n, a_bits);
        let b = ElementSet::from_bits(n, b_bits);
        let product_of_uppers = rough::set_product(
            &ring,
            &rough::upper(&ideal, &a),
            &rough::upper(&ideal, &b),
        )
        .unwrap();
        let upper_of_product =
            rough::upper(&ideal, &rough::set_product(&ring, &a, &b).unwrap());
        prop_assert!(product_of_uppers.is_subset_of(&upper_of_product));
    }

    #[test]
    fn set_product_is_commutative_and_monotone((ring, _sel, a_bits, b_bits) in ring_ideal_sets()) {
        prop_assume!(a_bits != 0 && b_bits != 0);
        let n = ring.size();
        let a = ElementSet::from_bits(n, a_bits);
        let b = ElementSet::from_bits(n, b_bits);
        let ab = rough::set_product(&ring, &a, &b).unwrap();
        let ba = rough::set_product(&ring, &b, &a).unwrap();
        prop_assert_eq!(ab, ba);
        let bigger = a.union(&b);
        prop_assert!(ab.is_subset_of(&rough::set_product(&ring, &bigger, &b).unwrap()));
        prop_assert!(ab.is_subset_of(&rough::set_product(&ring, &a, &bigger).unwrap()));
    }

    #[test]
    fn generated_ideal_is_smallest(ring in ring_strategy(), gens in prop::collection::vec(any::<usize>(), 1..=3)) {
        let n = ring.size();
        let gens: Vec<usize> = gens.into_iter().map(|g| g % n).collect();
        let generated = Ideal::generated(&ring, &gens).unwrap();
        prop_assert!(rough_rings::ideal::is_ideal(&ring, &generated.members()));
        for &g in &gens {
            prop_assert!(generated.contains(g));
        }
        // No enumerated ideal containing the generators is smaller.
        for other in Ideal::all(&ring) {
            if gens.iter().all(|&g| other.contains(g)) {
                prop_assert!(generated.members().is_subset_of(&other.members()));
            }
        }
    }
}
