//! Property tests for the permutation and product primitives.

use proptest::prelude::*;

use conjcover::constructions::symmetric;
use conjcover::mask::SubsetMask;
use conjcover::perm::Perm;
use conjcover::product::set_product;
use conjcover::table::GroupTable;

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just(degree).prop_perturb(move |d, mut rng| {
        let mut images: Vec<u16> = (0..d as u16).collect();
        for i in (1..images.len()).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            images.swap(i, j);
        }
        Perm::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn parse_round_trips_canonical_form(p in arb_perm(9)) {
        let text = p.to_string();
        let reparsed = Perm::parse_cycles(&text, 9).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn composition_is_associative(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn inverse_cancels(a in arb_perm(8)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn generation_is_order_insensitive(a in arb_perm(5), b in arb_perm(5)) {
        let g1 = GroupTable::generate(5, &[a.clone(), b.clone()], 1000).unwrap();
        let g2 = GroupTable::generate(5, &[b, a], 1000).unwrap();
        prop_assert_eq!(g1.order(), g2.order());
        let mut e1: Vec<String> = g1.elements().iter().map(|p| p.to_string()).collect();
        let mut e2: Vec<String> = g2.elements().iter().map(|p| p.to_string()).collect();
        e1.sort();
        e2.sort();
        prop_assert_eq!(e1, e2);
    }

    #[test]
    fn product_is_monotone_in_the_left_factor(
        xs in proptest::collection::vec(0u32..24, 1..6),
        ys in proptest::collection::vec(0u32..24, 1..6),
        zs in proptest::collection::vec(0u32..24, 1..6),
    ) {
        let g = symmetric(4).unwrap();
        let small = SubsetMask::from_indices(24, xs.clone());
        let big = {
            let mut all = xs;
            all.extend(ys);
            SubsetMask::from_indices(24, all)
        };
        let c = SubsetMask::from_indices(24, zs);
        let ps = set_product(&g, &small, &c).unwrap();
        let pb = set_product(&g, &big, &c).unwrap();
        prop_assert!(ps.is_subset_of(&pb));
    }

    #[test]
    fn products_with_identity_bearing_subgroups_never_shrink(
        xs in proptest::collection::vec(0u32..24, 1..8),
        seed in 0u32..24,
    ) {
        let g = symmetric(4).unwrap();
        let sub = conjcover::subgroup::subgroup_closure(&g, &[seed]);
        let a = SubsetMask::from_indices(24, xs);
        let p = set_product(&g, &a, sub.mask()).unwrap();
        prop_assert!(a.is_subset_of(&p));
        prop_assert!(p.cardinality() >= a.cardinality().max(sub.order()));
    }
}
