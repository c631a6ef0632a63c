mod common;

use common::{box_monomials, ideal};
use monocycle::{Monomial, MonomialIdeal, VarSet};
use proptest::prelude::*;

fn minimal(i: &MonomialIdeal) -> bool {
    let g = i.gens();
    (0..g.len()).all(|a| (0..g.len()).all(|b| a == b || !g[a].divides(&g[b])))
}

fn pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (2usize..=4).prop_flat_map(|n| (ideal(n..=n, 3, 5), ideal(n..=n, 3, 5)))
}

fn triple() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (2usize..=3).prop_flat_map(|n| (ideal(n..=n, 2, 4), ideal(n..=n, 2, 4), ideal(n..=n, 2, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn operations_stay_minimal((a, b) in pair()) {
        prop_assert!(minimal(&a.sum(&b).unwrap()));
        prop_assert!(minimal(&a.product(&b).unwrap()));
        prop_assert!(minimal(&a.intersection(&b).unwrap()));
        let m = b.gens()[0].clone();
        prop_assert!(minimal(&a.colon_monomial(&m)));
    }

    #[test]
    fn colon_contains_ideal_and_is_monotone((a, b) in pair(), bits in 1u32..16) {
        let n = a.n();
        let s = VarSet::from_bits(bits & VarSet::full(n).bits());
        prop_assume!(!s.is_empty());
        let ca = a.colon_varset(s).unwrap();
        prop_assert!(a.is_subset_of(&ca).unwrap());
        let ab = a.sum(&b).unwrap();
        prop_assert!(ca.is_subset_of(&ab.colon_varset(s).unwrap()).unwrap());
    }

    #[test]
    fn lattice_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.sum(&a).unwrap(), a.clone());
        prop_assert_eq!(a.intersection(&a).unwrap(), a.clone());
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersection(&b).unwrap(), b.intersection(&a).unwrap());
        prop_assert_eq!(a.sum(&b).unwrap().sum(&c).unwrap(), a.sum(&b.sum(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.intersection(&b).unwrap().intersection(&c).unwrap(),
            a.intersection(&b.intersection(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn intersection_membership_is_conjunction((a, b) in pair()) {
        let both = a.intersection(&b).unwrap();
        for u in box_monomials(&Monomial::new(vec![4; a.n()])) {
            prop_assert_eq!(both.contains(&u), a.contains(&u) && b.contains(&u), "{}", u);
        }
    }

    #[test]
    fn colon_membership_matches_definition((a, b) in pair()) {
        let m = b.gens()[0].clone();
        let c = a.colon_monomial(&m);
        for u in box_monomials(&Monomial::new(vec![3; a.n()])) {
            prop_assert_eq!(c.contains(&u), a.contains(&u.mul(&m)));
        }
    }
}
