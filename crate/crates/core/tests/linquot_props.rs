mod common;

use common::{ideal, ideal_deg2, permutations, squarefree_stable_ideal, stable_ideal};
use monocycle::golod::monomial_products_vanish;
use monocycle::koszul::total_betti;
use monocycle::linquot::*;
use monocycle::symmetric::{all_specs, ideal_from_partitions, is_symmetric_shifted};
use monocycle::{FieldSpec, MonomialIdeal};
use proptest::prelude::*;

fn revlex(i: &MonomialIdeal) -> LinearQuotientOrder {
    check_linear_quotients(i, &revlex_order(i)).expect("linear quotients under revlex")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn stable_ideals_follow_the_set_formula(i in stable_ideal()) {
        prop_assert!(is_stable(&i));
        let lq = revlex(&i);
        prop_assert!(is_regular(&lq));
        for (j, (u, s)) in lq.order.iter().zip(&lq.sets).enumerate() {
            prop_assert_eq!(*s, stable_set(u), "{}", u);
            prop_assert!(is_valid_lift(&lq, j, u.max_var()));
        }
    }

    #[test]
    fn squarefree_stable_ideals_follow_the_set_formula(i in squarefree_stable_ideal()) {
        prop_assert!(is_squarefree_stable(&i));
        let lq = revlex(&i);
        prop_assert!(is_regular(&lq));
        for (j, (u, s)) in lq.order.iter().zip(&lq.sets).enumerate() {
            prop_assert_eq!(*s, squarefree_stable_set(u), "{}", u);
            prop_assert!(is_valid_lift(&lq, j, u.max_var()));
        }
    }

    #[test]
    fn stable_bases_verify(i in stable_ideal(), f in common::field()) {
        let v = verify_monomial_basis(&i, f).unwrap();
        prop_assert!(v.ok(), "{:?}", v);
    }

    #[test]
    fn stable_resolutions_are_minimal_and_exact(i in stable_ideal()) {
        let lq = revlex(&i);
        let res = resolution_differential(&lq).unwrap();
        prop_assert_eq!(res.ranks(), mapping_cone_betti(&lq).unwrap());
        let check = verify_resolution(&i, &res).unwrap();
        prop_assert!(check.squares_vanish && check.exact && check.minimal, "{:?}", check);
    }

    #[test]
    fn decomposition_table_matches_direct_scan(i in ideal(2..=4, 2, 6)) {
        for lq in linear_quotient_orders(&i, 20).unwrap() {
            let table = lq.shift_table();
            for (j, u) in lq.order.iter().enumerate() {
                prop_assert_eq!(lq.decomposition(u), Some(u));
                for s in 1..=i.n() {
                    let w = u.mul_var(s);
                    let g = lq.decomposition(&w).unwrap();
                    prop_assert!(g.divides(&w));
                    prop_assert_eq!(&lq.order[table[j][s - 1]], g);
                }
            }
        }
    }

    #[test]
    fn order_search_is_complete(i in ideal(2..=4, 3, 5)) {
        let found = find_linear_quotients_order(&i).unwrap();
        match &found {
            Some(lq) => {
                prop_assert!(lq.is_degree_increasing());
                prop_assert_eq!(check_linear_quotients(&i, &lq.order), Some(lq.clone()));
            }
            None => {
                let m = i.gens().len();
                for perm in permutations(m) {
                    let order: Vec<_> = perm.iter().map(|&k| i.gens()[k - 1].clone()).collect();
                    prop_assert!(check_linear_quotients(&i, &order).is_none());
                }
            }
        }
    }

    #[test]
    fn monomial_basis_implies_vanishing_products(i in ideal_deg2(2..=4, 2, 5)) {
        if monomial_basis(&i).is_ok() {
            prop_assert!(monomial_products_vanish(&i, FieldSpec::RATIONALS).unwrap().holds);
            let v = verify_monomial_basis(&i, FieldSpec::RATIONALS).unwrap();
            prop_assert!(v.ok(), "{:?}", v);
        }
    }

    #[test]
    fn mapping_cone_matches_betti_numbers(i in ideal(2..=4, 2, 5)) {
        if let Some(lq) = find_linear_quotients_order(&i).unwrap() {
            let mut cone = mapping_cone_betti(&lq).unwrap();
            cone.resize(i.n(), 0);
            prop_assert_eq!(cone, total_betti(&i, FieldSpec::RATIONALS).unwrap());
        }
    }
}

#[test]
fn shifted_ideals_follow_the_set_formula() {
    for n in 2..=5 {
        for s in all_specs(n, 3).into_iter().filter(is_symmetric_shifted) {
            let i = ideal_from_partitions(&s);
            assert!(recognize(&i).symmetric_shifted);
            let lq = check_linear_quotients(&i, &shifted_order(&i)).unwrap_or_else(|| panic!("{s}"));
            assert!(is_regular(&lq), "{s}");
            for (j, (u, set)) in lq.order.iter().zip(&lq.sets).enumerate() {
                assert_eq!(*set, shifted_set(u), "{s} {u}");
                let top = u.exponents().iter().copied().max().unwrap();
                let m = (1..=n).filter(|&k| u.exp(k) == top).max().unwrap();
                assert!(is_valid_lift(&lq, j, m), "{s} {u}");
            }
        }
    }
}

#[test]
fn uniform_matroids_are_recognized() {
    for n in 2..=5 {
        for k in 1..=n {
            let i = MonomialIdeal::new(
                n,
                monocycle::VarSet::subsets_of_size(n, k)
                    .into_iter()
                    .map(|s| monocycle::Monomial::of_set(n, s))
                    .collect(),
            )
            .unwrap();
            assert!(is_matroidal(&i));
            let lq = revlex(&i);
            assert!(is_regular(&lq));
            assert!(verify_monomial_basis(&i, FieldSpec::RATIONALS).unwrap().ok());
        }
    }
}

#[test]
fn non_matroidal_supports_are_rejected() {
    let i = monocycle::selftest::ideal(4, &["x1*x2", "x3*x4"]);
    assert!(!is_matroidal(&i));
    assert!(!is_matroidal(&monocycle::selftest::ideal(3, &["x1^2", "x2*x3"])));
}
