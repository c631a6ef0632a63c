mod common;

use common::{field, fields, ideal_deg2, nonempty_subsets};
use monocycle::boundary_ideal::boundary_ideal;
use monocycle::golod::{four_variable_pair_formula, golod4, monomial_products_vanish};
use monocycle::koszul::{homology_product_pairing, is_boundary_oracle, wedge, KoszulChain};
use monocycle::{FieldSpec, MonomialIdeal, VarSet};
use proptest::prelude::*;

/// Every product of generator monomial cycles, checked by the strand oracle.
fn products_vanish_by_oracle(i: &MonomialIdeal, f: FieldSpec) -> bool {
    let subsets = nonempty_subsets(i.n());
    for &a in &subsets {
        for &b in subsets.iter().filter(|b| b.is_disjoint(a) && a < **b) {
            let (ca, cb) = (i.colon_varset(a).unwrap(), i.colon_varset(b).unwrap());
            for u in ca.gens() {
                for v in cb.gens() {
                    let z = wedge(&KoszulChain::monomial(f, u.clone(), a), &KoszulChain::monomial(f, v.clone(), b))
                        .reduce(i);
                    if is_boundary_oracle(i, &z).unwrap().is_none() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn vanishing_matches_oracle_products((i, f) in (ideal_deg2(2..=4, 2, 5), field())) {
        prop_assert_eq!(monomial_products_vanish(&i, f).unwrap().holds, products_vanish_by_oracle(&i, f));
    }

    #[test]
    fn golod4_implies_vanishing(i in ideal_deg2(4..=4, 2, 6)) {
        if golod4(&i).unwrap().holds {
            for f in fields() {
                prop_assert!(monomial_products_vanish(&i, f).unwrap().holds);
            }
        }
    }

    #[test]
    fn trivial_pairings_imply_vanishing((i, f) in (ideal_deg2(2..=4, 2, 5), field())) {
        let n = i.n();
        let trivial = (2..=n).all(|p| (1..p).all(|q| homology_product_pairing(&i, q, p - q, f).unwrap().is_empty()));
        if trivial {
            prop_assert!(monomial_products_vanish(&i, f).unwrap().holds);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn pair_formula_is_the_boundary_ideal(i in ideal_deg2(4..=4, 2, 6)) {
        for f in fields() {
            for (a, b) in [(1, 2), (1, 3), (2, 4), (3, 4)] {
                let s = VarSet::from_indices(4, [a, b]).unwrap();
                prop_assert_eq!(four_variable_pair_formula(&i, a, b).unwrap(), boundary_ideal(&i, s, f).unwrap().ideal);
            }
        }
    }
}

#[test]
fn degree_one_generators_are_rejected() {
    let i = monocycle::selftest::ideal(3, &["x1", "x2*x3"]);
    assert!(monomial_products_vanish(&i, FieldSpec::RATIONALS).is_err());
    assert!(golod4(&monocycle::selftest::ideal(4, &["x1", "x2*x3"])).is_err());
    assert!(golod4(&monocycle::selftest::ideal(3, &["x1^2"])).is_err());
}
