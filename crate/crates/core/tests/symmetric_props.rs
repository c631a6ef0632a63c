use monocycle::golod::monomial_products_vanish;
use monocycle::symmetric::{
    all_specs, critical_exponent, ideal_from_partitions, partitions_from_ideal, principal_golod,
    symmetric_monprod_vanish, vp_check, Partition,
};
use monocycle::{FieldSpec, Monomial};
use rayon::prelude::*;

fn degree_two_specs(n: usize) -> Vec<monocycle::symmetric::SymmetricIdealSpec> {
    all_specs(n, 3).into_iter().filter(|s| s.lambdas().iter().all(|l| l.size() >= 2)).collect()
}

#[test]
fn v2_implies_v3() {
    for n in 3..=5 {
        for s in all_specs(n, 3) {
            if vp_check(&s, 2).unwrap().holds {
                assert!(vp_check(&s, 3).unwrap().holds, "{s}");
            }
        }
    }
}

#[test]
fn no_four_variable_spec_satisfies_only_v3() {
    for s in all_specs(4, 3) {
        let holding: Vec<usize> = (2..=4).filter(|&p| vp_check(&s, p).unwrap().holds).collect();
        assert_ne!(holding, vec![3], "{s}");
    }
}

#[test]
fn paths_agree_up_to_four_variables() {
    for n in 2..=4 {
        for s in degree_two_specs(n) {
            symmetric_monprod_vanish(&s).unwrap();
        }
    }
}

#[test]
fn symmetric_vanishing_matches_general_check() {
    let specs: Vec<_> = (2..=4).flat_map(degree_two_specs).collect();
    specs.par_iter().for_each(|s| {
        let i = ideal_from_partitions(s);
        assert_eq!(
            symmetric_monprod_vanish(s).unwrap().holds,
            monomial_products_vanish(&i, FieldSpec::RATIONALS).unwrap().holds,
            "{s}"
        );
    });
}

#[test]
fn failing_degrees_have_critical_witness() {
    for n in 2..=4 {
        for s in degree_two_specs(n) {
            for d in symmetric_monprod_vanish(&s).unwrap().degrees {
                let Some(w) = d.witness else { continue };
                let c = critical_exponent(&s, d.p, d.p / 2).unwrap().expect("a witness needs a short partition");
                let want: Vec<u32> = (0..n).map(|i| if i < d.p { c } else { 0 }).collect();
                assert_eq!(w, Monomial::new(want), "{s} p={}", d.p);
            }
        }
    }
}

#[test]
fn principal_verdict_matches_vanishing_up_to_five_variables() {
    for n in 2..=5 {
        for s in all_specs(n, 3).into_iter().filter(|s| s.lambdas().len() == 1) {
            let l: &Partition = &s.lambdas()[0];
            if l.size() < 2 {
                continue;
            }
            let holds = monomial_products_vanish(&ideal_from_partitions(&s), FieldSpec::RATIONALS).unwrap().holds;
            assert_eq!(principal_golod(l).unwrap(), holds, "{l}");
        }
    }
}

#[test]
fn partitions_round_trip() {
    for n in 2..=4 {
        for s in all_specs(n, 3) {
            assert_eq!(partitions_from_ideal(&ideal_from_partitions(&s)), Some(s.clone()));
        }
    }
}
