mod common;

use std::collections::BTreeSet;

use common::{fields, permutations};
use monocycle::simplicial_matroid::{
    circuits_through, circuits_through_brute, closed_form, closed_form_source, row_rank, Circuit, SignMatrixSpec,
};
use monocycle::{FieldSpec, VarSet};

fn all_circuits(spec: SignMatrixSpec) -> BTreeSet<Circuit> {
    VarSet::subsets_of_size(spec.n, spec.p).into_iter().flat_map(|s| circuits_through(spec, s).unwrap()).collect()
}

fn shapes(max_n: usize) -> Vec<(usize, usize)> {
    (2..=max_n).flat_map(|n| (1..n).map(move |p| (n, p))).collect()
}

#[test]
fn circuits_are_minimal_dependent_sets() {
    for (n, p) in shapes(5) {
        for f in fields() {
            let spec = SignMatrixSpec::new(n, p, f).unwrap();
            for c in all_circuits(spec) {
                let rows = c.members();
                assert_eq!(row_rank(spec, rows).unwrap(), rows.len() - 1, "{n} {p} {f} {c}");
                for k in 0..rows.len() {
                    let mut rest = rows.to_vec();
                    rest.remove(k);
                    assert_eq!(row_rank(spec, &rest).unwrap(), rest.len(), "{n} {p} {f} {c}");
                }
            }
        }
    }
}

#[test]
fn circuit_axioms() {
    for (n, p) in shapes(5) {
        for f in fields() {
            let all: Vec<Circuit> = all_circuits(SignMatrixSpec::new(n, p, f).unwrap()).into_iter().collect();
            let sets: Vec<BTreeSet<VarSet>> = all.iter().map(|c| c.members().iter().copied().collect()).collect();
            for (a, sa) in sets.iter().enumerate() {
                for (b, sb) in sets.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    assert!(!sa.is_subset(sb), "{} inside {}", all[a], all[b]);
                    for e in sa.intersection(sb) {
                        let mut u: BTreeSet<VarSet> = sa.union(sb).copied().collect();
                        u.remove(e);
                        assert!(sets.iter().any(|s| s.is_subset(&u)), "elimination fails for {} {}", all[a], all[b]);
                    }
                }
            }
        }
    }
}

#[test]
fn closed_forms_match_brute_force() {
    for (n, p) in shapes(6) {
        let Some(src) = closed_form_source(n, p) else { continue };
        for f in fields() {
            let spec = SignMatrixSpec::new(n, p, f).unwrap();
            let sigmas = VarSet::subsets_of_size(n, p);
            let take = if n == 6 { 3 } else { sigmas.len() };
            for &s in &sigmas[..take] {
                assert_eq!(closed_form(n, p, s, src), circuits_through_brute(spec, s).unwrap(), "{n} {p} {f} {s}");
            }
        }
    }
}

#[test]
fn closed_form_shapes_are_characteristic_free() {
    for (n, p) in shapes(5) {
        if closed_form_source(n, p).is_none() {
            continue;
        }
        let s = VarSet::full(p);
        let q = circuits_through_brute(SignMatrixSpec::new(n, p, FieldSpec::RATIONALS).unwrap(), s).unwrap();
        let two = circuits_through_brute(SignMatrixSpec::new(n, p, FieldSpec::prime(2).unwrap()).unwrap(), s).unwrap();
        assert_eq!(q, two, "{n} {p}");
    }
}

#[test]
fn middle_degree_six_depends_only_on_characteristic_two() {
    let s = VarSet::full(3);
    let get = |f: FieldSpec| circuits_through(SignMatrixSpec::new(6, 3, f).unwrap(), s).unwrap();
    let (q, two, three) =
        (get(FieldSpec::RATIONALS), get(FieldSpec::prime(2).unwrap()), get(FieldSpec::prime(3).unwrap()));
    assert_eq!(q, three);
    assert_ne!(q, two);
    assert_eq!((q.len(), two.len()), (255, 195));
}

#[test]
fn permutation_equivariance() {
    for (n, p) in shapes(5) {
        for f in fields() {
            let spec = SignMatrixSpec::new(n, p, f).unwrap();
            let sigma = VarSet::full(p);
            let base = circuits_through_brute(spec, sigma).unwrap();
            for perm in permutations(n) {
                let mut want: Vec<Circuit> = base.iter().map(|c| c.permute(&perm)).collect();
                want.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
                assert_eq!(circuits_through_brute(spec, sigma.permute(&perm)).unwrap(), want, "{n} {p} {f} {perm:?}");
            }
        }
    }
}
