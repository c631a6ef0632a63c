#![allow(dead_code)]

use monocycle::{FieldSpec, Monomial, MonomialIdeal, VarSet};
use proptest::prelude::*;

pub fn fields() -> [FieldSpec; 3] {
    [FieldSpec::RATIONALS, FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()]
}

pub fn field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(fields().to_vec())
}

/// A nonzero monomial ideal with generators of degree at least one.
pub fn ideal(
    n: std::ops::RangeInclusive<usize>,
    max_exp: u32,
    max_gens: usize,
) -> impl Strategy<Value = MonomialIdeal> {
    n.prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_filter_map(
            "unit generator",
            move |gens| {
                if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                    return None;
                }
                MonomialIdeal::new(n, gens.into_iter().map(Monomial::new).collect()).ok()
            },
        )
    })
}

/// Like [`ideal`] but with every generator of degree at least two.
pub fn ideal_deg2(
    n: std::ops::RangeInclusive<usize>,
    max_exp: u32,
    max_gens: usize,
) -> impl Strategy<Value = MonomialIdeal> {
    ideal(n, max_exp, max_gens).prop_filter("degree below two", |i| i.gens().iter().all(|g| g.degree() >= 2))
}

/// All monomials with exponents `<= bound` componentwise.
pub fn box_monomials(bound: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound.exponents() {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=b).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// All monomials of total degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    box_monomials(&Monomial::new(vec![d; n])).into_iter().filter(|m| m.degree() <= d).collect()
}

pub fn nonempty_subsets(n: usize) -> Vec<VarSet> {
    (1..=n).flat_map(|k| VarSet::subsets_of_size(n, k)).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=n).permutations(n).collect()
}

/// Closure of the generators under `u ↦ x_i u / x_j` for `i < j`, `x_j | u`.
pub fn strongly_stable_closure(n: usize, gens: Vec<Monomial>) -> MonomialIdeal {
    let mut seen: std::collections::BTreeSet<Monomial> = gens.into_iter().collect();
    let mut stack: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(u) = stack.pop() {
        for j in u.support().iter() {
            for i in 1..j {
                let v = u.div_var(j).unwrap().mul_var(i);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    MonomialIdeal::new(n, seen.into_iter().collect()).unwrap()
}

/// Squarefree analogue of [`strongly_stable_closure`], requiring `i ∉ supp(u)`.
pub fn squarefree_strongly_stable_closure(n: usize, gens: Vec<Monomial>) -> MonomialIdeal {
    let mut seen: std::collections::BTreeSet<Monomial> = gens.into_iter().collect();
    let mut stack: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(u) = stack.pop() {
        let supp = u.support();
        for j in supp.iter() {
            for i in (1..j).filter(|&i| !supp.contains(i)) {
                let v = u.div_var(j).unwrap().mul_var(i);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    MonomialIdeal::new(n, seen.into_iter().collect()).unwrap()
}

pub fn stable_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=3).prop_filter_map("unit", move |gens| {
            if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                return None;
            }
            Some(strongly_stable_closure(n, gens.into_iter().map(Monomial::new).collect()))
                .filter(|i| i.gens().len() <= 12)
        })
    })
}

pub fn squarefree_stable_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (3usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=1, n), 1..=3).prop_filter_map("unit", move |gens| {
            if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                return None;
            }
            Some(squarefree_strongly_stable_closure(n, gens.into_iter().map(Monomial::new).collect()))
                .filter(|i| i.gens().len() <= 12)
        })
    })
}
