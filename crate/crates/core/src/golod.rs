//! Vanishing of products of monomial cycles, and the four-variable Golod
//! criterion.
//!
//! Products of monomial cycles `ū e_A` and `v̄ e_B` vanish in homology for all
//! disjoint `A, B` exactly when `[I:A][I:B] ⊆ B^{n,A∪B}_I` for every such pair,
//! where `[I:A]` is shorthand for `I : (x_a : a ∈ A)`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boundary_ideal::{lower_bound, BoundaryMembership};
use crate::error::{Error, Result};
use crate::exactalg::FieldSpec;
use crate::monomials::{Monomial, MonomialIdeal, VarSet};

/// Largest `n` for which the automorphism group is enumerated to skip
/// equivalent pairs.
const SYMMETRY_SEARCH_MAX_N: usize = 7;

/// One failed inclusion: `left · right ∉` target, with `left ∈ [I:A]` and
/// `right ∈ [I:B]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionFailure {
    pub p: usize,
    pub a: VarSet,
    pub b: VarSet,
    pub left: Monomial,
    pub right: Monomial,
    pub witness: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionReport {
    pub holds: bool,
    pub failures: Vec<InclusionFailure>,
}

impl InclusionReport {
    fn from_failures(failures: Vec<InclusionFailure>) -> Self {
        InclusionReport { holds: failures.is_empty(), failures }
    }
}

pub(crate) fn require_degree_two(ideal: &MonomialIdeal) -> Result<()> {
    match ideal.gens().iter().find(|g| g.degree() < 2) {
        Some(g) => Err(Error::DegreeTooLow(g.to_string())),
        None => Ok(()),
    }
}

fn require_four(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.n() != 4 {
        return Err(Error::WrongVariableCount { expected: 4, found: ideal.n() });
    }
    Ok(())
}

/// First generator product `u·v` (`u ∈ G(left)`, `v ∈ G(right)`, in stored
/// order) rejected by `inside`.
fn first_failure(
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    inside: impl Fn(&Monomial) -> bool,
) -> Option<(Monomial, Monomial, Monomial)> {
    left.gens().iter().find_map(|u| {
        right.gens().iter().find_map(|v| {
            let w = u.mul(v);
            (!inside(&w)).then(|| (u.clone(), v.clone(), w))
        })
    })
}

/// All permutations `π` (as `perm[i-1] = π(i)`) with `π(I) = I`; only the
/// identity when `n` is too large to search.
pub fn automorphisms(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let n = ideal.n();
    let identity: Vec<usize> = (1..=n).collect();
    if n > SYMMETRY_SEARCH_MAX_N {
        return vec![identity];
    }
    (1..=n).permutations(n).filter(|p| ideal.is_invariant_under(p)).collect()
}

/// Sort key of an unordered pair: `(|A∪B|, A∪B, A)` with `A ∋ min(A∪B)`.
fn pair_key(a: VarSet, b: VarSet) -> (usize, VarSet, VarSet) {
    let u = a.union(b);
    let first = if a.contains(u.first().expect("nonempty")) { a } else { b };
    (u.len(), u, first)
}

/// Unordered disjoint pairs `{A, B}` of nonempty sets with `|A∪B| ≥ 2`, in
/// canonical order, one per orbit of `group`.
fn canonical_pairs(n: usize, group: &[Vec<usize>]) -> Vec<(VarSet, VarSet)> {
    let mut out = Vec::new();
    for p in 2..=n {
        for u in VarSet::subsets_of_size(n, p) {
            let lo = u.first().expect("nonempty");
            let mut firsts: Vec<VarSet> = u.without(lo).subsets().map(|s| s.with(lo)).filter(|a| *a != u).collect();
            firsts.sort();
            for a in firsts {
                let b = u.difference(a);
                let key = pair_key(a, b);
                if group.iter().all(|g| pair_key(a.permute(g), b.permute(g)) >= key) {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

/// Checks `[I:A][I:B] ⊆ B^{n,A∪B}_I` over all unordered disjoint pairs with
/// `2 ≤ |A∪B| ≤ n`. Pairs related by a symmetry of `I` are checked once, so
/// failures list one representative per orbit.
pub fn monomial_products_vanish(ideal: &MonomialIdeal, field: FieldSpec) -> Result<InclusionReport> {
    require_degree_two(ideal)?;
    let n = ideal.n();
    let group = automorphisms(ideal);
    let pairs = canonical_pairs(n, &group);
    let failures: Vec<Option<InclusionFailure>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let u = a.union(b);
            let left = ideal.colon_varset(a)?;
            let right = ideal.colon_varset(b)?;
            if left.is_zero() || right.is_zero() {
                return Ok(None);
            }
            let lower = lower_bound(ideal, u)?;
            let product = left.product_unchecked(&right);
            if product.gens().iter().all(|w| lower.contains(w)) {
                return Ok(None);
            }
            let member = BoundaryMembership::new(ideal, u, field)?;
            Ok(first_failure(&left, &right, |w| lower.contains(w) || member.contains(w))
                .map(|(left, right, witness)| InclusionFailure { p: u.len(), a, b, left, right, witness }))
        })
        .collect::<Result<_>>()?;
    Ok(InclusionReport::from_failures(failures.into_iter().flatten().collect()))
}

fn colon(ideal: &MonomialIdeal, idx: &[usize]) -> MonomialIdeal {
    ideal
        .colon_varset(VarSet::from_indices(ideal.n(), idx.iter().copied()).expect("indices in range"))
        .expect("nonempty")
}

fn var(i: usize) -> Monomial {
    Monomial::var(4, i)
}

fn set(idx: &[usize]) -> VarSet {
    VarSet::from_indices(4, idx.iter().copied()).expect("indices in range")
}

/// The four-variable expression for `B^{4,{i,j}}_I`, with `{k,l}` the other
/// two indices:
/// `I + (x_k,x_l)[I:(x_i,x_j)] + (x_k x_l)[I:x_i x_j] ∩ (x_k[I:x_i] ∩ x_l[I:x_j] + x_k[I:x_j] ∩ x_l[I:x_i])`.
pub fn four_variable_pair_formula(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<MonomialIdeal> {
    require_four(ideal)?;
    let rest = VarSet::full(4).difference(set(&[i, j]));
    let (k, l) = rest.iter().collect_tuple().ok_or(Error::SubsetSizeMismatch { left: rest.len(), right: 2 })?;
    let ci = colon(ideal, &[i]);
    let cj = colon(ideal, &[j]);
    let cross1 = ci.times_monomial(&var(k)).intersect_unchecked(&cj.times_monomial(&var(l)));
    let cross2 = cj.times_monomial(&var(k)).intersect_unchecked(&ci.times_monomial(&var(l)));
    let corner = ideal
        .colon_monomial(&var(i).mul(&var(j)))
        .times_monomial(&var(k).mul(&var(l)))
        .intersect_unchecked(&cross1.sum_unchecked(&cross2));
    let middle = MonomialIdeal::of_vars(4, rest).product_unchecked(&colon(ideal, &[i, j]));
    Ok(ideal.sum_unchecked(&middle).sum_unchecked(&corner))
}

fn family(
    ideal: &MonomialIdeal,
    p: usize,
    a: VarSet,
    b: VarSet,
    target: &MonomialIdeal,
    out: &mut Vec<InclusionFailure>,
) {
    let left = ideal.colon_varset(a).expect("nonempty");
    let right = ideal.colon_varset(b).expect("nonempty");
    if let Some((left, right, witness)) = first_failure(&left, &right, |w| target.contains(w)) {
        out.push(InclusionFailure { p, a, b, left, right, witness });
    }
}

fn h1h3_failures(ideal: &MonomialIdeal, out: &mut Vec<InclusionFailure>) {
    for i in 1..=4 {
        let a = set(&[i]);
        family(ideal, 4, a, VarSet::full(4).difference(a), ideal, out);
    }
}

/// The four-variable Golod test: `I` is Golod iff all four families of
/// inclusions hold under every permutation of the variables. Failures are
/// listed in the order: pair-of-variables, variable-and-pair, the two
/// four-index families.
pub fn golod4(ideal: &MonomialIdeal) -> Result<InclusionReport> {
    require_four(ideal)?;
    require_degree_two(ideal)?;
    let mut failures = Vec::new();
    for (i, j) in (1..=4).tuple_combinations() {
        let target = four_variable_pair_formula(ideal, i, j)?;
        family(ideal, 2, set(&[i]), set(&[j]), &target, &mut failures);
    }
    for i in 1..=4 {
        for (j, k) in (1..=4).filter(|&x| x != i).tuple_combinations() {
            let l = VarSet::full(4).difference(set(&[i, j, k])).first().expect("one index left");
            let target = ideal.sum_unchecked(&colon(ideal, &[i, j, k]).times_monomial(&var(l)));
            family(ideal, 3, set(&[i]), set(&[j, k]), &target, &mut failures);
        }
    }
    for x in 2..=4 {
        let a = set(&[1, x]);
        family(ideal, 4, a, VarSet::full(4).difference(a), ideal, &mut failures);
    }
    h1h3_failures(ideal, &mut failures);
    Ok(InclusionReport::from_failures(failures))
}

/// Whether `H_1 ⊗ H_3 → H_4` vanishes in four variables, i.e.
/// `[I:x_i][I:(x_j,x_k,x_l)] ⊆ I` for each `i`.
pub fn h1h3_product_trivial(ideal: &MonomialIdeal) -> Result<bool> {
    require_four(ideal)?;
    let mut failures = Vec::new();
    h1h3_failures(ideal, &mut failures);
    Ok(failures.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn j() -> MonomialIdeal {
        ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]])
    }

    fn squares_times_max() -> MonomialIdeal {
        let m = MonomialIdeal::of_vars(4, VarSet::full(4));
        let sq = ideal(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]);
        m.product(&sq).unwrap()
    }

    #[test]
    fn j_is_golod() {
        assert!(golod4(&j()).unwrap().holds);
        assert!(monomial_products_vanish(&j(), q()).unwrap().holds);
        assert!(h1h3_product_trivial(&j()).unwrap());
    }

    #[test]
    fn squares_times_max_fails_in_top_degree() {
        let i = squares_times_max();
        assert_eq!(i.gens().len(), 16);
        let r = monomial_products_vanish(&i, q()).unwrap();
        assert!(!r.holds);
        let f = &r.failures[0];
        assert_eq!(f.p, 4);
        assert_eq!(f.witness, Monomial::new(vec![1, 1, 1, 1]));
        assert!(!golod4(&i).unwrap().holds);
    }

    #[test]
    fn canonical_pairs_without_symmetry() {
        let id = vec![(1..=4).collect::<Vec<_>>()];
        // (3^4 - 2·2^4 + 1)/2 unordered pairs of disjoint nonempty sets
        assert_eq!(canonical_pairs(4, &id).len(), 25);
    }

    #[test]
    fn degree_one_generators_are_rejected() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert!(matches!(monomial_products_vanish(&i, q()), Err(Error::DegreeTooLow(_))));
        assert!(golod4(&i).is_err());
    }
}
