//! Monomials, variable sets and monomial ideals.
//!
//! Variables are 1-indexed (`x1..xn`). Ideals always store their minimal
//! generators in decreasing lexicographic order (`x1 > x2 > …`).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of variables (a [`VarSet`] is a `u32` bitmask).
pub const MAX_VARS: usize = 32;

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i` (1-indexed).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    /// The squarefree monomial `x_A = ∏_{a∈A} x_a`.
    pub fn of_set(n: usize, a: VarSet) -> Self {
        let mut e = vec![0; n];
        for i in a.iter() {
            e[i - 1] = 1;
        }
        Monomial(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-indexed).
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self · x_i`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i - 1] += 1;
        Monomial(e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    /// `self / x_i`, or `None` when `x_i` does not divide `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        let mut e = self.0.clone();
        e[i - 1] = e[i - 1].checked_sub(1)?;
        Some(Monomial(e))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_bits(self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |b, (i, _)| b | (1 << i)))
    }

    /// Largest index of a variable dividing `self`; 0 for the identity.
    pub fn max_var(&self) -> usize {
        self.0.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Image under `x_i ↦ x_{π(i)}`, with `perm[i-1] = π(i)`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            e[perm[i] - 1] = x;
        }
        Monomial(e)
    }

    /// Exponents sorted in decreasing order.
    pub fn sorted_exponents(&self) -> Vec<u32> {
        let mut e = self.0.clone();
        e.sort_unstable_by(|a, b| b.cmp(a));
        e
    }

    /// Graded reverse lexicographic comparison with `x1 > x2 > … > xn`;
    /// `Greater` means `self` comes first in the order.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    /// Graded lexicographic comparison with `x1 > x2 > … > xn`.
    pub fn cmp_glex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A subset of `{1..n}` stored as a bitmask (bit `i-1` for index `i`).
///
/// Ordering is lexicographic on the increasing element lists, so
/// `{1,2,3} < {1,2,4} < {1,3,4} < {2,3,4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(1 << (i - 1))
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    /// Builds a set from 1-indexed members, checking they lie in `1..=n`.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u32;
        for i in indices {
            if i == 0 || i > n || i > MAX_VARS {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            bits |= 1 << (i - 1);
        }
        Ok(VarSet(bits))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_VARS).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl DoubleEndedIterator<Item = usize> + Clone {
        (0..32usize).filter(move |i| self.0 & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Number of members strictly below `j`.
    pub fn count_below(self, j: usize) -> usize {
        (self.0 & ((1u32 << (j - 1)) - 1)).count_ones() as usize
    }

    /// Image under `i ↦ π(i)`, with `perm[i-1] = π(i)`.
    pub fn permute(self, perm: &[usize]) -> Self {
        VarSet(self.iter().fold(0, |b, i| b | 1 << (perm[i - 1] - 1)))
    }

    /// All `k`-element subsets of `{1..n}` in lexicographic order.
    pub fn subsets_of_size(n: usize, k: usize) -> Vec<VarSet> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<VarSet>) {
            if cur.len() == k {
                out.push(VarSet(cur.iter().fold(0, |b, &i| b | 1 << (i - 1))));
                return;
            }
            for i in start..=n {
                if n - i + 1 < k - cur.len() {
                    break;
                }
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut cur, &mut out);
        out
    }

    /// All subsets of `self` (including empty and `self`), by bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut sub = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            sub = sub.wrapping_sub(full) & full;
            if sub == 0 {
                done = true;
            }
            Some(VarSet(cur))
        })
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VarSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        VarSet::from_indices(MAX_VARS, v).map_err(serde::de::Error::custom)
    }
}

/// Checks that `perm` is a permutation of `1..=n` given as `perm[i-1] = π(i)`.
pub fn validate_permutation(n: usize, perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidPermutation { n });
    }
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::InvalidPermutation { n });
        }
        seen[p - 1] = true;
    }
    Ok(())
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Drops non-minimal and duplicate generators and sorts the rest.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, found: n });
        }
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::WrongVariableCount { expected: n, found: g.n() });
        }
        Ok(Self::from_parts(n, gens))
    }

    /// Builds from exponent vectors.
    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub(crate) fn from_parts(n: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// The ideal `(x_i : i ∈ a)`.
    pub fn of_vars(n: usize, a: VarSet) -> Self {
        Self::from_parts(n, a.iter().map(|i| Monomial::var(n, i)).collect())
    }

    pub fn principal(u: Monomial) -> Self {
        let n = u.n();
        MonomialIdeal { n, gens: vec![u] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    fn check_n(&self, other: usize) -> Result<()> {
        if self.n == other {
            Ok(())
        } else {
            Err(Error::VariableCountMismatch { left: self.n, right: other })
        }
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Membership with a variable-count check.
    pub fn membership(&self, u: &Monomial) -> Result<bool> {
        self.check_n(u.n())?;
        Ok(self.contains(u))
    }

    /// `I : m`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        Self::from_parts(self.n, self.gens.iter().map(|g| g.div(&g.gcd(m)).expect("gcd divides")).collect())
    }

    /// `I : (x_i : i ∈ a)`, the intersection of the colons by each variable.
    pub fn colon_varset(&self, a: VarSet) -> Result<MonomialIdeal> {
        if a.is_empty() {
            return Err(Error::EmptyVarSet);
        }
        if let Some(m) = a.last() {
            if m > self.n {
                return Err(Error::IndexOutOfRange { index: m, n: self.n });
            }
        }
        let mut acc: Option<MonomialIdeal> = None;
        for i in a.iter() {
            let c = self.colon_monomial(&Monomial::var(self.n, i));
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect_unchecked(&c),
            });
        }
        Ok(acc.expect("nonempty"))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Self::from_parts(self.n, g)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Self::from_parts(self.n, g)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.lcm(b));
            }
        }
        Self::from_parts(self.n, g)
    }

    /// Sum of a list of ideals; `None` for an empty list.
    pub fn sum_all(ideals: &[MonomialIdeal]) -> Result<Option<MonomialIdeal>> {
        let Some(first) = ideals.first() else { return Ok(None) };
        ideals[1..].iter().try_fold(first.clone(), |acc, i| acc.sum(i)).map(Some)
    }

    pub fn product_all(ideals: &[MonomialIdeal]) -> Result<Option<MonomialIdeal>> {
        let Some(first) = ideals.first() else { return Ok(None) };
        ideals[1..].iter().try_fold(first.clone(), |acc, i| acc.product(i)).map(Some)
    }

    pub fn intersection_all(ideals: &[MonomialIdeal]) -> Result<Option<MonomialIdeal>> {
        let Some(first) = ideals.first() else { return Ok(None) };
        ideals[1..].iter().try_fold(first.clone(), |acc, i| acc.intersection(i)).map(Some)
    }

    /// `m · I`.
    pub fn times_monomial(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal { n: self.n, gens: self.gens.iter().map(|g| g.mul(m)).collect::<Vec<_>>() }.resorted()
    }

    fn resorted(mut self) -> Self {
        self.gens.sort_by(|a, b| b.cmp(a));
        self
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_n(other.n)?;
        Ok(self.gens.iter().all(|g| other.contains(g)))
    }

    /// First generator of `self` outside `other`, if any.
    pub fn first_outside(&self, other: &MonomialIdeal) -> Option<&Monomial> {
        self.gens.iter().find(|g| !other.contains(g))
    }

    /// Image under `x_i ↦ x_{π(i)}`, with `perm[i-1] = π(i)`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        validate_permutation(self.n, perm)?;
        Ok(MonomialIdeal { n: self.n, gens: self.gens.iter().map(|g| g.permute(perm)).collect() }.resorted())
    }

    /// Whether `π(I) = I`.
    pub fn is_invariant_under(&self, perm: &[usize]) -> bool {
        self.gens.iter().all(|g| self.contains(&g.permute(perm)))
    }

    /// Whether the ideal is fixed by every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        // transpositions (1 i) generate S_n
        (2..=self.n).all(|i| {
            let mut perm: Vec<usize> = (1..=self.n).collect();
            perm.swap(0, i - 1);
            self.is_invariant_under(&perm)
        })
    }

    /// Whether every generator is squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn j() -> MonomialIdeal {
        ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]])
    }

    fn vs(n: usize, v: &[usize]) -> VarSet {
        VarSet::from_indices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn display_and_basic_ops() {
        assert_eq!(m(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(m(&[1, 0, 2]).max_var(), 3);
        assert_eq!(m(&[2, 1]).div(&m(&[1, 2])), None);
        assert_eq!(j().to_string(), "(x1*x3, x1*x4, x2*x3, x2*x4)");
    }

    #[test]
    fn varset_order_is_lex() {
        let subs = VarSet::subsets_of_size(4, 3);
        let names: Vec<String> = subs.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["{1,2,3}", "{1,2,4}", "{1,3,4}", "{2,3,4}"]);
        let mut shuffled = vec![subs[3], subs[0], subs[2], subs[1]];
        shuffled.sort();
        assert_eq!(shuffled, subs);
        assert_eq!(vs(4, &[1, 2, 4]).count_below(4), 2);
        assert_eq!(vs(5, &[2, 5]).subsets().count(), 4);
        assert!(VarSet::from_indices(3, [4]).is_err());
    }

    #[test]
    fn membership_examples() {
        let big = j()
            .sum(
                &MonomialIdeal::of_vars(4, vs(4, &[3, 4])).product(&MonomialIdeal::of_vars(4, vs(4, &[3, 4]))).unwrap(),
            )
            .unwrap();
        assert!(big.contains(&m(&[0, 0, 1, 1])));
        assert!(j().contains(&m(&[1, 0, 1, 0])));
        assert!(!j().contains(&m(&[1, 1, 0, 0])));
    }

    #[test]
    fn colon_examples() {
        let j = j();
        assert_eq!(j.colon_monomial(&Monomial::var(4, 1)), MonomialIdeal::of_vars(4, vs(4, &[3, 4])));
        assert_eq!(j.colon_monomial(&Monomial::one(4)), j);
        // x1x2 meets every generator in one variable
        assert_eq!(j.colon_monomial(&m(&[1, 1, 0, 0])), MonomialIdeal::of_vars(4, vs(4, &[3, 4])));
        assert_eq!(j.colon_varset(vs(4, &[1, 2])).unwrap(), MonomialIdeal::of_vars(4, vs(4, &[3, 4])));
        assert_eq!(j.colon_varset(vs(4, &[1, 2, 3])).unwrap(), j);
        let i = ideal(3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(i.colon_varset(vs(3, &[1, 2])).unwrap(), ideal(3, &[&[0, 0, 1]]));
        assert_eq!(i.colon_varset(VarSet::EMPTY), Err(Error::EmptyVarSet));
    }

    #[test]
    fn sum_product_intersection_examples() {
        let i = ideal(3, &[&[1, 0, 1], &[0, 1, 1]]);
        let c = i.colon_varset(vs(3, &[1, 2])).unwrap().times_monomial(&Monomial::var(3, 3));
        assert_eq!(i.sum(&c).unwrap(), ideal(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]));
        assert_eq!(i.sum(&i).unwrap(), i);
        assert_eq!(i.intersection(&i).unwrap(), i);
        let m34 = MonomialIdeal::of_vars(4, vs(4, &[3, 4]));
        let a = m34.times_monomial(&Monomial::var(4, 3));
        let b = m34.times_monomial(&Monomial::var(4, 4));
        assert_eq!(a.intersection(&b).unwrap(), ideal(4, &[&[0, 0, 1, 1]]));
    }

    #[test]
    fn inclusion_examples() {
        let j = j();
        let m34 = MonomialIdeal::of_vars(4, vs(4, &[3, 4]));
        let sq = m34.product(&m34).unwrap();
        let prod = j.colon_monomial(&Monomial::var(4, 1)).product(&j.colon_monomial(&Monomial::var(4, 2))).unwrap();
        assert_eq!(prod, sq);
        assert!(prod.is_subset_of(&j.sum(&sq).unwrap()).unwrap());
        let x3 = ideal(3, &[&[0, 0, 1]]);
        let b = ideal(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        assert!(!x3.is_subset_of(&b).unwrap());
        assert!(j.is_subset_of(&j).unwrap());
    }

    #[test]
    fn permutation_examples() {
        let j = j();
        assert_eq!(j.permute(&[1, 2, 3, 4]).unwrap(), j);
        assert_eq!(j.permute(&[3, 4, 1, 2]).unwrap(), j);
        let i = ideal(3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(i.permute(&[2, 1, 3]).unwrap(), i);
        assert!(i.permute(&[1, 1, 3]).is_err());
        assert!(!j.is_symmetric());
    }

    #[test]
    fn mismatched_counts_are_rejected() {
        assert!(MonomialIdeal::new(3, vec![m(&[1, 0])]).is_err());
        assert!(j().sum(&MonomialIdeal::zero(3)).is_err());
    }
}
