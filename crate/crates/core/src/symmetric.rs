//! Symmetric monomial ideals, described by the partitions `Λ(I)` whose
//! orbits of monomials generate them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::golod::require_degree_two;
use crate::monomials::{Monomial, MonomialIdeal, VarSet};

/// A weakly decreasing exponent vector of fixed length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&x| x > 0).count()
    }

    /// `λ_i` (1-indexed), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.first() == 0
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.0.clone())
    }

    /// Whether the orbit of `x^self` lies in the ideal generated by the orbit
    /// of `x^other`, i.e. `other ≤ self` part by part.
    pub fn is_multiple_of(&self, other: &Partition) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `Λ(I)` for a symmetric ideal in `n` variables: no partition's orbit lies
/// in the ideal generated by the others.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricIdealSpec {
    n: usize,
    lambdas: Vec<Partition>,
}

impl SymmetricIdealSpec {
    /// Partitions are sorted in decreasing order.
    pub fn new(n: usize, mut lambdas: Vec<Partition>) -> Result<Self> {
        for l in &lambdas {
            if l.n() != n {
                return Err(Error::WrongVariableCount { expected: n, found: l.n() });
            }
        }
        lambdas.sort_by(|a, b| b.cmp(a));
        for (i, l) in lambdas.iter().enumerate() {
            if lambdas.iter().enumerate().any(|(j, m)| i != j && l.is_multiple_of(m)) {
                return Err(Error::RedundantPartition(l.to_string()));
            }
        }
        Ok(SymmetricIdealSpec { n, lambdas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    /// `min{λ_1 : λ ∈ Λ, ℓ(λ) ≤ k}`.
    fn min_first_up_to(&self, k: usize) -> Option<u32> {
        self.lambdas.iter().filter(|l| l.length() <= k).map(Partition::first).min()
    }
}

impl fmt::Display for SymmetricIdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.lambdas.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}", l.0.iter().map(u32::to_string).collect::<Vec<_>>().join(","))?;
        }
        Ok(())
    }
}

/// All distinct rearrangements of `v`, in lexicographic order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// The ideal generated by the `S_n`-orbits of `x^λ`, `λ ∈ Λ`.
pub fn ideal_from_partitions(spec: &SymmetricIdealSpec) -> MonomialIdeal {
    let gens = spec.lambdas.iter().flat_map(|l| distinct_permutations(l.parts())).map(Monomial::new).collect();
    MonomialIdeal::new(spec.n, gens).expect("partition lengths checked")
}

/// `Λ(I)` when `I` is fixed by every permutation of the variables.
pub fn partitions_from_ideal(ideal: &MonomialIdeal) -> Option<SymmetricIdealSpec> {
    if !ideal.is_symmetric() {
        return None;
    }
    let mut lambdas: Vec<Partition> =
        ideal.gens().iter().map(|g| Partition::from_unsorted(g.exponents().to_vec())).collect();
    lambdas.sort();
    lambdas.dedup();
    Some(SymmetricIdealSpec::new(ideal.n(), lambdas).expect("minimal generators are an antichain"))
}

/// `c = min{λ_1 : ℓ(λ) ≤ p−q} − 1`, the exponent for which
/// `(x_1⋯x_q)^c (x_{q+1}⋯x_p)^c` is the critical product in degree `p`.
pub fn critical_exponent(spec: &SymmetricIdealSpec, p: usize, q: usize) -> Result<Option<u32>> {
    if p < 2 || p > spec.n || q == 0 || q > p / 2 {
        return Err(Error::DegreeOutOfRange { n: spec.n, p });
    }
    Ok(spec.min_first_up_to(p - q).map(|m| m - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VpClause {
    V1,
    V2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VpResult {
    pub p: usize,
    pub holds: bool,
    /// The first clause that holds, if any.
    pub via: Option<VpClause>,
}

/// The partition conditions in homological degree `p`.
///
/// With `m = min{λ_1 : ℓ(λ) ≤ ⌈p/2⌉}`: the first clause asks that every `λ`
/// with `ℓ(λ) ≤ ⌊p/2⌋` and `λ_1 = m` has `λ_1 = λ_2`; the second asks for some
/// `μ` with `⌈p/2⌉ < ℓ(μ) ≤ p` and `μ_1 < m`.
pub fn vp_check(spec: &SymmetricIdealSpec, p: usize) -> Result<VpResult> {
    let n = spec.n;
    if p < 2 || p > n {
        return Err(Error::DegreeOutOfRange { n, p });
    }
    let (lo, hi) = (p / 2, p.div_ceil(2));
    let m = spec.min_first_up_to(hi);
    let v1 = match m {
        None => true,
        Some(m) => spec.lambdas.iter().filter(|l| l.length() <= lo && l.first() == m).all(|l| l.part(1) == l.part(2)),
    };
    let v2 = spec.lambdas.iter().any(|mu| mu.length() > hi && mu.length() <= p && m.is_none_or(|m| mu.first() < m));
    let via = if v1 {
        Some(VpClause::V1)
    } else if v2 {
        Some(VpClause::V2)
    } else {
        None
    };
    Ok(VpResult { p, holds: via.is_some(), via })
}

/// Per-degree outcome of the two symmetric vanishing tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricDegree {
    pub p: usize,
    pub holds: bool,
    pub vp: VpResult,
    /// A product outside the target ideal when the inclusion fails.
    pub witness: Option<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricVanishing {
    pub holds: bool,
    pub degrees: Vec<SymmetricDegree>,
}

fn initial(n: usize, lo: usize, hi: usize) -> VarSet {
    VarSet::from_indices(n, lo..=hi).expect("indices in range")
}

/// The inclusion `[I:(x_1..x_q)][I:(x_{q+1}..x_p)] ⊆ I + (x_{p+1},…,x_n)[I:(x_1..x_p)]`
/// with `q = ⌊p/2⌋`; returns a failing product if there is one, preferring
/// `(x_1⋯x_p)^c` with `c` the critical exponent.
pub fn symmetric_inclusion_witness(
    spec: &SymmetricIdealSpec,
    ideal: &MonomialIdeal,
    p: usize,
) -> Result<Option<Monomial>> {
    let n = spec.n;
    let q = p / 2;
    let left = ideal.colon_varset(initial(n, 1, q))?;
    let right = ideal.colon_varset(initial(n, q + 1, p))?;
    let mut target = ideal.clone();
    if p < n {
        let tail = MonomialIdeal::of_vars(n, initial(n, p + 1, n));
        target = target.sum_unchecked(&tail.product_unchecked(&ideal.colon_varset(initial(n, 1, p))?));
    }
    if let Some(c) = critical_exponent(spec, p, q)? {
        let mut e = vec![0; n];
        e[..p].fill(c);
        let f = Monomial::new(e[..q].iter().copied().chain(std::iter::repeat(0).take(n - q)).collect());
        let g = Monomial::new((0..n).map(|i| if i >= q && i < p { c } else { 0 }).collect());
        let w = Monomial::new(e);
        if left.contains(&f) && right.contains(&g) && !target.contains(&w) {
            return Ok(Some(w));
        }
    }
    Ok(left.gens().iter().flat_map(|u| right.gens().iter().map(move |v| u.mul(v))).find(|w| !target.contains(w)))
}

/// Vanishing of products of monomial cycles for a symmetric ideal, decided
/// by the `n−1` inclusions and independently by the partition conditions.
/// The two must agree in every degree.
pub fn symmetric_monprod_vanish(spec: &SymmetricIdealSpec) -> Result<SymmetricVanishing> {
    let ideal = ideal_from_partitions(spec);
    require_degree_two(&ideal)?;
    let mut degrees = Vec::new();
    for p in 2..=spec.n {
        let witness = symmetric_inclusion_witness(spec, &ideal, p)?;
        let vp = vp_check(spec, p)?;
        if vp.holds != witness.is_none() {
            return Err(Error::PathDisagreement { p });
        }
        degrees.push(SymmetricDegree { p, holds: vp.holds, vp, witness });
    }
    Ok(SymmetricVanishing { holds: degrees.iter().all(|d| d.holds), degrees })
}

/// Golodness of the ideal generated by the orbit of one partition: holds iff
/// `ℓ(λ) > ⌊n/2⌋`, or `ℓ(λ) ≤ ⌊n/2⌋` and `λ_1 = λ_2`.
pub fn principal_golod(lambda: &Partition) -> Result<bool> {
    if lambda.is_zero() {
        return Err(Error::InvalidPartition("zero partition".into()));
    }
    if lambda.size() < 2 {
        return Err(Error::DegreeTooLow(lambda.monomial().to_string()));
    }
    let n = lambda.n();
    let l = lambda.length();
    Ok(l > n / 2 || lambda.part(1) == lambda.part(2))
}

/// Whether `x^λ x_k / x_1 ∈ I` for every `λ ∈ Λ` and `k > 1` with `λ_k < λ_1`.
pub fn is_symmetric_shifted(spec: &SymmetricIdealSpec) -> bool {
    let ideal = ideal_from_partitions(spec);
    spec.lambdas.iter().all(|l| {
        let u = l.monomial();
        (2..=spec.n).filter(|&k| l.part(k) < l.first()).all(|k| {
            let v = u.mul_var(k).div_var(1).expect("λ_1 > λ_k ≥ 0");
            ideal.contains(&v)
        })
    })
}

/// Every valid spec in `n` variables with parts at most `max_part` whose
/// generators have degree at least two.
pub fn all_specs(n: usize, max_part: u32) -> Vec<SymmetricIdealSpec> {
    let mut parts: Vec<Partition> = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            if cur.iter().sum::<u32>() >= 2 {
                out.push(Partition(cur.clone()));
            }
            return;
        }
        for x in 0..=bound {
            cur[i] = x;
            rec(i + 1, x, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_part, &mut cur, &mut parts);
    let mut out = Vec::new();
    let mut chosen: Vec<Partition> = Vec::new();
    fn antichains(
        k: usize,
        parts: &[Partition],
        chosen: &mut Vec<Partition>,
        n: usize,
        out: &mut Vec<SymmetricIdealSpec>,
    ) {
        if k == parts.len() {
            if !chosen.is_empty() {
                out.push(SymmetricIdealSpec::new(n, chosen.clone()).expect("antichain"));
            }
            return;
        }
        antichains(k + 1, parts, chosen, n, out);
        let p = &parts[k];
        if chosen.iter().all(|c| !c.is_multiple_of(p) && !p.is_multiple_of(c)) {
            chosen.push(p.clone());
            antichains(k + 1, parts, chosen, n, out);
            chosen.pop();
        }
    }
    antichains(0, &parts, &mut chosen, n, &mut out);
    out
}
