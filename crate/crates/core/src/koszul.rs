//! The Koszul complex of `R = S/I` in its multigraded strands.
//!
//! A chain is a finite sum of terms `c · ū e_σ`. The term has multidegree
//! `u · x_σ`. The strand at multidegree `a` in homological degree `p` has
//! basis `{ e_σ : |σ| = p, x_σ | x^a, x^a / x_σ ∉ I }`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, FieldSpec, Scalar};
use crate::monomials::{Monomial, MonomialIdeal, VarSet};
use crate::simplicial_matroid::sign_below;

/// A multidegree, written as the monomial `x^a`.
pub type Multidegree = Monomial;

/// Largest generator count for lcm-lattice enumeration.
pub const LCM_LATTICE_CAP: usize = 20;

/// An element of `K_p` over a fixed field, keyed by `(σ, monomial)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulChain {
    n: usize,
    p: usize,
    field: FieldSpec,
    terms: BTreeMap<(VarSet, Monomial), Scalar>,
}

impl KoszulChain {
    pub fn zero(n: usize, p: usize, field: FieldSpec) -> Self {
        KoszulChain { n, p, field, terms: BTreeMap::new() }
    }

    /// The single term `ū e_σ`.
    pub fn monomial(field: FieldSpec, u: Monomial, sigma: VarSet) -> Self {
        let mut c = Self::zero(u.n(), sigma.len(), field);
        c.add_term(sigma, u, field.one());
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in `(σ, monomial)` order.
    pub fn terms(&self) -> impl Iterator<Item = (VarSet, &Monomial, &Scalar)> {
        self.terms.iter().map(|((s, m), c)| (*s, m, c))
    }

    /// Adds `coeff · m e_σ`, dropping the term if it cancels.
    pub fn add_term(&mut self, sigma: VarSet, m: Monomial, coeff: Scalar) {
        assert_eq!(sigma.len(), self.p, "term degree differs from chain degree");
        let f = self.field;
        if f.is_zero(&coeff) {
            return;
        }
        let key = (sigma, m);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = f.add(c, &coeff);
                if f.is_zero(c) {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Sum of two chains; a zero chain is compatible with any degree.
    pub fn add(&self, other: &KoszulChain) -> KoszulChain {
        if self.is_zero() {
            return other.clone();
        }
        let mut out = self.clone();
        for (s, m, c) in other.terms() {
            out.add_term(s, m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> KoszulChain {
        let f = self.field;
        let mut out = Self::zero(self.n, self.p, f);
        for (s, m, x) in self.terms() {
            out.add_term(s, m.clone(), f.mul(c, x));
        }
        out
    }

    pub fn neg(&self) -> KoszulChain {
        self.scale(&self.field.from_i64(-1))
    }

    /// Drops terms whose monomial lies in `I`.
    pub fn reduce(&self, ideal: &MonomialIdeal) -> KoszulChain {
        let mut out = self.clone();
        out.terms.retain(|(_, m), _| !ideal.contains(m));
        out
    }

    pub fn is_reduced(&self, ideal: &MonomialIdeal) -> bool {
        self.terms.keys().all(|(_, m)| !ideal.contains(m))
    }

    /// The common multidegree of all terms; `None` for zero or mixed chains.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut degs = self.terms.keys().map(|(s, m)| term_multidegree(*s, m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Multidegrees of the individual terms, in term order.
    pub fn term_multidegrees(&self) -> Vec<Multidegree> {
        self.terms.keys().map(|(s, m)| term_multidegree(*s, m)).collect()
    }
}

pub(crate) fn term_multidegree(sigma: VarSet, m: &Monomial) -> Multidegree {
    m.mul(&Monomial::of_set(m.n(), sigma))
}

impl fmt::Display for KoszulChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (s, m, c)) in self.terms().enumerate() {
            let v = c.as_i64(self.field);
            let (neg, mag) = match (&v, c) {
                (Some(v), _) if *v < 0 => (true, (-v).to_string()),
                (Some(v), _) => (false, v.to_string()),
                (None, Scalar::Rational(r)) if r < &num_rational::BigRational::from_integer(0.into()) => {
                    (true, (-r).to_string())
                }
                (None, c) => (false, c.to_string()),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != "1" {
                write!(f, "{mag}*")?;
            }
            write!(f, "{m} e{s}")?;
        }
        Ok(())
    }
}

/// `∂(f̄ e_σ) = Σ_{j∈σ} sgn(σ,j) x_j f̄ e_{σ∖j}`, reduced modulo `I`.
pub fn differential(ideal: &MonomialIdeal, c: &KoszulChain) -> KoszulChain {
    let f = c.field;
    let mut out = KoszulChain::zero(c.n, c.p.saturating_sub(1), f);
    if c.p == 0 {
        return out;
    }
    for (s, m, x) in c.terms() {
        for j in s.iter() {
            let mm = m.mul_var(j);
            if ideal.contains(&mm) {
                continue;
            }
            let coeff = if sign_below(s, j) > 0 { x.clone() } else { f.neg(x) };
            out.add_term(s.without(j), mm, coeff);
        }
    }
    out
}

/// Sign of `e_σ ∧ e_τ = ± e_{σ∪τ}` for disjoint `σ, τ`.
pub fn shuffle_sign(sigma: VarSet, tau: VarSet) -> i64 {
    let inversions: usize = tau.iter().map(|t| sigma.len() - sigma.count_below(t)).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exterior product extended bilinearly (not reduced modulo any ideal).
pub fn wedge(c1: &KoszulChain, c2: &KoszulChain) -> KoszulChain {
    assert_eq!(c1.field, c2.field, "chains over different fields");
    let f = c1.field;
    let mut out = KoszulChain::zero(c1.n, c1.p + c2.p, f);
    for (s, m, x) in c1.terms() {
        for (t, n, y) in c2.terms() {
            if !s.is_disjoint(t) {
                continue;
            }
            let mut coeff = f.mul(x, y);
            if shuffle_sign(s, t) < 0 {
                coeff = f.neg(&coeff);
            }
            out.add_term(s.union(t), m.mul(n), coeff);
        }
    }
    out
}

/// Basis of the strand `K_p` at multidegree `a`, in lexicographic order.
pub fn strand_basis(ideal: &MonomialIdeal, p: usize, a: &Multidegree) -> Vec<VarSet> {
    let n = a.n();
    if p > n {
        return Vec::new();
    }
    VarSet::subsets_of_size(n, p)
        .into_iter()
        .filter(|s| strand_monomial(a, *s).is_some_and(|m| !ideal.contains(&m)))
        .collect()
}

/// `x^a / x_σ`, when defined.
pub(crate) fn strand_monomial(a: &Multidegree, sigma: VarSet) -> Option<Monomial> {
    a.div(&Monomial::of_set(a.n(), sigma))
}

/// Matrix of `∂_p : K_p → K_{p-1}` in the strand at `a`.
pub fn differential_matrix(ideal: &MonomialIdeal, p: usize, a: &Multidegree, field: FieldSpec) -> ExactMatrix {
    let cols = strand_basis(ideal, p, a);
    let rows = if p == 0 { Vec::new() } else { strand_basis(ideal, p - 1, a) };
    let mut m = ExactMatrix::zeros(field, rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for v in s.iter() {
            if let Ok(i) = rows.binary_search(&s.without(v)) {
                m.set_i64(i, j, sign_below(*s, v));
            }
        }
    }
    m
}

/// Rank of `∂_p` at `a` for `p = 0..=n+1` (entries 0 and `n+1` are zero).
fn strand_ranks(ideal: &MonomialIdeal, a: &Multidegree, field: FieldSpec) -> Vec<usize> {
    let n = a.n();
    (0..=n + 1).map(|p| if p == 0 || p > n { 0 } else { differential_matrix(ideal, p, a, field).rank() }).collect()
}

fn check_degree(n: usize, a: &Multidegree) -> Result<()> {
    if a.n() != n {
        return Err(Error::WrongVariableCount { expected: n, found: a.n() });
    }
    Ok(())
}

/// `dim H_p(K^R)_a`.
pub fn strand_homology_dim(ideal: &MonomialIdeal, p: usize, a: &Multidegree, field: FieldSpec) -> Result<usize> {
    let n = ideal.n();
    check_degree(n, a)?;
    if p > n {
        return Err(Error::DegreeOutOfRange { n, p });
    }
    let dim = strand_basis(ideal, p, a).len();
    let out_rank = if p == 0 { 0 } else { differential_matrix(ideal, p, a, field).rank() };
    let in_rank = if p == n { 0 } else { differential_matrix(ideal, p + 1, a, field).rank() };
    Ok(dim - out_rank - in_rank)
}

/// `dim H_p(K^R)_a` for `p = 0..=n`.
pub fn strand_homology_dims(ideal: &MonomialIdeal, a: &Multidegree, field: FieldSpec) -> Result<Vec<usize>> {
    let n = ideal.n();
    check_degree(n, a)?;
    let ranks = strand_ranks(ideal, a, field);
    Ok((0..=n).map(|p| strand_basis(ideal, p, a).len() - ranks[p] - ranks[p + 1]).collect())
}

/// The lcms of all nonempty sets of generators, deduplicated and sorted.
/// These are the only multidegrees where `H_p`, `p ≥ 1`, can be nonzero.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Multidegree>> {
    let m = ideal.gens().len();
    if m > LCM_LATTICE_CAP {
        return Err(Error::InstanceTooLarge { what: "generator count", size: m, cap: LCM_LATTICE_CAP });
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    for g in ideal.gens() {
        let new: Vec<Monomial> = seen.iter().map(|s| s.lcm(g)).chain([g.clone()]).collect();
        seen.extend(new);
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    Ok(out)
}

/// Multigraded homology: `(a, [dim H_0, …, dim H_n])` over the lcm lattice,
/// skipping degrees with no positive-degree homology.
pub fn multigraded_homology(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Vec<(Multidegree, Vec<usize>)>> {
    let degs = lcm_lattice(ideal)?;
    let rows: Vec<_> = degs
        .par_iter()
        .map(|a| strand_homology_dims(ideal, a, field).map(|d| (a.clone(), d)))
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().filter(|(_, d)| d[1..].iter().any(|&x| x > 0)).collect())
}

/// `(β_1, …, β_n)` with `β_p = dim H_p(K^R)`.
pub fn total_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Vec<usize>> {
    let n = ideal.n();
    let mut betti = vec![0; n];
    for (_, dims) in multigraded_homology(ideal, field)? {
        for p in 1..=n {
            betti[p - 1] += dims[p];
        }
    }
    Ok(betti)
}

/// Coordinates of a homogeneous chain in the strand basis at `a`.
fn coordinates(z: &KoszulChain, basis: &[VarSet]) -> Vec<Scalar> {
    let f = z.field;
    let mut v = vec![f.zero(); basis.len()];
    for (s, _, c) in z.terms() {
        let i = basis.binary_search(&s).expect("term lies in the strand");
        v[i] = c.clone();
    }
    v
}

fn chain_from(field: FieldSpec, p: usize, a: &Multidegree, basis: &[VarSet], x: &[Scalar]) -> KoszulChain {
    let mut c = KoszulChain::zero(a.n(), p, field);
    for (s, v) in basis.iter().zip(x) {
        c.add_term(*s, strand_monomial(a, *s).expect("strand element"), v.clone());
    }
    c
}

/// Decides whether the cycle `z` is a boundary by solving `∂_{p+1} y = z` in
/// its strand; returns the preimage `y` when it is.
pub fn is_boundary_oracle(ideal: &MonomialIdeal, z: &KoszulChain) -> Result<Option<KoszulChain>> {
    let n = ideal.n();
    if z.n != n {
        return Err(Error::WrongVariableCount { expected: n, found: z.n });
    }
    let z = z.reduce(ideal);
    if z.is_zero() {
        return Ok(Some(KoszulChain::zero(n, z.p + 1, z.field)));
    }
    let a = z.multidegree().ok_or(Error::NotHomogeneous)?;
    if !differential(ideal, &z).is_zero() {
        return Err(Error::NotACycle(z.to_string()));
    }
    if z.p == n {
        return Ok(None);
    }
    let m = differential_matrix(ideal, z.p + 1, &a, z.field);
    let b = coordinates(&z, &strand_basis(ideal, z.p, &a));
    Ok(m.solve(&b)?.map(|x| chain_from(z.field, z.p + 1, &a, &strand_basis(ideal, z.p + 1, &a), &x)))
}

/// Rank of the classes of `vectors` modulo the column space of `boundaries`.
fn rank_mod(field: FieldSpec, dim: usize, boundaries: &ExactMatrix, vectors: &[Vec<Scalar>]) -> usize {
    let bcols = boundaries.cols();
    let mut all = ExactMatrix::zeros(field, dim, bcols + vectors.len());
    for i in 0..dim {
        for j in 0..bcols {
            all.set(i, j, boundaries.get(i, j).clone());
        }
        for (k, v) in vectors.iter().enumerate() {
            all.set(i, bcols + k, v[i].clone());
        }
    }
    all.rank() - boundaries.rank()
}

fn boundary_matrix(ideal: &MonomialIdeal, p: usize, a: &Multidegree, field: FieldSpec) -> ExactMatrix {
    if p >= a.n() {
        ExactMatrix::zeros(field, strand_basis(ideal, p, a).len(), 0)
    } else {
        differential_matrix(ideal, p + 1, a, field)
    }
}

/// Rank of the classes of the given cycles, all of degree `p` and
/// multidegree `a`, in `H_p(K^R)_a`.
pub fn homology_class_rank(ideal: &MonomialIdeal, p: usize, a: &Multidegree, cycles: &[KoszulChain]) -> Result<usize> {
    let n = ideal.n();
    check_degree(n, a)?;
    let Some(field) = cycles.first().map(KoszulChain::field) else { return Ok(0) };
    let basis = strand_basis(ideal, p, a);
    let vectors: Vec<Vec<Scalar>> = cycles.iter().map(|z| coordinates(&z.reduce(ideal), &basis)).collect();
    Ok(rank_mod(field, basis.len(), &boundary_matrix(ideal, p, a, field), &vectors))
}

/// Cycles in the strand whose classes form a basis of `H_p(K^R)_a`.
pub fn homology_basis(ideal: &MonomialIdeal, p: usize, a: &Multidegree, field: FieldSpec) -> Result<Vec<KoszulChain>> {
    let n = ideal.n();
    check_degree(n, a)?;
    if p > n {
        return Err(Error::DegreeOutOfRange { n, p });
    }
    let basis = strand_basis(ideal, p, a);
    let cycles = if p == 0 {
        (0..basis.len())
            .map(|i| (0..basis.len()).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect()
    } else {
        differential_matrix(ideal, p, a, field).nullspace_basis()
    };
    let bd = boundary_matrix(ideal, p, a, field);
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    for z in cycles {
        chosen.push(z);
        if rank_mod(field, basis.len(), &bd, &chosen) < chosen.len() {
            chosen.pop();
        }
    }
    Ok(chosen.iter().map(|x| chain_from(field, p, a, &basis, x)).collect())
}

/// For each lcm-lattice multidegree `a`, `dim H_p` at `a` minus the dimension
/// spanned there by classes of monomial cycles; only positive entries.
pub fn monomial_span_deficit(ideal: &MonomialIdeal, p: usize, field: FieldSpec) -> Result<Vec<(Multidegree, usize)>> {
    let n = ideal.n();
    if p > n {
        return Err(Error::DegreeOutOfRange { n, p });
    }
    let degs = lcm_lattice(ideal)?;
    let rows: Vec<Option<(Multidegree, usize)>> = degs
        .par_iter()
        .map(|a| {
            let h = strand_homology_dim(ideal, p, a, field)?;
            if h == 0 {
                return Ok(None);
            }
            let basis = strand_basis(ideal, p, a);
            let monomial_cycles: Vec<Vec<Scalar>> = basis
                .iter()
                .enumerate()
                .filter(|(_, s)| {
                    let m = strand_monomial(a, **s).expect("strand element");
                    s.iter().all(|j| ideal.contains(&m.mul_var(j)))
                })
                .map(|(i, _)| (0..basis.len()).map(|k| if k == i { field.one() } else { field.zero() }).collect())
                .collect();
            let bd = boundary_matrix(ideal, p, a, field);
            let spanned = rank_mod(field, basis.len(), &bd, &monomial_cycles);
            Ok((h > spanned).then(|| (a.clone(), h - spanned)))
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Rank of the product `H_p(a) ⊗ H_q(b) → H_{p+q}(a+b)` for one pair of
/// multidegrees.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PairingEntry {
    pub left: Multidegree,
    pub right: Multidegree,
    pub rank: usize,
}

/// Largest number of multidegree pairs examined by the product pairing.
pub const PAIRING_CAP: usize = 250_000;

/// Ranks of the homology product `H_p ⊗ H_q → H_{p+q}` over all pairs of
/// lcm-lattice multidegrees carrying homology; only nonzero ranks are listed.
pub fn homology_product_pairing(
    ideal: &MonomialIdeal,
    p: usize,
    q: usize,
    field: FieldSpec,
) -> Result<Vec<PairingEntry>> {
    let n = ideal.n();
    if p == 0 || q == 0 || p + q > n {
        return Err(Error::DegreeOutOfRange { n, p: p + q });
    }
    let homology = multigraded_homology(ideal, field)?;
    let left: Vec<&Multidegree> = homology.iter().filter(|(_, d)| d[p] > 0).map(|(a, _)| a).collect();
    let right: Vec<&Multidegree> = homology.iter().filter(|(_, d)| d[q] > 0).map(|(a, _)| a).collect();
    let pairs = left.len() * right.len();
    if pairs > PAIRING_CAP {
        return Err(Error::InstanceTooLarge { what: "multidegree pairs", size: pairs, cap: PAIRING_CAP });
    }
    let jobs: Vec<(&Multidegree, &Multidegree)> =
        left.iter().flat_map(|a| right.iter().map(move |b| (*a, *b))).collect();
    let out: Vec<Option<PairingEntry>> = jobs
        .par_iter()
        .map(|(a, b)| {
            let target = a.mul(b);
            if strand_homology_dim(ideal, p + q, &target, field)? == 0 {
                return Ok(None);
            }
            let ha = homology_basis(ideal, p, a, field)?;
            let hb = homology_basis(ideal, q, b, field)?;
            let basis = strand_basis(ideal, p + q, &target);
            let products: Vec<Vec<Scalar>> = ha
                .iter()
                .flat_map(|x| hb.iter().map(move |y| wedge(x, y).reduce(ideal)))
                .map(|c| coordinates(&c, &basis))
                .collect();
            let bd = boundary_matrix(ideal, p + q, &target, field);
            let rank = rank_mod(field, basis.len(), &bd, &products);
            Ok((rank > 0).then(|| PairingEntry { left: (*a).clone(), right: (*b).clone(), rank }))
        })
        .collect::<Result<_>>()?;
    Ok(out.into_iter().flatten().collect())
}
