//! Sign matrices `M(n,p)` and the circuits of their row matroids.
//!
//! Rows of `M(n,p)` are the `p`-subsets of `[n]`, columns the `(p+1)`-subsets,
//! both in lexicographic order; the entry at `(σ, τ)` is `sgn(τ, τ∖σ)` when
//! `σ ⊂ τ` and 0 otherwise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{with_arith, Arith, ExactMatrix, FieldSpec, IncrementalSpan};
use crate::monomials::{VarSet, MAX_VARS};

/// Largest row count for which circuits are found by exhaustive search.
pub const BRUTE_FORCE_CAP: usize = 22;

/// `(−1)^{#{s∈σ : s<j}}` for `j ∈ σ`.
pub fn sgn(sigma: VarSet, j: usize) -> Result<i64> {
    if !sigma.contains(j) {
        return Err(Error::NotAMember { index: j, set: sigma.to_string() });
    }
    Ok(sign_below(sigma, j))
}

pub(crate) fn sign_below(sigma: VarSet, j: usize) -> i64 {
    if sigma.count_below(j).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignMatrixSpec {
    pub n: usize,
    pub p: usize,
    pub field: FieldSpec,
}

impl SignMatrixSpec {
    pub fn new(n: usize, p: usize, field: FieldSpec) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, found: n });
        }
        if p == 0 || p >= n {
            return Err(Error::DegreeOutOfRange { n, p });
        }
        Ok(SignMatrixSpec { n, p, field })
    }

    pub fn row_labels(&self) -> Vec<VarSet> {
        VarSet::subsets_of_size(self.n, self.p)
    }

    pub fn col_labels(&self) -> Vec<VarSet> {
        VarSet::subsets_of_size(self.n, self.p + 1)
    }
}

fn sign_entry(row: VarSet, col: VarSet) -> i64 {
    if row.is_subset(col) {
        let j = col.difference(row).first().expect("one extra element");
        sign_below(col, j)
    } else {
        0
    }
}

pub fn build_sign_matrix(spec: SignMatrixSpec) -> Result<ExactMatrix> {
    let spec = SignMatrixSpec::new(spec.n, spec.p, spec.field)?;
    let rows = spec.row_labels();
    let cols = spec.col_labels();
    let mut m = ExactMatrix::zeros(spec.field, rows.len(), cols.len());
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            let e = sign_entry(*r, *c);
            if e != 0 {
                m.set_i64(i, j, e);
            }
        }
    }
    Ok(m)
}

/// A circuit of the row matroid of `M(n,p)`: a minimal dependent set of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Circuit {
    members: Vec<VarSet>,
}

impl Circuit {
    /// Members are sorted lexicographically; duplicates are removed.
    pub fn new(mut members: Vec<VarSet>) -> Self {
        members.sort();
        members.dedup();
        Circuit { members }
    }

    pub fn members(&self) -> &[VarSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VarSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Image under `perm[i-1] = π(i)`, in canonical member order.
    pub fn permute(&self, perm: &[usize]) -> Circuit {
        Circuit::new(self.members.iter().map(|s| s.permute(perm)).collect())
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            for i in s.iter() {
                if self.members.iter().any(|m| m.last().unwrap_or(0) > 9) {
                    write!(f, "{i}.")?;
                } else {
                    write!(f, "{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Which enumeration produced a family of circuits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CircuitSource {
    /// `p = 1`: all rows form the unique circuit.
    AllRows,
    /// `p = n−1`: every pair of rows.
    Pairs,
    /// `p = 2`: bonds of the complete graph.
    Bonds,
    /// `p = n−2`: complements of the edges of cycles of the complete graph.
    CycleComplements,
    /// Exhaustive search over independent row sets.
    BruteForce,
}

/// Canonical order: by size, then by member list.
fn canonical(mut cs: Vec<Circuit>) -> Vec<Circuit> {
    cs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    cs.dedup();
    cs
}

fn check_sigma(spec: &SignMatrixSpec, sigma: VarSet) -> Result<()> {
    if sigma.len() != spec.p {
        return Err(Error::SubsetSizeMismatch { left: sigma.len(), right: spec.p });
    }
    if let Some(m) = sigma.last() {
        if m > spec.n {
            return Err(Error::IndexOutOfRange { index: m, n: spec.n });
        }
    }
    Ok(())
}

/// The closed-form family applicable to `(n, p)`, if any.
pub fn closed_form_source(n: usize, p: usize) -> Option<CircuitSource> {
    if p == 1 {
        Some(CircuitSource::AllRows)
    } else if p + 1 == n {
        Some(CircuitSource::Pairs)
    } else if p == 2 {
        Some(CircuitSource::Bonds)
    } else if p + 2 == n {
        Some(CircuitSource::CycleComplements)
    } else {
        None
    }
}

type CacheKey = (usize, usize, FieldSpec);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<Vec<Circuit>>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<Vec<Circuit>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A permutation sending `{1..p}` to `sigma` (in order) and `{p+1..n}` to the
/// complement (in order), as `perm[i-1] = π(i)`.
fn standard_to(n: usize, sigma: VarSet) -> Vec<usize> {
    let rest = VarSet::full(n).difference(sigma);
    sigma.iter().chain(rest.iter()).collect()
}

/// All circuits through `sigma`, in canonical order, together with the
/// enumeration that produced them.
pub fn circuits_through_with_source(spec: SignMatrixSpec, sigma: VarSet) -> Result<(Vec<Circuit>, CircuitSource)> {
    let spec = SignMatrixSpec::new(spec.n, spec.p, spec.field)?;
    check_sigma(&spec, sigma)?;
    if let Some(src) = closed_form_source(spec.n, spec.p) {
        return Ok((closed_form(spec.n, spec.p, sigma, src), src));
    }
    let key = (spec.n, spec.p, spec.field);
    let cached = cache().read().expect("circuit cache poisoned").get(&key).cloned();
    let base = match cached {
        Some(b) => b,
        None => {
            let b = Arc::new(circuits_through_brute(spec, VarSet::full(spec.p))?);
            cache().write().expect("circuit cache poisoned").entry(key).or_insert(b).clone()
        }
    };
    let perm = standard_to(spec.n, sigma);
    Ok((canonical(base.iter().map(|c| c.permute(&perm)).collect()), CircuitSource::BruteForce))
}

/// All circuits of the row matroid of `M(n,p)` over `spec.field` containing
/// the row `sigma`, in canonical order.
pub fn circuits_through(spec: SignMatrixSpec, sigma: VarSet) -> Result<Vec<Circuit>> {
    circuits_through_with_source(spec, sigma).map(|(c, _)| c)
}

/// The closed-form family `src` through `sigma`.
pub fn closed_form(n: usize, p: usize, sigma: VarSet, src: CircuitSource) -> Vec<Circuit> {
    let full = VarSet::full(n);
    let out = match src {
        CircuitSource::AllRows => vec![Circuit::new(VarSet::subsets_of_size(n, 1))],
        CircuitSource::Pairs => VarSet::subsets_of_size(n, p)
            .into_iter()
            .filter(|s| *s != sigma)
            .map(|s| Circuit::new(vec![sigma, s]))
            .collect(),
        CircuitSource::Bonds => {
            let a0 = sigma.first().expect("|σ| = 2");
            let b0 = sigma.last().expect("|σ| = 2");
            let free = full.difference(sigma);
            free.subsets()
                .map(|extra| {
                    let a = extra.with(a0);
                    let b = full.difference(a);
                    debug_assert!(b.contains(b0));
                    let edges = a.iter().flat_map(|i| b.iter().map(move |j| VarSet::singleton(i).with(j))).collect();
                    Circuit::new(edges)
                })
                .collect()
        }
        CircuitSource::CycleComplements => {
            let edge = full.difference(sigma);
            let u = edge.first().expect("|[n]∖σ| = 2");
            let v = edge.last().expect("|[n]∖σ| = 2");
            let mut out = Vec::new();
            let mut path = vec![u];
            cycle_paths(full.difference(edge), v, &mut path, &mut |path| {
                let mut members = vec![sigma];
                for w in path.windows(2) {
                    members.push(full.without(w[0]).without(w[1]));
                }
                out.push(Circuit::new(members));
            });
            out
        }
        CircuitSource::BruteForce => panic!("no closed form"),
    };
    canonical(out)
}

/// Calls `emit` on every simple path from `path[0]` to `target` of length at
/// least two whose interior uses vertices of `avail`.
fn cycle_paths(avail: VarSet, target: usize, path: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    for w in avail.iter() {
        path.push(w);
        path.push(target);
        emit(path);
        path.pop();
        cycle_paths(avail.without(w), target, path, emit);
        path.pop();
    }
}

/// Circuits through `sigma` by exhaustive search, ignoring closed forms and
/// the cache.
pub fn circuits_through_brute(spec: SignMatrixSpec, sigma: VarSet) -> Result<Vec<Circuit>> {
    let spec = SignMatrixSpec::new(spec.n, spec.p, spec.field)?;
    check_sigma(&spec, sigma)?;
    let rows = spec.row_labels();
    if rows.len() > BRUTE_FORCE_CAP {
        return Err(Error::InstanceTooLarge { what: "sign matrix rows", size: rows.len(), cap: BRUTE_FORCE_CAP });
    }
    let cols = spec.col_labels();
    let found = with_arith!(spec.field, a => {
        let vecs: Vec<Vec<_>> = rows
            .iter()
            .map(|r| cols.iter().map(|c| a.from_i64(sign_entry(*r, *c))).collect())
            .collect();
        let target = rows.iter().position(|r| *r == sigma).expect("σ is a row");
        let others: Vec<usize> = (0..rows.len()).filter(|&i| i != target).collect();
        let mut search = Search {
            span: IncrementalSpan::new(a, rows.len()),
            vecs: &vecs,
            target,
            others: &others,
            chosen: Vec::new(),
            found: Vec::new(),
        };
        search.run(0);
        search.found
    });
    Ok(canonical(
        found.into_iter().map(|idx| Circuit::new(idx.into_iter().map(|i| rows[i]).chain([sigma]).collect())).collect(),
    ))
}

struct Search<'a, A: Arith> {
    span: IncrementalSpan<A>,
    vecs: &'a [Vec<A::E>],
    target: usize,
    others: &'a [usize],
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl<A: Arith> Search<'_, A> {
    /// Extends the independent set `chosen`, whose span avoids the target
    /// row, by rows from `others[from..]`.
    fn run(&mut self, from: usize) {
        for k in from..self.others.len() {
            let idx = self.others[k];
            if !self.span.push(&self.vecs[idx]) {
                continue;
            }
            self.chosen.push(idx);
            match self.span.express(&self.vecs[self.target]) {
                Some(coeffs) => {
                    if coeffs.iter().all(|c| !self.span.arith().is_zero(c)) {
                        self.found.push(self.chosen.clone());
                    }
                }
                None => self.run(k + 1),
            }
            self.chosen.pop();
            self.span.pop();
        }
    }
}

/// Rank of the given rows of `M(n,p)`.
pub fn row_rank(spec: SignMatrixSpec, rows: &[VarSet]) -> Result<usize> {
    let m = build_sign_matrix(spec)?;
    let labels = spec.row_labels();
    let idx: Vec<usize> = rows
        .iter()
        .map(|r| labels.iter().position(|l| l == r).ok_or(Error::SubsetSizeMismatch { left: r.len(), right: spec.p }))
        .collect::<Result<_>>()?;
    Ok(m.select_rows(&idx).rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn set(s: &str) -> VarSet {
        VarSet::from_indices(9, s.chars().map(|c| c.to_digit(10).unwrap() as usize)).unwrap()
    }

    fn circuit(s: &str) -> Circuit {
        Circuit::new(s.split(',').map(set).collect())
    }

    fn m_row(n: usize, p: usize, row: usize) -> Vec<i64> {
        let m = build_sign_matrix(SignMatrixSpec::new(n, p, q()).unwrap()).unwrap();
        m.row(row).iter().map(|s| s.as_i64(q()).unwrap()).collect()
    }

    #[test]
    fn sgn_examples() {
        assert_eq!(sgn(set("12"), 1).unwrap(), 1);
        assert_eq!(sgn(set("1234"), 4).unwrap(), -1);
        assert_eq!(sgn(set("1234"), 3).unwrap(), 1);
        assert!(sgn(set("12"), 3).is_err());
    }

    #[test]
    fn sign_matrix_examples() {
        let m43: Vec<i64> = (0..4).map(|r| m_row(4, 3, r)[0]).collect();
        assert_eq!(m43, [-1, 1, -1, 1]);
        assert_eq!(m_row(4, 2, 0), [1, 1, 0, 0]);
        assert_eq!(m_row(4, 1, 0), [-1, -1, -1, 0, 0, 0]);
        assert!(SignMatrixSpec::new(4, 4, q()).is_err());
        assert!(SignMatrixSpec::new(4, 0, q()).is_err());
    }

    #[test]
    fn four_variable_circuits() {
        let expect = vec![circuit("12,13,14"), circuit("12,23,24"), circuit("12,13,24,34"), circuit("12,14,23,34")];
        for f in [q(), gf2()] {
            let spec = SignMatrixSpec::new(4, 2, f).unwrap();
            assert_eq!(circuits_through(spec, set("12")).unwrap(), expect);
            assert_eq!(circuits_through_brute(spec, set("12")).unwrap(), expect);
        }
        let spec = SignMatrixSpec::new(4, 1, q()).unwrap();
        assert_eq!(circuits_through(spec, set("1")).unwrap(), vec![circuit("1,2,3,4")]);
    }

    #[test]
    fn closed_forms_coincide_when_p_is_two_and_n_minus_two() {
        for sigma in VarSet::subsets_of_size(4, 2) {
            assert_eq!(
                closed_form(4, 2, sigma, CircuitSource::Bonds),
                closed_form(4, 2, sigma, CircuitSource::CycleComplements)
            );
        }
    }

    #[test]
    fn rp2_rows_depend_on_characteristic() {
        let rows: Vec<VarSet> =
            ["123", "124", "135", "146", "156", "236", "245", "256", "345", "346"].into_iter().map(set).collect();
        let mut with_target = rows.clone();
        with_target.push(set("456"));
        let rank = |f: FieldSpec, rows: &[VarSet]| row_rank(SignMatrixSpec::new(6, 3, f).unwrap(), rows).unwrap();
        // over GF(2) the ten rows sum to zero and row 456 leaves their span
        assert_eq!(rank(gf2(), &rows), 9);
        assert_eq!(rank(gf2(), &with_target), 10);
        // over Q they are independent and span row 456
        assert_eq!(rank(q(), &rows), 10);
        assert_eq!(rank(q(), &with_target), 10);
    }

    #[test]
    fn pair_and_all_row_forms() {
        let spec = SignMatrixSpec::new(4, 3, q()).unwrap();
        let cs = circuits_through(spec, set("123")).unwrap();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.len() == 2 && c.contains(set("123"))));
    }
}
