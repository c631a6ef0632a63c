//! Boundary ideals `B^{n,σ}_I`: the monomials `u` for which `ū e_σ` is a
//! Koszul boundary.
//!
//! `B^{n,σ}_I` is the intersection, over circuits `C` of the row matroid of
//! `M(n,|σ|)` through `σ`, of `Σ_{σ'∈C} x_{σ'∖σ}[I : x_{σ∖σ'}]`, and `I` itself
//! when `σ = [n]`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::FieldSpec;
use crate::monomials::{Monomial, MonomialIdeal, VarSet};
use crate::simplicial_matroid::{circuits_through_with_source, Circuit, CircuitSource, SignMatrixSpec};

/// Which route produced a boundary ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundaryForm {
    /// `|σ| = 1`: `I + (x_j : j ∉ σ)[I : x_i]`.
    #[serde(rename = "p1")]
    SingleVariable,
    /// `|σ| = n−1`: `I + x_k[I : (x_i : i ∈ σ)]` with `k ∉ σ`.
    #[serde(rename = "p-n1")]
    Codimension1,
    #[serde(rename = "p2-bonds")]
    Bonds,
    #[serde(rename = "pn2-cycles")]
    CycleComplements,
    /// `σ = [n]`: the ideal itself.
    #[serde(rename = "top")]
    Top,
    #[serde(rename = "brute")]
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryIdealResult {
    pub ideal: MonomialIdeal,
    pub circuits_used: Vec<Circuit>,
    pub closed_form: BoundaryForm,
}

fn check_sigma(ideal: &MonomialIdeal, sigma: VarSet) -> Result<()> {
    if sigma.is_empty() {
        return Err(Error::EmptyVarSet);
    }
    let n = ideal.n();
    match sigma.last() {
        Some(m) if m > n => Err(Error::IndexOutOfRange { index: m, n }),
        _ => Ok(()),
    }
}

/// `I^σ_{σ'} = x_{σ'∖σ} [I : x_{σ∖σ'}]`.
pub fn sector_ideal(ideal: &MonomialIdeal, sigma: VarSet, sigma2: VarSet) -> Result<MonomialIdeal> {
    if sigma.len() != sigma2.len() {
        return Err(Error::SubsetSizeMismatch { left: sigma.len(), right: sigma2.len() });
    }
    let n = ideal.n();
    for s in [sigma, sigma2] {
        if let Some(m) = s.last().filter(|&m| m > n) {
            return Err(Error::IndexOutOfRange { index: m, n });
        }
    }
    Ok(ideal
        .colon_monomial(&Monomial::of_set(n, sigma.difference(sigma2)))
        .times_monomial(&Monomial::of_set(n, sigma2.difference(sigma))))
}

/// Whether `u ∈ I^σ_{σ'}`, without building the ideal.
fn in_sector(ideal: &MonomialIdeal, sigma: VarSet, sigma2: VarSet, u: &Monomial) -> bool {
    let n = ideal.n();
    match u.div(&Monomial::of_set(n, sigma2.difference(sigma))) {
        Some(rest) => ideal.contains(&rest.mul(&Monomial::of_set(n, sigma.difference(sigma2)))),
        None => false,
    }
}

/// `I + (x_j : j ∉ σ)[I : (x_i : i ∈ σ)]`, a subideal of `B^{n,σ}_I` for
/// `|σ| < n`; equal to `I` for `σ = [n]`.
pub fn lower_bound(ideal: &MonomialIdeal, sigma: VarSet) -> Result<MonomialIdeal> {
    check_sigma(ideal, sigma)?;
    let n = ideal.n();
    let rest = VarSet::full(n).difference(sigma);
    if rest.is_empty() {
        return Ok(ideal.clone());
    }
    let colon = ideal.colon_varset(sigma)?;
    Ok(ideal.sum_unchecked(&MonomialIdeal::of_vars(n, rest).product_unchecked(&colon)))
}

fn circuits(n: usize, sigma: VarSet, field: FieldSpec) -> Result<(Vec<Circuit>, CircuitSource)> {
    circuits_through_with_source(SignMatrixSpec::new(n, sigma.len(), field)?, sigma)
}

/// `B^{n,σ}_I` assembled from circuits, with no closed-form shortcuts.
pub fn boundary_ideal_from_circuits(ideal: &MonomialIdeal, sigma: VarSet, field: FieldSpec) -> Result<MonomialIdeal> {
    check_sigma(ideal, sigma)?;
    let n = ideal.n();
    if sigma.len() == n {
        return Ok(ideal.clone());
    }
    let (cs, _) = circuits(n, sigma, field)?;
    intersect_sums(ideal, sigma, &cs)
}

fn intersect_sums(ideal: &MonomialIdeal, sigma: VarSet, cs: &[Circuit]) -> Result<MonomialIdeal> {
    let sums: Vec<MonomialIdeal> = cs
        .par_iter()
        .map(|c| {
            let mut acc = MonomialIdeal::zero(ideal.n());
            for s2 in c.members() {
                acc = acc.sum_unchecked(&sector_ideal(ideal, sigma, *s2)?);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    Ok(sums.iter().skip(1).fold(sums[0].clone(), |acc, s| acc.intersect_unchecked(s)))
}

/// `B^{n,σ}_I`, using the closed forms for `|σ| ∈ {1, n−1, n}`.
pub fn boundary_ideal(ideal: &MonomialIdeal, sigma: VarSet, field: FieldSpec) -> Result<BoundaryIdealResult> {
    check_sigma(ideal, sigma)?;
    let n = ideal.n();
    if sigma.len() == n {
        return Ok(BoundaryIdealResult {
            ideal: ideal.clone(),
            circuits_used: Vec::new(),
            closed_form: BoundaryForm::Top,
        });
    }
    let (cs, source) = circuits(n, sigma, field)?;
    let (form, b) = match source {
        CircuitSource::AllRows => (BoundaryForm::SingleVariable, lower_bound(ideal, sigma)?),
        CircuitSource::Pairs => (BoundaryForm::Codimension1, lower_bound(ideal, sigma)?),
        CircuitSource::Bonds => (BoundaryForm::Bonds, intersect_sums(ideal, sigma, &cs)?),
        CircuitSource::CycleComplements => (BoundaryForm::CycleComplements, intersect_sums(ideal, sigma, &cs)?),
        CircuitSource::BruteForce => (BoundaryForm::BruteForce, intersect_sums(ideal, sigma, &cs)?),
    };
    Ok(BoundaryIdealResult { ideal: b, circuits_used: cs, closed_form: form })
}

/// Membership in `B^{n,σ}_I` for many monomials without building the
/// intersection: `u ∈ B` iff `u ∈ I` or every circuit through `σ` contains
/// some `σ'` with `u ∈ I^σ_{σ'}`.
pub struct BoundaryMembership<'a> {
    ideal: &'a MonomialIdeal,
    sigma: VarSet,
    rows: Vec<VarSet>,
    circuit_masks: Vec<u64>,
}

impl<'a> BoundaryMembership<'a> {
    pub fn new(ideal: &'a MonomialIdeal, sigma: VarSet, field: FieldSpec) -> Result<Self> {
        check_sigma(ideal, sigma)?;
        let n = ideal.n();
        if sigma.len() == n {
            return Ok(BoundaryMembership { ideal, sigma, rows: Vec::new(), circuit_masks: Vec::new() });
        }
        let (cs, _) = circuits(n, sigma, field)?;
        let mut rows: Vec<VarSet> = cs.iter().flat_map(|c| c.members().iter().copied()).collect();
        rows.sort();
        rows.dedup();
        if rows.len() > 64 {
            return Err(Error::InstanceTooLarge { what: "rows met by circuits", size: rows.len(), cap: 64 });
        }
        let circuit_masks = cs
            .iter()
            .map(|c| c.members().iter().fold(0u64, |m, s| m | 1 << rows.binary_search(s).expect("row listed")))
            .collect();
        Ok(BoundaryMembership { ideal, sigma, rows, circuit_masks })
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        if self.ideal.contains(u) {
            return true;
        }
        if self.circuit_masks.is_empty() {
            return false;
        }
        let good = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, s2)| in_sector(self.ideal, self.sigma, **s2, u))
            .fold(0u64, |m, (i, _)| m | 1 << i);
        self.circuit_masks.iter().all(|c| c & good != 0)
    }
}

/// Whether the monomial cycle `ū e_σ` is a boundary. Errors when it is not a
/// cycle, i.e. when `x_i u ∉ I` for some `i ∈ σ`.
pub fn is_boundary_monomial_cycle(
    ideal: &MonomialIdeal,
    u: &Monomial,
    sigma: VarSet,
    field: FieldSpec,
) -> Result<bool> {
    check_sigma(ideal, sigma)?;
    if u.n() != ideal.n() {
        return Err(Error::WrongVariableCount { expected: ideal.n(), found: u.n() });
    }
    if !sigma.iter().all(|i| ideal.contains(&u.mul_var(i))) {
        return Err(Error::NotACycle(format!("{u} e{sigma}")));
    }
    Ok(BoundaryMembership::new(ideal, sigma, field)?.contains(u))
}
