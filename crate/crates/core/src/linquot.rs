//! Linear quotients, decomposition functions, the mapping-cone resolution,
//! and monomial bases of Koszul homology built from them.
//!
//! An order `u_1, …, u_m` of `G(I)` has linear quotients when every colon
//! `(u_1, …, u_{j−1}) : u_j` is generated by variables `{x_i : i ∈ set(u_j)}`.
//! The decomposition function `g(w)` is the first `u_j` dividing `w`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, FieldSpec};
use crate::koszul::{self, KoszulChain, Multidegree};
use crate::monomials::{Monomial, MonomialIdeal, VarSet};
use crate::simplicial_matroid::sign_below;
use crate::symmetric::{is_symmetric_shifted, partitions_from_ideal, Partition};

/// Largest generator count for order search.
pub const ORDER_SEARCH_CAP: usize = 16;

/// Largest number of linear-quotient orders tried by [`monomial_basis`].
pub const ORDER_TRIAL_CAP: usize = 5_000;

/// Largest multidegree box used by [`verify_resolution`].
pub const EXACTNESS_BOX_CAP: usize = 50_000;

/// Which hypothesis of the monomial-basis construction failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinQuotFailure {
    NoLinearQuotients,
    NotRegular,
    /// No fixed lift index exists for this generator.
    NoNiceLifts(Monomial),
}

impl fmt::Display for LinQuotFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinQuotFailure::NoLinearQuotients => write!(f, "no order of the generators has linear quotients"),
            LinQuotFailure::NotRegular => write!(f, "decomposition function is not regular"),
            LinQuotFailure::NoNiceLifts(u) => write!(f, "no nice Koszul lift for generator {u}"),
        }
    }
}

/// An order of `G(I)` with linear quotients, and `set(u_j)` for each `u_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearQuotientOrder {
    pub order: Vec<Monomial>,
    pub sets: Vec<VarSet>,
}

impl LinearQuotientOrder {
    pub fn n(&self) -> usize {
        self.order.first().map_or(0, Monomial::n)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn is_degree_increasing(&self) -> bool {
        self.order.windows(2).all(|w| w[0].degree() <= w[1].degree())
    }

    /// Index of `g(w)`: the first generator in the order dividing `w`.
    pub fn decomposition_index(&self, w: &Monomial) -> Option<usize> {
        self.order.iter().position(|u| u.divides(w))
    }

    /// `g(w)`.
    pub fn decomposition(&self, w: &Monomial) -> Option<&Monomial> {
        self.decomposition_index(w).map(|i| &self.order[i])
    }

    /// `g(x_s u_j)` for every `j` and every `s`, computed while scanning the
    /// order: the first divisor of `x_s u_j` always lies in `u_1..u_j`.
    pub fn shift_table(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..self.order.len())
            .map(|j| {
                (1..=n)
                    .map(|s| {
                        let w = self.order[j].mul_var(s);
                        self.order[..=j].iter().position(|u| u.divides(&w)).expect("u_j divides x_s u_j")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Variables generating `(prev) : u`, or `None` if the colon is not
/// generated by variables.
fn colon_set(prev: &[Monomial], u: &Monomial) -> Option<VarSet> {
    let n = u.n();
    let colon = MonomialIdeal::new(n, prev.iter().map(|v| v.div(&v.gcd(u)).expect("gcd divides")).collect())
        .expect("same variable count");
    let mut set = VarSet::EMPTY;
    for g in colon.gens() {
        if g.degree() != 1 {
            return None;
        }
        set = set.with(g.max_var());
    }
    Some(set)
}

/// The order with its sets when it has linear quotients; `None` when it
/// does not, or when `order` is not a permutation of `G(I)`.
pub fn check_linear_quotients(ideal: &MonomialIdeal, order: &[Monomial]) -> Option<LinearQuotientOrder> {
    let mut sorted: Vec<&Monomial> = order.iter().collect();
    sorted.sort();
    let mut gens: Vec<&Monomial> = ideal.gens().iter().collect();
    gens.sort();
    if sorted != gens {
        return None;
    }
    let mut sets = Vec::with_capacity(order.len());
    for j in 0..order.len() {
        sets.push(colon_set(&order[..j], &order[j])?);
    }
    Some(LinearQuotientOrder { order: order.to_vec(), sets })
}

/// Depth-first enumeration of degree-nondecreasing linear-quotient orders.
struct OrderSearch<'a> {
    gens: &'a [Monomial],
    dead: HashSet<u32>,
    order: Vec<usize>,
    sets: Vec<VarSet>,
    found: Vec<LinearQuotientOrder>,
    limit: usize,
}

impl OrderSearch<'_> {
    /// Returns true when some completion of the current prefix was found.
    fn run(&mut self, used: u32) -> bool {
        if self.found.len() >= self.limit {
            return true;
        }
        let m = self.gens.len();
        if self.order.len() == m {
            self.found.push(LinearQuotientOrder {
                order: self.order.iter().map(|&i| self.gens[i].clone()).collect(),
                sets: self.sets.clone(),
            });
            return true;
        }
        if self.dead.contains(&used) {
            return false;
        }
        let min_deg =
            (0..m).filter(|i| used & (1 << i) == 0).map(|i| self.gens[i].degree()).min().expect("unused left");
        let prev: Vec<Monomial> = self.order.iter().map(|&i| self.gens[i].clone()).collect();
        let mut any = false;
        for i in 0..m {
            if used & (1 << i) != 0 || self.gens[i].degree() != min_deg {
                continue;
            }
            let Some(set) = colon_set(&prev, &self.gens[i]) else { continue };
            self.order.push(i);
            self.sets.push(set);
            any |= self.run(used | 1 << i);
            self.order.pop();
            self.sets.pop();
            if self.found.len() >= self.limit {
                return true;
            }
        }
        if !any {
            self.dead.insert(used);
        }
        any
    }
}

fn search_orders(ideal: &MonomialIdeal, limit: usize) -> Result<Vec<LinearQuotientOrder>> {
    let m = ideal.gens().len();
    if m > ORDER_SEARCH_CAP {
        return Err(Error::InstanceTooLarge { what: "generator count", size: m, cap: ORDER_SEARCH_CAP });
    }
    if m == 0 {
        return Ok(vec![LinearQuotientOrder { order: Vec::new(), sets: Vec::new() }]);
    }
    let mut s = OrderSearch {
        gens: ideal.gens(),
        dead: HashSet::new(),
        order: Vec::new(),
        sets: Vec::new(),
        found: Vec::new(),
        limit,
    };
    s.run(0);
    Ok(s.found)
}

/// A degree-nondecreasing order with linear quotients, if one exists.
pub fn find_linear_quotients_order(ideal: &MonomialIdeal) -> Result<Option<LinearQuotientOrder>> {
    Ok(search_orders(ideal, 1)?.into_iter().next())
}

/// Up to `limit` degree-nondecreasing orders with linear quotients.
pub fn linear_quotient_orders(ideal: &MonomialIdeal, limit: usize) -> Result<Vec<LinearQuotientOrder>> {
    search_orders(ideal, limit)
}

/// `set(g(x_s u)) ⊆ set(u)` for every generator `u` and `s ∈ set(u)`.
pub fn is_regular(lq: &LinearQuotientOrder) -> bool {
    let table = lq.shift_table();
    (0..lq.len()).all(|j| lq.sets[j].iter().all(|s| lq.sets[table[j][s - 1]].is_subset(lq.sets[j])))
}

/// For each generator `u`, the least `ℓ ∈ supp(u)` with
/// `x_ℓ | x_t u / g(x_t u)` for all `t ∈ set(u)`; `None` if some `u` has none.
pub fn nice_lift_indices(lq: &LinearQuotientOrder) -> Option<Vec<usize>> {
    nice_lifts_or_culprit(lq).ok()
}

/// Whether `x_ℓ | x_t u_j / g(x_t u_j)` for every `t ∈ set(u_j)`, with `ℓ ∈ supp(u_j)`.
pub fn is_valid_lift(lq: &LinearQuotientOrder, j: usize, l: usize) -> bool {
    let u = &lq.order[j];
    u.support().contains(l)
        && lq.sets[j].iter().all(|t| {
            let w = u.mul_var(t);
            let g = lq.decomposition(&w).expect("u divides x_t u");
            w.div(g).expect("g divides").exp(l) > 0
        })
}

fn nice_lifts_or_culprit(lq: &LinearQuotientOrder) -> std::result::Result<Vec<usize>, Monomial> {
    let table = lq.shift_table();
    (0..lq.len())
        .map(|j| {
            let u = &lq.order[j];
            let quotients: Vec<Monomial> =
                lq.sets[j].iter().map(|t| u.mul_var(t).div(&lq.order[table[j][t - 1]]).expect("g divides")).collect();
            u.support().iter().find(|&l| quotients.iter().all(|q| q.exp(l) > 0)).ok_or_else(|| u.clone())
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `β_i = Σ_u binom(|set(u)|, i−1)` for `i = 1, …, max|set(u)| + 1`.
pub fn mapping_cone_betti(lq: &LinearQuotientOrder) -> Result<Vec<usize>> {
    if !lq.is_degree_increasing() {
        return Err(Error::NotDegreeIncreasing);
    }
    let top = lq.sets.iter().map(|s| s.len()).max().unwrap_or(0);
    Ok((1..=top + 1).map(|i| lq.sets.iter().map(|s| binomial(s.len(), i - 1)).sum()).collect())
}

/// A polynomial with integer coefficients.
pub type Poly = BTreeMap<Monomial, i64>;

fn poly_add(p: &mut Poly, m: Monomial, c: i64) {
    let e = p.entry(m.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        p.remove(&m);
    }
}

/// A sparse matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), Poly>,
}

impl PolyMatrix {
    fn new(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: BTreeMap::new() }
    }

    fn add(&mut self, i: usize, j: usize, m: Monomial, c: i64) {
        let p = self.entries.entry((i, j)).or_default();
        poly_add(p, m, c);
        if p.is_empty() {
            self.entries.remove(&(i, j));
        }
    }

    /// `self · other`.
    pub fn compose(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::new(self.rows, other.cols);
        for (&(i, k), p) in &self.entries {
            for (&(k2, j), q) in other.entries.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k, k2);
                for (a, ca) in p {
                    for (b, cb) in q {
                        out.add(i, j, a.mul(b), ca * cb);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A basis element `γ^u_σ` of the mapping-cone resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConeGenerator {
    /// Position of `u` in the order.
    pub generator: usize,
    pub sigma: VarSet,
}

/// The free resolution `… → F_2 → F_1 → S` from a regular decomposition
/// function. `basis[i-1]` lists the generators of `F_i`; `maps[i-1]` is
/// `δ_i : F_i → F_{i−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub lq: LinearQuotientOrder,
    pub basis: Vec<Vec<ConeGenerator>>,
    pub maps: Vec<PolyMatrix>,
}

impl Resolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    /// Multidegree of `γ^u_σ`: `u · x_σ`.
    pub fn generator_degree(&self, g: ConeGenerator) -> Multidegree {
        let u = &self.lq.order[g.generator];
        u.mul(&Monomial::of_set(u.n(), g.sigma))
    }
}

/// `δ(γ^u_∅) = u` and, for `σ ≠ ∅`,
/// `δ(γ^u_σ) = −Σ_{t∈σ} sgn(σ,t) x_t γ^u_{σ∖t} + Σ_{t∈σ} sgn(σ,t) (x_t u / g(x_t u)) γ^{g(x_t u)}_{σ∖t}`,
/// where `γ^v_τ = 0` unless `τ ⊆ set(v)`.
pub fn resolution_differential(lq: &LinearQuotientOrder) -> Result<Resolution> {
    if !lq.is_degree_increasing() {
        return Err(Error::NotDegreeIncreasing);
    }
    if !is_regular(lq) {
        return Err(Error::NotRegular);
    }
    let n = lq.n();
    let table = lq.shift_table();
    let top = lq.sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let basis: Vec<Vec<ConeGenerator>> = (0..=top)
        .map(|k| {
            (0..lq.len())
                .flat_map(|j| {
                    VarSet::subsets_of_size(n, k)
                        .into_iter()
                        .filter(move |s| s.is_subset(lq.sets[j]))
                        .map(move |sigma| ConeGenerator { generator: j, sigma })
                })
                .collect()
        })
        .collect();
    let mut maps = Vec::with_capacity(basis.len());
    let mut first = PolyMatrix::new(1, basis[0].len());
    for (c, g) in basis[0].iter().enumerate() {
        first.add(0, c, lq.order[g.generator].clone(), 1);
    }
    maps.push(first);
    for i in 1..basis.len() {
        let rows = &basis[i - 1];
        let mut m = PolyMatrix::new(rows.len(), basis[i].len());
        for (c, g) in basis[i].iter().enumerate() {
            let u = &lq.order[g.generator];
            for t in g.sigma.iter() {
                let sign = sign_below(g.sigma, t);
                let tau = g.sigma.without(t);
                let own =
                    rows.binary_search(&ConeGenerator { generator: g.generator, sigma: tau }).expect("τ ⊆ set(u)");
                m.add(own, c, Monomial::var(n, t), -sign);
                let h = table[g.generator][t - 1];
                if tau.is_subset(lq.sets[h]) {
                    let row = rows.binary_search(&ConeGenerator { generator: h, sigma: tau }).expect("τ ⊆ set(g)");
                    let q = u.mul_var(t).div(&lq.order[h]).expect("g divides");
                    m.add(row, c, q, sign);
                }
            }
        }
        maps.push(m);
    }
    Ok(Resolution { lq: lq.clone(), basis, maps })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionCheck {
    /// `δ_{i−1} ∘ δ_i = 0` for all `i`.
    pub squares_vanish: bool,
    /// Exact at every multidegree below the lcm of the generators, with
    /// cokernel `S/I`.
    pub exact: bool,
    /// No entry has a nonzero constant term.
    pub minimal: bool,
}

/// Checks `δ² = 0`, exactness over the lcm box, and minimality.
pub fn verify_resolution(ideal: &MonomialIdeal, res: &Resolution) -> Result<ResolutionCheck> {
    let squares_vanish = res.maps.windows(2).all(|w| w[0].compose(&w[1]).is_zero());
    let minimal = res.maps.iter().all(|m| m.entries.values().all(|p| p.keys().all(|k| !k.is_one())));
    let n = ideal.n();
    let lcm = ideal.gens().iter().fold(Monomial::one(n), |a, g| a.lcm(g));
    let size: usize = lcm.exponents().iter().map(|&e| e as usize + 1).product();
    if size > EXACTNESS_BOX_CAP {
        return Err(Error::InstanceTooLarge { what: "multidegree box", size, cap: EXACTNESS_BOX_CAP });
    }
    let q = FieldSpec::RATIONALS;
    let mut exact = true;
    let mut a = vec![0u32; n];
    'boxes: loop {
        let deg = Monomial::new(a.clone());
        let present: Vec<Vec<usize>> = res
            .basis
            .iter()
            .map(|b| (0..b.len()).filter(|&k| res.generator_degree(b[k]).divides(&deg)).collect())
            .collect();
        let mut ranks = Vec::with_capacity(res.maps.len() + 1);
        for (i, map) in res.maps.iter().enumerate() {
            let cols = &present[i];
            let rows: Vec<usize> = if i == 0 { vec![0] } else { present[i - 1].clone() };
            let mut m = ExactMatrix::zeros(q, rows.len(), cols.len());
            for (ci, &c) in cols.iter().enumerate() {
                for (ri, &r) in rows.iter().enumerate() {
                    if let Some(p) = map.entries.get(&(r, c)) {
                        m.set_i64(ri, ci, p.values().sum());
                    }
                }
            }
            ranks.push(m.rank());
        }
        ranks.push(0);
        let quotient = usize::from(!ideal.contains(&deg));
        if 1 - ranks[0] != quotient {
            exact = false;
        }
        for i in 0..res.maps.len() {
            if present[i].len() != ranks[i] + ranks[i + 1] {
                exact = false;
            }
        }
        if !exact {
            break 'boxes;
        }
        let mut k = 0;
        loop {
            if k == n {
                break 'boxes;
            }
            if a[k] < lcm.exponents()[k] {
                a[k] += 1;
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
    Ok(ResolutionCheck { squares_vanish, exact, minimal })
}

/// The cycle `(u/x_ℓ) e_ℓ ∧ e_σ` with `σ ⊆ set(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialBasisCycle {
    pub u: Monomial,
    pub lift: usize,
    pub sigma: VarSet,
}

impl MonomialBasisCycle {
    pub fn homological_degree(&self) -> usize {
        self.sigma.len() + 1
    }

    pub fn multidegree(&self) -> Multidegree {
        self.u.mul(&Monomial::of_set(self.u.n(), self.sigma))
    }

    pub fn chain(&self, field: FieldSpec) -> KoszulChain {
        let coeff = field.from_i64(koszul::shuffle_sign(VarSet::singleton(self.lift), self.sigma));
        let m = self.u.div_var(self.lift).expect("ℓ ∈ supp(u)");
        KoszulChain::monomial(field, m, VarSet::singleton(self.lift).union(self.sigma)).scale(&coeff)
    }
}

impl fmt::Display for MonomialBasisCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/x{}) e{}^e{}", self.u, self.lift, self.lift, self.sigma)
    }
}

/// The basis produced for a given order and lift indices.
pub fn basis_cycles(lq: &LinearQuotientOrder, lifts: &[usize]) -> Vec<MonomialBasisCycle> {
    let mut out = Vec::new();
    let top = lq.sets.iter().map(|s| s.len()).max().unwrap_or(0);
    for k in 0..=top {
        for (j, u) in lq.order.iter().enumerate() {
            for sigma in VarSet::subsets_of_size(u.n(), k) {
                if sigma.is_subset(lq.sets[j]) {
                    out.push(MonomialBasisCycle { u: u.clone(), lift: lifts[j], sigma });
                }
            }
        }
    }
    out
}

/// Graded reverse lexicographic order on `G(I)`, largest first within each
/// degree, lower degrees first.
pub fn revlex_order(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut gens = ideal.gens().to_vec();
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp_grevlex(a)));
    gens
}

/// The order used for symmetric shifted ideals: orbits sorted by their
/// partitions in increasing graded lexicographic order, and each orbit in
/// decreasing lexicographic order.
pub fn shifted_order(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut gens = ideal.gens().to_vec();
    gens.sort_by(|a, b| {
        let (pa, pb) = (Monomial::new(a.sorted_exponents()), Monomial::new(b.sorted_exponents()));
        pa.cmp_glex(&pb).then_with(|| b.cmp(a))
    });
    gens
}

/// The outcome of the hypotheses for one order.
fn stage(lq: &LinearQuotientOrder) -> std::result::Result<Vec<usize>, LinQuotFailure> {
    if !is_regular(lq) {
        return Err(LinQuotFailure::NotRegular);
    }
    nice_lifts_or_culprit(lq).map_err(LinQuotFailure::NoNiceLifts)
}

fn failure_rank(f: &LinQuotFailure) -> u8 {
    match f {
        LinQuotFailure::NoLinearQuotients => 0,
        LinQuotFailure::NotRegular => 1,
        LinQuotFailure::NoNiceLifts(_) => 2,
    }
}

/// A linear-quotient order with regular decomposition function and nice
/// lifts, with its lift indices. Tries graded revlex, then the shifted order,
/// then other orders from the search. On failure, reports the furthest
/// hypothesis reached by any order tried.
pub fn basis_order(ideal: &MonomialIdeal) -> Result<(LinearQuotientOrder, Vec<usize>)> {
    let mut worst = LinQuotFailure::NoLinearQuotients;
    let mut attempt = |lq: LinearQuotientOrder| match stage(&lq) {
        Ok(lifts) => Some((lq, lifts)),
        Err(f) => {
            if failure_rank(&f) > failure_rank(&worst) {
                worst = f;
            }
            None
        }
    };
    for order in [revlex_order(ideal), shifted_order(ideal)] {
        if let Some(lq) = check_linear_quotients(ideal, &order).filter(LinearQuotientOrder::is_degree_increasing) {
            if let Some(found) = attempt(lq) {
                return Ok(found);
            }
        }
    }
    for lq in linear_quotient_orders(ideal, ORDER_TRIAL_CAP)? {
        if let Some(found) = attempt(lq) {
            return Ok(found);
        }
    }
    Err(Error::Hypothesis(worst))
}

/// The monomial cycles `(u/x_ℓ(u)) e_ℓ(u) ∧ e_σ`, `σ ⊆ set(u)`, whose classes
/// form a basis of `H_{>0}(K^R)`.
pub fn monomial_basis(ideal: &MonomialIdeal) -> Result<Vec<MonomialBasisCycle>> {
    let (lq, lifts) = basis_order(ideal)?;
    Ok(basis_cycles(&lq, &lifts))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisVerification {
    /// Number of cycles in each homological degree `1..`.
    pub counts: Vec<usize>,
    pub mapping_cone: Vec<usize>,
    pub total_betti: Vec<usize>,
    pub all_cycles: bool,
    /// Classes are independent within every strand.
    pub independent: bool,
}

impl BasisVerification {
    pub fn ok(&self) -> bool {
        let trim = |v: &[usize]| v.iter().rposition(|&x| x > 0).map_or(Vec::new(), |i| v[..=i].to_vec());
        self.all_cycles
            && self.independent
            && trim(&self.counts) == trim(&self.mapping_cone)
            && trim(&self.counts) == trim(&self.total_betti)
    }
}

/// Checks a basis against the Koszul complex: every element is a nonzero
/// cycle, classes are independent per strand, and the counts agree with both
/// the mapping cone and the strand homology.
pub fn verify_monomial_basis(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BasisVerification> {
    let (lq, lifts) = basis_order(ideal)?;
    let cycles = basis_cycles(&lq, &lifts);
    let n = ideal.n();
    let mut counts = vec![0; n];
    let mut groups: BTreeMap<(usize, Multidegree), Vec<KoszulChain>> = BTreeMap::new();
    let mut all_cycles = true;
    for c in &cycles {
        let chain = c.chain(field).reduce(ideal);
        if chain.is_zero() || !koszul::differential(ideal, &chain).is_zero() {
            all_cycles = false;
        }
        counts[c.homological_degree() - 1] += 1;
        groups.entry((c.homological_degree(), c.multidegree())).or_default().push(chain);
    }
    let mut independent = true;
    for ((p, a), chains) in &groups {
        if koszul::homology_class_rank(ideal, *p, a, chains)? != chains.len() {
            independent = false;
        }
    }
    Ok(BasisVerification {
        counts,
        mapping_cone: mapping_cone_betti(&lq)?,
        total_betti: koszul::total_betti(ideal, field)?,
        all_cycles,
        independent,
    })
}

/// Stable: `x_i u / x_{max(u)} ∈ I` for all `u ∈ G(I)` and `i < max(u)`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|u| {
        let m = u.max_var();
        (1..m).all(|i| ideal.contains(&u.mul_var(i).div_var(m).expect("x_max divides u")))
    })
}

/// Squarefree stable: squarefree generators and `x_i u / x_{max(u)} ∈ I`
/// for all `i < max(u)` outside `supp(u)`.
pub fn is_squarefree_stable(ideal: &MonomialIdeal) -> bool {
    ideal.is_squarefree()
        && ideal.gens().iter().all(|u| {
            let m = u.max_var();
            let supp = u.support();
            (1..m)
                .filter(|&i| !supp.contains(i))
                .all(|i| ideal.contains(&u.mul_var(i).div_var(m).expect("x_max divides u")))
        })
}

/// Matroidal: squarefree, equigenerated, and the supports satisfy the basis
/// exchange axiom.
pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.gens();
    if !ideal.is_squarefree() || gens.windows(2).any(|w| w[0].degree() != w[1].degree()) {
        return false;
    }
    let bases: HashSet<VarSet> = gens.iter().map(Monomial::support).collect();
    bases.iter().all(|b1| {
        bases.iter().all(|b2| {
            b1.difference(*b2).iter().all(|x| b2.difference(*b1).iter().any(|y| bases.contains(&b1.without(x).with(y))))
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub stable: bool,
    pub squarefree_stable: bool,
    pub matroidal: bool,
    pub symmetric_shifted: bool,
}

pub fn recognize(ideal: &MonomialIdeal) -> Recognition {
    Recognition {
        stable: is_stable(ideal),
        squarefree_stable: is_squarefree_stable(ideal),
        matroidal: is_matroidal(ideal),
        symmetric_shifted: partitions_from_ideal(ideal).is_some_and(|s| is_symmetric_shifted(&s)),
    }
}

/// `set(u)` for a stable ideal under graded revlex: `{1, …, max(u)−1}`.
pub fn stable_set(u: &Monomial) -> VarSet {
    VarSet::full(u.max_var().saturating_sub(1))
}

/// `set(u)` for a squarefree stable ideal under graded revlex:
/// `{i ∉ supp(u) : i < max(u)}`.
pub fn squarefree_stable_set(u: &Monomial) -> VarSet {
    stable_set(u).difference(u.support())
}

/// `set(u)` for a symmetric shifted ideal under [`shifted_order`], with
/// `λ_1` the largest exponent of `u` and `m(u) = max{i : ν_i(u) = λ_1}`:
/// `{i : ν_i(u) < λ_1 − 1} ∪ {j : ν_j(u) = λ_1 − 1, j < m(u)}`.
pub fn shifted_set(u: &Monomial) -> VarSet {
    let l1 = Partition::from_unsorted(u.exponents().to_vec()).first();
    let m = (1..=u.n()).filter(|&i| u.exp(i) == l1).max().unwrap_or(0);
    let mut s = VarSet::EMPTY;
    for i in 1..=u.n() {
        let e = u.exp(i);
        if e + 1 < l1 || (e + 1 == l1 && i < m) {
            s = s.with(i);
        }
    }
    s
}
