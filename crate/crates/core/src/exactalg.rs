//! Exact field arithmetic over the rationals and prime fields, and dense
//! Gaussian elimination on top of it.
//!
//! Every routine pivots on the first nonzero entry of a column, so ranks,
//! solutions and nullspace bases are reproducible across runs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: characteristic 0 means the rationals, otherwise
/// the prime field of that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::InvalidCharacteristic(characteristic))
        }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidCharacteristic(0));
        }
        Self::new(p)
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Modular(reduce_i64(v, p)),
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular(v) => *v == 0,
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Modular(x), Scalar::Modular(y)) => Scalar::Modular(ModArith::new(self.characteristic).add(x, y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Modular(x) => Scalar::Modular(ModArith::new(self.characteristic).neg(x)),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Modular(x), Scalar::Modular(y)) => Scalar::Modular(ModArith::new(self.characteristic).mul(x, y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match a {
            Scalar::Rational(x) => Scalar::Rational(x.recip()),
            Scalar::Modular(x) => Scalar::Modular(ModArith::new(self.characteristic).inv(x)),
        })
    }

    /// Whether `a` belongs to this field's representation.
    pub fn owns(self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(_) => self.is_rational(),
            Scalar::Modular(v) => !self.is_rational() && *v < self.characteristic,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(c: u64) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_i64(v: i64, p: u64) -> u64 {
    (v as i128).rem_euclid(p as i128) as u64
}

/// A field element. Rationals are arbitrary precision; prime-field elements
/// are stored as their least nonnegative residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular(u64),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular(v) => write!(f, "{v}"),
        }
    }
}

impl Scalar {
    /// The value as a small signed integer when it is one (prime-field values
    /// above p/2 are read as negatives).
    pub fn as_i64(&self, field: FieldSpec) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => i64::try_from(r.to_integer()).ok(),
            Scalar::Rational(_) => None,
            Scalar::Modular(v) => {
                let p = field.characteristic();
                if *v > p / 2 {
                    Some(*v as i64 - p as i64)
                } else {
                    Some(*v as i64)
                }
            }
        }
    }
}

/// Monomorphized arithmetic used by the elimination kernels.
pub(crate) trait Arith: Sync {
    type E: Clone + PartialEq + Send + Sync + fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_i64(&self, v: i64) -> Self::E;
    fn lift(&self, s: &Scalar) -> Self::E;
    fn lower(&self, e: Self::E) -> Scalar;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ModArith {
    p: u64,
}

impl ModArith {
    pub(crate) fn new(p: u64) -> Self {
        ModArith { p }
    }
}

impl Arith for ModArith {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2)
        let mut base = *a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
    fn from_i64(&self, v: i64) -> u64 {
        reduce_i64(v, self.p)
    }
    fn lift(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Modular(v) => *v % self.p,
            Scalar::Rational(_) => panic!("rational scalar in a prime field"),
        }
    }
    fn lower(&self, e: u64) -> Scalar {
        Scalar::Modular(e)
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct RatArith;

impl Arith for RatArith {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        // entries are mostly 0 and ±1
        if a.is_zero() || b.is_zero() {
            return BigRational::zero();
        }
        if a.is_one() {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        if a.abs().is_one() {
            return a.clone();
        }
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn lift(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rational(r) => r.clone(),
            Scalar::Modular(_) => panic!("prime-field scalar over the rationals"),
        }
    }
    fn lower(&self, e: BigRational) -> Scalar {
        Scalar::Rational(e)
    }
}

/// Calls `$body` with `$a` bound to the arithmetic for `$field`.
macro_rules! with_arith {
    ($field:expr, $a:ident => $body:expr) => {
        match $field.characteristic() {
            0 => {
                let $a = $crate::exactalg::RatArith;
                $body
            }
            p => {
                let $a = $crate::exactalg::ModArith::new(p);
                $body
            }
        }
    };
}
pub(crate) use with_arith;

/// Row-reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. The first `pivots.len()` rows are the nonzero rows afterwards.
pub(crate) fn rref<A: Arith>(a: &A, m: &mut [Vec<A::E>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !a.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = a.inv(&m[r][c]);
        for x in m[r][c..].iter_mut() {
            *x = a.mul(x, &inv);
        }
        for i in 0..m.len() {
            if i == r || a.is_zero(&m[i][c]) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..ncols {
                if a.is_zero(&m[r][j]) {
                    continue;
                }
                let t = a.mul(&factor, &m[r][j]);
                m[i][j] = a.sub(&m[i][j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Dense matrix over a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from integer rows; all rows must share one length.
    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(self.field.owns(&v), "scalar does not belong to {}", self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn set_i64(&mut self, i: usize, j: usize, v: i64) {
        let s = self.field.from_i64(v);
        self.entries[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Submatrix on the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut m = Self::zeros(self.field, rows.len(), self.cols);
        for (k, &i) in rows.iter().enumerate() {
            m.entries[k * self.cols..(k + 1) * self.cols].clone_from_slice(self.row(i));
        }
        m
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
            .collect())
    }

    pub(crate) fn lifted<A: Arith>(&self, a: &A) -> Vec<Vec<A::E>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|s| a.lift(s)).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        with_arith!(self.field, a => {
            let mut m = self.lifted(&a);
            rref(&a, &mut m, self.cols).len()
        })
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let cols = self.cols;
        Ok(with_arith!(self.field, a => {
            let mut m: Vec<Vec<_>> = (0..self.rows)
                .map(|i| {
                    let mut row: Vec<_> = self.row(i).iter().map(|s| a.lift(s)).collect();
                    row.push(a.lift(&b[i]));
                    row
                })
                .collect();
            let pivots = rref(&a, &mut m, cols + 1);
            if pivots.last() == Some(&cols) {
                None
            } else {
                let mut x = vec![a.zero(); cols];
                for (r, &c) in pivots.iter().enumerate() {
                    x[c] = m[r][cols].clone();
                }
                Some(x.into_iter().map(|e| a.lower(e)).collect())
            }
        }))
    }

    /// A basis of `{x : self · x = 0}`, one vector per free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        let cols = self.cols;
        with_arith!(self.field, a => {
            let mut m = self.lifted(&a);
            let pivots = rref(&a, &mut m, cols);
            let mut basis = Vec::new();
            for free in (0..cols).filter(|c| !pivots.contains(c)) {
                let mut v = vec![a.zero(); cols];
                v[free] = a.one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = a.neg(&m[r][free]);
                }
                basis.push(v.into_iter().map(|e| a.lower(e)).collect());
            }
            basis
        })
    }
}

/// A growing set of vectors kept in echelon form, remembering how each
/// echelon row combines the inserted vectors. Supports undo in LIFO order.
pub(crate) struct IncrementalSpan<A: Arith> {
    arith: A,
    slots: usize,
    rows: Vec<EchelonRow<A::E>>,
}

struct EchelonRow<E> {
    pivot: usize,
    vector: Vec<E>,
    combo: Vec<E>,
}

impl<A: Arith> IncrementalSpan<A> {
    /// `slots` bounds how many vectors may be inserted at once.
    pub(crate) fn new(arith: A, slots: usize) -> Self {
        IncrementalSpan { arith, slots, rows: Vec::new() }
    }

    /// Reduces `v` against the current rows; returns the residue and the
    /// coefficients (by slot) of the combination that was subtracted.
    fn reduce(&self, v: &[A::E]) -> (Vec<A::E>, Vec<A::E>) {
        let a = &self.arith;
        let mut residue = v.to_vec();
        let mut taken = vec![a.zero(); self.slots];
        for row in &self.rows {
            let f = residue[row.pivot].clone();
            if a.is_zero(&f) {
                continue;
            }
            for (x, y) in residue.iter_mut().zip(&row.vector) {
                if !a.is_zero(y) {
                    *x = a.sub(x, &a.mul(&f, y));
                }
            }
            for (x, y) in taken.iter_mut().zip(&row.combo) {
                if !a.is_zero(y) {
                    *x = a.add(x, &a.mul(&f, y));
                }
            }
        }
        (residue, taken)
    }

    /// Inserts `v` in the next free slot; returns false (and inserts nothing)
    /// when `v` is already in the span.
    pub(crate) fn push(&mut self, v: &[A::E]) -> bool {
        let a = &self.arith;
        let slot = self.rows.len();
        let (mut residue, taken) = self.reduce(v);
        let Some(pivot) = residue.iter().position(|x| !a.is_zero(x)) else {
            return false;
        };
        let inv = a.inv(&residue[pivot]);
        for x in residue.iter_mut() {
            *x = a.mul(x, &inv);
        }
        let mut combo: Vec<A::E> = taken.iter().map(|t| a.neg(t)).collect();
        combo[slot] = a.one();
        for x in combo.iter_mut() {
            *x = a.mul(x, &inv);
        }
        self.rows.push(EchelonRow { pivot, vector: residue, combo });
        true
    }

    pub(crate) fn pop(&mut self) {
        self.rows.pop();
    }

    /// Coefficients by slot expressing `v` in the inserted vectors, or `None`
    /// when `v` is outside the span.
    pub(crate) fn express(&self, v: &[A::E]) -> Option<Vec<A::E>> {
        let (residue, taken) = self.reduce(v);
        if residue.iter().all(|x| self.arith.is_zero(x)) {
            Some(taken[..self.rows.len()].to_vec())
        } else {
            None
        }
    }

    pub(crate) fn arith(&self) -> &A {
        &self.arith
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn characteristic_validation() {
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(7919).is_ok());
        assert_eq!(FieldSpec::new(4), Err(Error::InvalidCharacteristic(4)));
        assert_eq!(FieldSpec::new(1), Err(Error::InvalidCharacteristic(1)));
        assert!(FieldSpec::prime(0).is_err());
    }

    #[test]
    fn empty_and_identity_ranks() {
        assert_eq!(ExactMatrix::zeros(q(), 0, 0).rank(), 0);
        assert_eq!(ExactMatrix::identity(q(), 3).rank(), 3);
        assert_eq!(ExactMatrix::identity(q(), 3).nullity(), 0);
        assert_eq!(ExactMatrix::identity(gf(5), 4).rank(), 4);
    }

    #[test]
    fn single_relation_over_gf2() {
        let m = ExactMatrix::from_i64_rows(gf(2), &[vec![1, 1]]).unwrap();
        assert_eq!(m.nullity(), 1);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(m.mul_vec(&basis[0]).unwrap(), vec![gf(2).zero()]);
    }

    #[test]
    fn m43_column_has_rank_one() {
        let m = ExactMatrix::from_i64_rows(q(), &[vec![-1], vec![1], vec![-1], vec![1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_identity_and_zero() {
        let f = q();
        let b: Vec<Scalar> = [3, -2, 5].iter().map(|&v| f.from_i64(v)).collect();
        let id = ExactMatrix::identity(f, 3);
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));
        let z = ExactMatrix::zeros(f, 3, 2);
        assert_eq!(z.solve(&b).unwrap(), None);
        assert!(z.solve(&b[..2]).is_err());
    }

    #[test]
    fn characteristic_changes_rank() {
        // [[1,1],[1,-1]] is singular only in characteristic 2
        let rows = [vec![1, 1], vec![1, -1]];
        assert_eq!(ExactMatrix::from_i64_rows(q(), &rows).unwrap().rank(), 2);
        assert_eq!(ExactMatrix::from_i64_rows(gf(3), &rows).unwrap().rank(), 2);
        assert_eq!(ExactMatrix::from_i64_rows(gf(2), &rows).unwrap().rank(), 1);
    }

    #[test]
    fn rational_solution_is_exact() {
        let f = q();
        let m = ExactMatrix::from_i64_rows(f, &[vec![2, 1], vec![1, 3]]).unwrap();
        let b = vec![f.from_i64(1), f.from_i64(0)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
        let expect = Scalar::Rational(BigRational::new(BigInt::from(3), BigInt::from(5)));
        assert_eq!(x[0], expect);
    }

    #[test]
    fn incremental_span_tracks_combinations() {
        let a = ModArith::new(3);
        let mut span = IncrementalSpan::new(a, 3);
        assert!(span.push(&[1, 1, 0]));
        assert!(span.push(&[0, 1, 1]));
        assert!(!span.push(&[1, 2, 1]));
        // (1,0,2) = (1,1,0) - (0,1,1) over GF(3)
        assert_eq!(span.express(&[1, 0, 2]), Some(vec![1, 2]));
        assert_eq!(span.express(&[0, 0, 1]), None);
        span.pop();
        assert_eq!(span.rows.len(), 1);
        assert_eq!(span.express(&[2, 2, 0]), Some(vec![2]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
            (0usize..6, 0usize..6)
                .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-2i64..=2, r * c)))
        }

        fn build(f: FieldSpec, (r, c, v): &(usize, usize, Vec<i64>)) -> ExactMatrix {
            let rows: Vec<Vec<i64>> = (0..*r).map(|i| v[i * c..(i + 1) * c].to_vec()).collect();
            if *r == 0 {
                ExactMatrix::zeros(f, 0, *c)
            } else {
                ExactMatrix::from_i64_rows(f, &rows).unwrap()
            }
        }

        proptest! {
            #[test]
            fn rank_is_transpose_invariant(m in small_matrix(), p in prop::sample::select(vec![0u64, 2, 3, 5])) {
                let m = build(FieldSpec::new(p).unwrap(), &m);
                prop_assert_eq!(m.rank(), m.transpose().rank());
                prop_assert!(m.rank() <= m.rows().min(m.cols()));
            }

            #[test]
            fn rank_nullity(m in small_matrix(), p in prop::sample::select(vec![0u64, 2, 3])) {
                let m = build(FieldSpec::new(p).unwrap(), &m);
                prop_assert_eq!(m.rank() + m.nullity(), m.cols());
                let zero = vec![m.field().zero(); m.rows()];
                for v in m.nullspace_basis() {
                    prop_assert_eq!(m.mul_vec(&v).unwrap(), zero.clone());
                }
            }

            #[test]
            fn solutions_are_exact(m in small_matrix(), seed in proptest::collection::vec(-3i64..=3, 6), p in prop::sample::select(vec![0u64, 2, 3])) {
                let f = FieldSpec::new(p).unwrap();
                let m = build(f, &m);
                // b in the column space is always solvable
                let x0: Vec<Scalar> = seed.iter().take(m.cols()).map(|&v| f.from_i64(v)).chain(std::iter::repeat(f.zero())).take(m.cols()).collect();
                let b = m.mul_vec(&x0).unwrap();
                let x = m.solve(&b).unwrap();
                prop_assert!(x.is_some());
                prop_assert_eq!(m.mul_vec(&x.unwrap()).unwrap(), b);
            }
        }
    }
}
