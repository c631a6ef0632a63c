//! Koszul homology of monomial quotient rings: boundary ideals, product
//! vanishing criteria, symmetric ideals and linear-quotient bases.

pub mod boundary_ideal;
pub mod error;
pub mod exactalg;
pub mod golod;
pub mod io;
pub mod koszul;
pub mod linquot;
pub mod monomials;
pub mod selftest;
pub mod simplicial_matroid;
pub mod symmetric;

pub use error::{Error, Result};
pub use exactalg::{ExactMatrix, FieldSpec, Scalar};
pub use monomials::{Monomial, MonomialIdeal, VarSet};
