#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod charp;
pub mod corrections;
pub mod error;
pub mod expr;
pub mod field;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod pbw;
pub mod poisson;
pub mod poly;
pub mod rational;
pub mod report;
pub mod suites;

pub use error::AlgebraError;
pub use field::{Coeff, Field};
pub use poly::{Monomial, Polynomial, VarRegistry};
pub use rational::Rational;

pub use liealg::{Level, StructureTable};
