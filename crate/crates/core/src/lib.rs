//! Finite BCK-algebras given by Cayley tables.
//!
//! Elements of an algebra of order `n` are the indices `0..n`, with `0` the
//! constant. [`FiniteBck`] checks the axioms on construction; the other
//! modules compute pseudo-commutators, closures, central series, quotients
//! and enumerate all algebras of small order up to isomorphism.

pub mod algebra;
pub mod closure;
pub mod enumerate;
pub mod error;
pub mod examples;
pub mod format;
pub mod quotient;
pub mod series;
pub mod set;

pub type Element = usize;

pub use algebra::{validate, Axiom, FiniteBck, ValidationReport, Violation};
pub use error::{BckError, IdealFailure, Result};
pub use set::ElementSet;
