//! Exact-arithmetic kernel for a Γ-graded Lie superalgebra with basis
//! {L_α, H_α, G⁺_α, G⁻_α, c}: structure constants, classified derivations,
//! the monomial automorphism group, and exhaustive finite-window audits
//! with counterexample witnesses.

pub mod algebra;
pub mod automorphisms;
pub mod derivations;
pub mod error;
pub mod gamma;
pub mod parse;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod table;

pub use error::{Error, Result};
