//! Exact computations in quantum coordinate rings of SL₂ and their degenerations.
//!
//! The crate provides a rewriting engine for finitely presented algebras over
//! the field ℚ(q) of rational functions in a formal parameter, the quantum
//! group U_q(sl₂) with its irreducible modules and Clebsch–Gordan data, the
//! Peter–Weyl filtration of O_q(SL₂), its Rees algebra (the quantum Vinberg
//! algebra) and partial associated graded algebras, classical Poisson
//! brackets, and torsion tests for graded modules.

mod error;
pub mod expr;
pub mod lattice;
pub mod linalg;
mod memo;
pub mod ncalg;
pub mod poisson;
pub mod projcat;
pub mod qgroups;
pub mod reesgr;
pub mod scalars;

pub use error::{Error, Result};
