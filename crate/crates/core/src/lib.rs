//! Minkowski rings of lattice polytope families.
//!
//! Elements of a Minkowski ring are formal sums of polytope indicators with
//! `[P]·[Q] = [P+Q]`. This crate evaluates Laurent polynomials over named
//! polytopes as exact simple functions and decides kernel membership by
//! comparing canonical cell decompositions.

pub mod error;
pub mod geometry;
pub mod identities;
pub mod laurent;
pub mod presentations;
pub mod products;
pub mod rewriting;
pub mod simplefn;

pub use error::{Error, Result};
