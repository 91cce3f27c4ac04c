//! Polytope families, their faces, sums and cell decompositions.

mod cell;
mod grid;
mod polytope;
mod scalar;

pub use cell::{format_point, Ambient, AxisCell, Cell};
pub use grid::{GridPoint, GridSet};
pub use polytope::Polytope;
pub use scalar::{Scalar, ScalarParseError};
