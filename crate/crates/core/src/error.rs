use thiserror::Error;

use crate::laurent::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("family mismatch: cannot combine {left} with {right}")]
    FamilyMismatch { left: String, right: String },

    #[error("grid set is empty")]
    EmptyGridSet,

    #[error("interval endpoints out of order: {lo} > {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("box axis {axis} has lower bound above upper bound")]
    InvalidBox { axis: usize },

    #[error("lattice point coordinates must be integers: {0}")]
    NonIntegralPoint(String),

    #[error("product factors must be boxes or grid sets, got {0}")]
    InvalidProductFactor(String),

    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },

    #[error(
        "division by zero: variable `{0}` appears with a negative exponent and was assigned 0"
    )]
    DivisionByZero(String),

    #[error("expected a univariate Laurent polynomial, found variables {0:?}")]
    Arity(Vec<String>),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("negative exponent on non-invertible generator `{0}`")]
    NegativeExponent(String),

    #[error("declared kernel generator `{0}` is not in the kernel")]
    DeclaredNotInKernel(String),

    #[error("degenerate interval: alpha equals beta")]
    DegenerateInterval,

    #[error("witness leaves more than one variable free: {0:?}")]
    UnsupportedWitness(Vec<String>),

    #[error("declared generator index {index} out of range ({len} generators)")]
    TargetIndex { index: usize, len: usize },

    #[error("{0} is not a face of the polytope")]
    FaceNotInPolytope(String),

    #[error("face {0} listed twice")]
    DuplicateFace(String),

    #[error("face set is not an antichain: {0} is contained in {1}")]
    AntichainViolation(String, String),

    #[error("face set contains the polytope itself")]
    ContainsWholePolytope,

    #[error("face sets belong to different polytopes")]
    PolytopeMismatch,

    #[error("polytope has {0} faces; exhaustive enumeration is limited to 12")]
    FaceBoundExceeded(usize),

    #[error("polynomial image is not the indicator of a closed convex grid set")]
    NotAConvexGridSet,

    #[error("{0}")]
    Unsupported(String),

    #[error("presentation document: {0}")]
    Document(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
