use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use super::{Generator, Presentation, RingMode};
use crate::error::{Error, Result};
use crate::geometry::{Polytope, Scalar};
use crate::laurent::LaurentPoly;

/// The set `S` behind a one-generator ring `x ↦ S`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum PrincipalShape {
    Empty,
    Origin,
    /// `S = 2S` with `S` neither empty nor `{0}`.
    SelfSimilar,
    /// Bounded and not a single point.
    Bounded,
}

impl PrincipalShape {
    pub const ALL: [PrincipalShape; 4] = [
        PrincipalShape::Empty,
        PrincipalShape::Origin,
        PrincipalShape::SelfSimilar,
        PrincipalShape::Bounded,
    ];
}

impl fmt::Display for PrincipalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrincipalShape::Empty => "empty",
            PrincipalShape::Origin => "origin",
            PrincipalShape::SelfSimilar => "self-similar",
            PrincipalShape::Bounded => "bounded",
        })
    }
}

impl FromStr for PrincipalShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "empty" => Ok(PrincipalShape::Empty),
            "origin" => Ok(PrincipalShape::Origin),
            "self-similar" | "selfsimilar" => Ok(PrincipalShape::SelfSimilar),
            "bounded" => Ok(PrincipalShape::Bounded),
            other => Err(Error::Unsupported(format!(
                "unknown principal shape `{other}`"
            ))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdealDescription {
    WholeRing,
    Generated(LaurentPoly),
    Zero,
}

impl fmt::Display for IdealDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealDescription::WholeRing => write!(f, "(1)"),
            IdealDescription::Generated(g) => write!(f, "({g})"),
            IdealDescription::Zero => write!(f, "(0)"),
        }
    }
}

fn x_poly(text: &str) -> LaurentPoly {
    text.parse().expect("principal generator")
}

/// Kernel of `x ↦ S` for a shape of `S`.
pub fn classify_principal(shape: PrincipalShape, mode: RingMode) -> IdealDescription {
    use PrincipalShape::*;
    match (mode, shape) {
        (RingMode::Polynomial, Empty) => IdealDescription::Generated(x_poly("x")),
        (RingMode::Polynomial, SelfSimilar) => IdealDescription::Generated(x_poly("x*(x - 1)")),
        (RingMode::Laurent, Empty) => IdealDescription::WholeRing,
        (_, Origin) | (RingMode::Laurent, SelfSimilar) => {
            IdealDescription::Generated(x_poly("x - 1"))
        }
        (_, Bounded) => IdealDescription::Zero,
    }
}

/// Coefficients of a polynomial in `x` with nonnegative exponents, lowest first.
fn dense(f: &LaurentPoly) -> Result<Vec<BigRational>> {
    let mut out: Vec<BigRational> = Vec::new();
    for (m, c) in f.terms() {
        if let Some(other) = m.exponents().keys().find(|n| *n != "x") {
            return Err(Error::UnknownGenerator(other.clone()));
        }
        let e = m.exponent("x");
        if e < 0 {
            return Err(Error::NegativeExponent("x".into()));
        }
        let e = e as usize;
        if out.len() <= e {
            out.resize(e + 1, BigRational::zero());
        }
        out[e] = c.clone();
    }
    Ok(out)
}

/// Remainder of `a` modulo `b` over ℚ[x], `b` nonzero.
fn poly_remainder(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    let lead = b.last().expect("nonzero divisor");
    while a.len() >= b.len() {
        let top = a.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let q = &top / lead;
        let shift = a.len() + 1 - b.len();
        for (i, bc) in b[..b.len() - 1].iter().enumerate() {
            a[shift + i] -= &q * bc;
        }
    }
    a
}

/// Membership of `f` (a polynomial in `x`) in the kernel of `x ↦ S`.
///
/// Polynomial-ring ideals are tested by division; Laurent ideals after
/// clearing the lowest power of `x`, which is a unit there.
pub fn principal_member(shape: PrincipalShape, mode: RingMode, f: &LaurentPoly) -> Result<bool> {
    let coeffs = match mode {
        RingMode::Polynomial => dense(f)?,
        RingMode::Laurent => {
            let low = f.min_exponents().get("x").copied().unwrap_or(0);
            dense(&f.mul_monomial(&crate::laurent::Monomial::var("x").pow(-low)))?
        }
    };
    Ok(match classify_principal(shape, mode) {
        IdealDescription::WholeRing => true,
        IdealDescription::Zero => coeffs.iter().all(Zero::is_zero),
        IdealDescription::Generated(g) => {
            let divisor = dense(&g)?;
            poly_remainder(coeffs, &divisor).iter().all(Zero::is_zero)
        }
    })
}

/// The evaluation form of the same test: vanishing at `0` and/or `1`.
pub fn principal_member_by_evaluation(
    shape: PrincipalShape,
    mode: RingMode,
    f: &LaurentPoly,
) -> Result<bool> {
    let at =
        |v: i64| f.substitute(&[("x".to_string(), BigRational::from_integer(v.into()))].into());
    let vanishes = |v: i64| -> Result<bool> { Ok(at(v)?.is_zero()) };
    use PrincipalShape::*;
    match (mode, shape) {
        (_, Bounded) => Ok(f.is_zero()),
        (RingMode::Laurent, Empty) => Ok(true),
        (RingMode::Polynomial, Empty) => vanishes(0),
        (_, Origin) | (RingMode::Laurent, SelfSimilar) => vanishes(1),
        (RingMode::Polynomial, SelfSimilar) => Ok(vanishes(0)? && vanishes(1)?),
    }
}

/// A concrete realisation of the shapes the geometry can represent:
/// `{0}` for `Origin`, `[0, 1]` for `Bounded`.
pub fn principal_presentation(shape: PrincipalShape, mode: RingMode) -> Option<Presentation> {
    let polytope = match shape {
        PrincipalShape::Origin => Polytope::Point(Scalar::zero()),
        PrincipalShape::Bounded => Polytope::interval(Scalar::zero(), Scalar::one()).ok()?,
        _ => return None,
    };
    let declared = match classify_principal(shape, mode) {
        IdealDescription::Generated(g) => vec![g],
        _ => Vec::new(),
    };
    Presentation::new(
        format!("principal:{shape}"),
        vec![Generator::new("x", polytope, mode.polarity())],
        Polytope::Point(Scalar::zero()),
        declared,
    )
    .ok()
}
