//! Presentations of Minkowski rings: named generators mapped to polytopes,
//! the induced surjection from Laurent polynomials onto simple functions,
//! and kernel membership decided through that map.

mod catalog;
mod document;
mod principal;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::geometry::{Ambient, Cell, Polytope, Scalar};
use crate::laurent::{univariate_ideal_member, LaurentPoly, Monomial, ParseOptions};
use crate::simplefn::SimpleFunction;

pub use catalog::{
    box_ring, coxeter_minimality_witnesses, coxeter_ring, interval_case, interval_ring, point_ring,
    IntervalCase, IntervalNaming,
};
pub use principal::{
    classify_principal, principal_member, principal_member_by_evaluation, principal_presentation,
    IdealDescription, PrincipalShape,
};

/// Whether negative exponents are allowed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Polarity {
    Plain,
    Invertible,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum RingMode {
    Polynomial,
    Laurent,
}

impl RingMode {
    pub fn polarity(self) -> Polarity {
        match self {
            RingMode::Polynomial => Polarity::Plain,
            RingMode::Laurent => Polarity::Invertible,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub name: String,
    pub polytope: Polytope,
    pub polarity: Polarity,
}

impl Generator {
    pub fn new(name: impl Into<String>, polytope: Polytope, polarity: Polarity) -> Self {
        Generator {
            name: name.into(),
            polytope,
            polarity,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    id: String,
    generators: Vec<Generator>,
    unit: Polytope,
    declared: Vec<LaurentPoly>,
}

/// Outcome of a kernel query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Membership {
    pub member: bool,
    /// For non-members, a point where the image is nonzero and its value there.
    pub witness: Option<(Vec<Scalar>, BigRational)>,
}

impl Presentation {
    /// Builds a presentation and checks every declared generator against the kernel.
    pub fn new(
        id: impl Into<String>,
        generators: Vec<Generator>,
        unit: Polytope,
        declared: Vec<LaurentPoly>,
    ) -> Result<Self> {
        let ambient = unit.ambient();
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.polytope.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient.to_string(),
                    right: g.polytope.ambient().to_string(),
                });
            }
            if !seen.insert(g.name.clone()) {
                return Err(Error::Unsupported(format!(
                    "generator `{}` listed twice",
                    g.name
                )));
            }
        }
        let presentation = Presentation {
            id: id.into(),
            generators,
            unit: unit.origin(),
            declared: Vec::new(),
        };
        presentation.with_declared(declared)
    }

    /// Replaces the declared generators after verifying each one.
    pub fn with_declared(mut self, declared: Vec<LaurentPoly>) -> Result<Self> {
        for g in &declared {
            if !self.kernel_member(g)? {
                return Err(Error::DeclaredNotInKernel(g.to_string()));
            }
        }
        self.declared = declared;
        Ok(self)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    pub fn unit(&self) -> &Polytope {
        &self.unit
    }

    pub fn ambient(&self) -> Ambient {
        self.unit.ambient()
    }

    pub fn declared(&self) -> &[LaurentPoly] {
        &self.declared
    }

    pub fn is_laurent(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.polarity == Polarity::Invertible)
    }

    pub fn parse_options(&self) -> ParseOptions {
        ParseOptions::new(
            self.names(),
            self.generators
                .iter()
                .filter(|g| g.polarity == Polarity::Invertible)
                .map(|g| g.name.clone()),
        )
    }

    /// Parses a polynomial over this presentation's alphabet.
    pub fn parse(&self, text: &str) -> Result<LaurentPoly> {
        LaurentPoly::parse_with(text, &self.parse_options())
    }

    /// Positive and negative parts of a monomial as Minkowski sums.
    fn monomial_parts(&self, m: &Monomial) -> Result<(Polytope, Polytope, bool)> {
        let mut pos = self.unit.clone();
        let mut neg = self.unit.clone();
        let mut inverted = false;
        for (name, &e) in m.exponents() {
            let g = self
                .generator(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            if e < 0 && g.polarity == Polarity::Plain {
                return Err(Error::NegativeExponent(name.clone()));
            }
            let scaled = g.polytope.scale(e.unsigned_abs() as u32);
            if e > 0 {
                pos = pos.minkowski_sum(&scaled)?;
            } else {
                neg = neg.minkowski_sum(&scaled)?;
                inverted = true;
            }
        }
        Ok((pos, neg, inverted))
    }

    fn monomial_cells(
        &self,
        m: &Monomial,
        coeff: &BigRational,
        out: &mut Vec<(Cell, BigRational)>,
    ) -> Result<()> {
        let (pos, neg, inverted) = self.monomial_parts(m)?;
        if !inverted {
            out.extend(
                pos.decompose_cells()
                    .into_iter()
                    .map(|c| (c, coeff.clone())),
            );
            return Ok(());
        }
        // [N]^{-1} = Σ_F (-1)^{dim F} [-F] over the faces of N
        for face in neg.faces() {
            let signed = if face.dim() % 2 == 0 {
                coeff.clone()
            } else {
                -coeff
            };
            let shifted = pos.minkowski_sum(&face.neg())?;
            out.extend(
                shifted
                    .decompose_cells()
                    .into_iter()
                    .map(|c| (c, signed.clone())),
            );
        }
        Ok(())
    }

    /// Image of `f` as a canonical simple function.
    pub fn phi_map(&self, f: &LaurentPoly) -> Result<SimpleFunction> {
        let mut cells = Vec::new();
        for (m, c) in f.terms() {
            self.monomial_cells(m, c, &mut cells)?;
        }
        Ok(SimpleFunction::from_cells(self.ambient(), cells))
    }

    pub fn kernel_member(&self, f: &LaurentPoly) -> Result<bool> {
        Ok(self.phi_map(f)?.is_zero())
    }

    pub fn membership(&self, f: &LaurentPoly) -> Result<Membership> {
        let image = self.phi_map(f)?;
        Ok(Membership {
            member: image.is_zero(),
            witness: image.witness(),
        })
    }

    /// Certifies that declared generator `target` is not in the ideal of the others.
    ///
    /// After substitution either every generator is a constant, in which case
    /// the others must vanish while the target does not, or one variable is
    /// left and the univariate ideal test decides.
    pub fn minimality_witness(
        &self,
        target: usize,
        witness: &BTreeMap<String, BigRational>,
    ) -> Result<bool> {
        if target >= self.declared.len() {
            return Err(Error::TargetIndex {
                index: target,
                len: self.declared.len(),
            });
        }
        let images = self
            .declared
            .iter()
            .map(|g| g.substitute(witness))
            .collect::<Result<Vec<_>>>()?;
        let free: BTreeSet<String> = images.iter().flat_map(LaurentPoly::variables).collect();
        let target_image = &images[target];
        let others: Vec<LaurentPoly> = images
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != target)
            .map(|(_, g)| g.clone())
            .collect();
        match free.len() {
            0 => Ok(!target_image.is_zero() && others.iter().all(LaurentPoly::is_zero)),
            1 => Ok(!univariate_ideal_member(target_image, &others)?),
            _ => Err(Error::UnsupportedWitness(free.into_iter().collect())),
        }
    }

    /// Renames generators (and declared polynomials) without re-verifying.
    pub fn renamed(&self, map: &BTreeMap<String, String>) -> Presentation {
        Presentation {
            id: self.id.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| Generator {
                    name: map.get(&g.name).cloned().unwrap_or_else(|| g.name.clone()),
                    ..g.clone()
                })
                .collect(),
            unit: self.unit.clone(),
            declared: self.declared.iter().map(|d| d.rename(map)).collect(),
        }
    }

    /// Assignment sending every generator to the same value.
    pub fn uniform_assignment(&self, value: i64) -> BTreeMap<String, BigRational> {
        self.names()
            .into_iter()
            .map(|n| (n, BigRational::from_integer(value.into())))
            .collect()
    }
}
