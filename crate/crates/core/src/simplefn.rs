//! Finite rational combinations of cell indicators.
//!
//! Functions are stored in the basis of relatively open cells, which makes
//! equality structural: two functions agree pointwise exactly when their
//! term maps are identical.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Ambient, Cell, Polytope, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndicatorMode {
    Closed,
    RelativeInterior,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleFunction {
    ambient: Ambient,
    terms: BTreeMap<Cell, BigRational>,
}

fn sign(exponent: usize) -> BigRational {
    if exponent.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigRational>, key: K, coeff: BigRational) {
    let entry = map.entry(key).or_insert_with(BigRational::zero);
    *entry += coeff;
}

impl SimpleFunction {
    pub fn zero(ambient: Ambient) -> Self {
        SimpleFunction {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a function from arbitrary cell terms and brings it to canonical form.
    pub fn from_cells(
        ambient: Ambient,
        cells: impl IntoIterator<Item = (Cell, BigRational)>,
    ) -> Self {
        let mut terms = BTreeMap::new();
        for (cell, coeff) in cells {
            accumulate(&mut terms, cell, coeff);
        }
        SimpleFunction { ambient, terms }.normalized()
    }

    pub fn indicator(p: &Polytope, mode: IndicatorMode) -> Self {
        let boundary: Vec<Polytope> = match mode {
            IndicatorMode::Closed => Vec::new(),
            IndicatorMode::RelativeInterior => p.faces().into_iter().filter(|f| f != p).collect(),
        };
        let cells = p
            .decompose_cells()
            .into_iter()
            .filter(|c| {
                let x = c.representative_point();
                !boundary.iter().any(|f| f.contains(&x))
            })
            .map(|c| (c, BigRational::one()));
        SimpleFunction::from_cells(p.ambient(), cells)
    }

    /// Signed sum of closed polytope indicators.
    pub fn from_polytopes<'a>(
        ambient: Ambient,
        parts: impl IntoIterator<Item = (&'a Polytope, BigRational)>,
    ) -> Self {
        let cells = parts.into_iter().flat_map(|(p, coeff)| {
            p.decompose_cells()
                .into_iter()
                .map(move |c| (c, coeff.clone()))
        });
        SimpleFunction::from_cells(ambient, cells)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<Cell, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        if self.ambient == Ambient::Line {
            self.terms = canonical_line(&self.terms);
        }
        self
    }

    fn check_ambient(&self, other: &SimpleFunction) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ambient.to_string(),
                right: other.ambient.to_string(),
            })
        }
    }

    /// Pointwise linear combination `Σ c_i f_i`.
    pub fn combine(coeffs: &[BigRational], fs: &[SimpleFunction]) -> Result<SimpleFunction> {
        let first = fs
            .first()
            .ok_or_else(|| Error::Unsupported("empty combination has no ambient".into()))?;
        if coeffs.len() != fs.len() {
            return Err(Error::Unsupported(format!(
                "{} coefficients for {} functions",
                coeffs.len(),
                fs.len()
            )));
        }
        let mut terms = BTreeMap::new();
        for (c, f) in coeffs.iter().zip(fs) {
            first.check_ambient(f)?;
            for (cell, v) in &f.terms {
                accumulate(&mut terms, cell.clone(), c * v);
            }
        }
        Ok(SimpleFunction {
            ambient: first.ambient.clone(),
            terms,
        }
        .normalized())
    }

    pub fn add(&self, other: &SimpleFunction) -> Result<SimpleFunction> {
        SimpleFunction::combine(
            &[BigRational::one(), BigRational::one()],
            &[self.clone(), other.clone()],
        )
    }

    pub fn sub(&self, other: &SimpleFunction) -> Result<SimpleFunction> {
        SimpleFunction::combine(
            &[BigRational::one(), -BigRational::one()],
            &[self.clone(), other.clone()],
        )
    }

    pub fn scaled(&self, factor: &BigRational) -> SimpleFunction {
        SimpleFunction {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, v)| (c.clone(), v * factor))
                .collect(),
        }
        .normalized()
    }

    /// Rewrites the function as a signed sum of closed polytope indicators.
    pub fn closed_basis(&self) -> BTreeMap<Polytope, BigRational> {
        let mut out = BTreeMap::new();
        for (cell, coeff) in &self.terms {
            let dim = cell.dim();
            for face in cell.closure().faces() {
                accumulate(&mut out, face.clone(), coeff * sign(dim - face.dim()));
            }
        }
        out.retain(|_, c: &mut BigRational| !c.is_zero());
        out
    }

    /// Product in the Minkowski ring: `[P]·[Q] = [P+Q]`, extended bilinearly.
    pub fn multiply(&self, other: &SimpleFunction) -> Result<SimpleFunction> {
        self.check_ambient(other)?;
        let left = self.closed_basis();
        let right = other.closed_basis();
        let mut terms = BTreeMap::new();
        for (p, a) in &left {
            for (q, b) in &right {
                let coeff = a * b;
                for cell in p.minkowski_sum(q)?.decompose_cells() {
                    accumulate(&mut terms, cell, coeff.clone());
                }
            }
        }
        Ok(SimpleFunction {
            ambient: self.ambient.clone(),
            terms,
        }
        .normalized())
    }

    pub fn evaluate_at(&self, point: &[Scalar]) -> BigRational {
        self.terms
            .iter()
            .filter(|(cell, _)| cell.contains(point))
            .map(|(_, v)| v.clone())
            .sum()
    }

    /// Euler characteristic: each open cell of dimension `k` counts `(-1)^k`.
    pub fn euler_char(&self) -> BigRational {
        self.terms
            .iter()
            .map(|(cell, v)| v * sign(cell.dim()))
            .sum()
    }

    /// A point where the function is nonzero, with its value.
    pub fn witness(&self) -> Option<(Vec<Scalar>, BigRational)> {
        self.terms.iter().next().map(|(cell, _)| {
            let point = cell.representative_point();
            let value = self.evaluate_at(&point);
            (point, value)
        })
    }
}

/// Minimal breakpoint form of a function on the line.
fn canonical_line(terms: &BTreeMap<Cell, BigRational>) -> BTreeMap<Cell, BigRational> {
    let mut points: Vec<Scalar> = terms
        .keys()
        .flat_map(|cell| match cell {
            Cell::Point1D(x) => vec![x.clone()],
            Cell::OpenInterval1D(lo, hi) => vec![lo.clone(), hi.clone()],
            other => panic!("cell {other} does not live on the line"),
        })
        .collect();
    points.sort();
    points.dedup();
    let n = points.len();
    let index = |x: &Scalar| points.binary_search(x).expect("breakpoint");

    // difference arrays over breakpoints and over the gaps between them
    let mut at_point = vec![BigRational::zero(); n];
    let mut gap_delta = vec![BigRational::zero(); n];
    let mut point_delta = vec![BigRational::zero(); n + 1];
    for (cell, coeff) in terms {
        match cell {
            Cell::Point1D(x) => at_point[index(x)] += coeff,
            Cell::OpenInterval1D(lo, hi) => {
                let (i, j) = (index(lo), index(hi));
                gap_delta[i] += coeff;
                gap_delta[j] -= coeff;
                point_delta[i + 1] += coeff;
                point_delta[j] -= coeff;
            }
            _ => unreachable!(),
        }
    }
    let mut gap = vec![BigRational::zero(); n];
    let mut running_gap = BigRational::zero();
    let mut running_point = BigRational::zero();
    for i in 0..n {
        running_gap += &gap_delta[i];
        gap[i] = running_gap.clone();
        running_point += &point_delta[i];
        at_point[i] += &running_point;
    }

    let zero = BigRational::zero();
    let kept: Vec<usize> = (0..n)
        .filter(|&i| {
            let left = if i == 0 { &zero } else { &gap[i - 1] };
            !(at_point[i] == *left && at_point[i] == gap[i])
        })
        .collect();

    let mut out = BTreeMap::new();
    for (k, &i) in kept.iter().enumerate() {
        if !at_point[i].is_zero() {
            out.insert(Cell::Point1D(points[i].clone()), at_point[i].clone());
        }
        if let Some(&j) = kept.get(k + 1) {
            if !gap[i].is_zero() {
                out.insert(
                    Cell::OpenInterval1D(points[i].clone(), points[j].clone()),
                    gap[i].clone(),
                );
            }
        }
    }
    out
}

impl fmt::Display for SimpleFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(cell, v)| {
                if v.is_one() {
                    cell.to_string()
                } else {
                    format!("{v}*{cell}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
