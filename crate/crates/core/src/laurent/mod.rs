//! Multivariate Laurent polynomials with rational coefficients over named
//! generators.

mod parse;
mod univariate;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use parse::{parse_poly, ParseError, ParseOptions};
pub use univariate::univariate_ideal_member;

/// A product of generator powers; exponents may be negative, never zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(BTreeMap<String, i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(name: &str) -> Self {
        Monomial::from_exponents([(name.to_string(), 1)])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (String, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (name, e) in exps {
            *map.entry(name).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        Monomial(map)
    }

    pub fn exponents(&self) -> &BTreeMap<String, i64> {
        &self.0
    }

    pub fn exponent(&self, name: &str) -> i64 {
        self.0.get(name).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }

    /// Sum of absolute exponents.
    pub fn norm(&self) -> i64 {
        self.0.values().map(|e| e.abs()).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.0.iter().chain(&other.0).map(|(n, e)| (n.clone(), *e)))
    }

    pub fn pow(&self, i: i64) -> Monomial {
        Monomial::from_exponents(self.0.iter().map(|(n, e)| (n.clone(), e * i)))
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Monomial {
        Monomial::from_exponents(
            self.0
                .iter()
                .map(|(n, e)| (map.get(n).cloned().unwrap_or_else(|| n.clone()), *e)),
        )
    }
}

impl Ord for Monomial {
    /// Graded by total degree, then lexicographic with earlier names heavier.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let names: BTreeSet<&String> = self.0.keys().chain(other.0.keys()).collect();
            names
                .into_iter()
                .map(|n| self.exponent(n).cmp(&other.exponent(n)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let factors: Vec<String> = self
            .0
            .iter()
            .map(|(n, e)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        write!(f, "{}", factors.join("*"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        LaurentPoly::from_terms([(Monomial::one(), c)])
    }

    pub fn integer(n: i64) -> Self {
        LaurentPoly::constant(q(n))
    }

    pub fn var(name: &str) -> Self {
        LaurentPoly::from_terms([(Monomial::var(name), BigRational::one())])
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::from_terms([(m, BigRational::one())])
    }

    /// `name^e` for any integer `e`.
    pub fn var_pow(name: &str, e: i64) -> Self {
        LaurentPoly::monomial(Monomial::from_exponents([(name.to_string(), e)]))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial is a constant.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.0.keys().cloned())
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), v * c)))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(n, v)| (n.mul(m), v.clone())))
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// `f(x_1^i, …, x_n^i)`; `i = 0` sends every generator to 1.
    pub fn power_map(&self, i: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, v)| (m.pow(i), v.clone())))
    }

    /// Partial evaluation; unassigned generators stay symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<String, BigRational>) -> Result<LaurentPoly> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (name, &e) in &m.0 {
                match assignment.get(name) {
                    Some(value) if value.is_zero() && e < 0 => {
                        return Err(Error::DivisionByZero(name.clone()))
                    }
                    Some(value) => coeff *= pow_rational(value, e),
                    None => rest.push((name.clone(), e)),
                }
            }
            out.push((Monomial::from_exponents(rest), coeff));
        }
        Ok(LaurentPoly::from_terms(out))
    }

    /// Value with every generator set to 1.
    pub fn at_ones(&self) -> BigRational {
        self.terms.values().sum()
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (m.rename(map), c.clone())))
    }

    /// Smallest exponent of each generator.
    pub fn min_exponents(&self) -> BTreeMap<String, i64> {
        let mut mins = BTreeMap::new();
        for name in self.variables() {
            let low = self
                .terms
                .keys()
                .map(|m| m.exponent(&name))
                .min()
                .unwrap_or(0);
            mins.insert(name, low);
        }
        mins
    }

    pub fn parse_with(text: &str, options: &ParseOptions) -> Result<LaurentPoly> {
        parse_poly(text, options).map_err(Error::from)
    }
}

pub(crate) fn pow_rational(value: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { value.recip() } else { value.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .chain(&rhs.terms)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(m, a)| rhs.terms.iter().map(move |(n, b)| (m.mul(n), a * b))),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), -c)))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending graded order, e.g. `x*y - x*z - y*z + z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (m.is_one(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{magnitude}*{m}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_poly(s, &ParseOptions::default())
    }
}
