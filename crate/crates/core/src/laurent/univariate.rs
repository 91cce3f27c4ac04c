//! Ideal membership in the one-variable Laurent ring `ℚ[t, t⁻¹]`.

use num_rational::BigRational;
use num_traits::Zero;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Dense coefficients, lowest degree first, with the lowest monomial divided out.
fn dense(f: &LaurentPoly, var: &str) -> Vec<BigRational> {
    let low = f.terms().keys().map(|m| m.exponent(var)).min().unwrap_or(0);
    let high = f.terms().keys().map(|m| m.exponent(var)).max().unwrap_or(0);
    let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
    for (m, c) in f.terms() {
        coeffs[(m.exponent(var) - low) as usize] = c.clone();
    }
    coeffs
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo `b` (`b` nonzero, trimmed).
fn remainder(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().expect("nonempty") / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> Vec<BigRational> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = remainder(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Whether `target` lies in the ideal of `ℚ[t, t⁻¹]` generated by `gens`.
///
/// Every ideal of this ring is principal, generated by the gcd of the
/// generators once their lowest monomials (units) are divided out.
pub fn univariate_ideal_member(target: &LaurentPoly, gens: &[LaurentPoly]) -> Result<bool> {
    let mut names = target.variables();
    for g in gens {
        names.extend(g.variables());
    }
    if names.len() > 1 {
        return Err(Error::Arity(names.into_iter().collect()));
    }
    if target.is_zero() {
        return Ok(true);
    }
    let var = names.into_iter().next().unwrap_or_default();
    let g = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| dense(g, &var))
        .fold(Vec::new(), gcd);
    if g.is_empty() {
        return Ok(false);
    }
    Ok(remainder(&dense(target, &var), &g).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> LaurentPoly {
        text.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert!(!univariate_ideal_member(&p("2 - y3"), &[p("(2 - y3)^2")]).unwrap());
        assert!(univariate_ideal_member(&LaurentPoly::zero(), &[p("t^2 + 1")]).unwrap());
        assert!(univariate_ideal_member(&p("(y-1)^2"), &[p("y-1")]).unwrap());
    }

    #[test]
    fn monomials_are_units() {
        assert!(univariate_ideal_member(&p("1"), &[p("t^3")]).unwrap());
        assert!(univariate_ideal_member(&p("t^-2 - t^-1"), &[p("t^5 - t^6")]).unwrap());
        assert!(univariate_ideal_member(&p("t - 1"), &[p("t^2 - 1"), p("t^3 - 1")]).unwrap());
        assert!(!univariate_ideal_member(&p("t + 1"), &[p("t^2 - 1"), p("t^3 - 1")]).unwrap());
    }

    #[test]
    fn constants_and_empty() {
        assert!(univariate_ideal_member(&p("t"), &[p("3")]).unwrap());
        assert!(!univariate_ideal_member(&p("t"), &[]).unwrap());
        assert!(!univariate_ideal_member(&p("5"), &[LaurentPoly::zero()]).unwrap());
    }

    #[test]
    fn arity() {
        assert!(matches!(
            univariate_ideal_member(&p("x"), &[p("y")]),
            Err(Error::Arity(_))
        ));
    }
}
