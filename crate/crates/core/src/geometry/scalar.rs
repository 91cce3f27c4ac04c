//! Exact numbers of the quadratic field ℚ(√2).
//!
//! A [`Scalar`] is stored as `rational + radical·√2` with both parts exact
//! rationals. The representation is unique, so derived structural equality
//! coincides with numeric equality. Ordering is decided by integer
//! arithmetic only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    rational: BigRational,
    radical: BigRational,
}

impl Scalar {
    pub fn new(rational: BigRational, radical: BigRational) -> Self {
        Scalar { rational, radical }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    pub fn sqrt2() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Scalar::new(
            BigRational::new(BigInt::from(numer), BigInt::from(denom)),
            BigRational::zero(),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.radical
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rational)
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
    }

    /// Sign of `p + q·√2`, decided without floating point.
    pub fn signum(&self) -> Ordering {
        let p = self.rational.cmp(&BigRational::zero());
        let q = self.radical.cmp(&BigRational::zero());
        match (p, q) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (a, b) if a == b => a,
            (a, b) => {
                // opposite signs: compare p² with 2q²
                let p2 = &self.rational * &self.rational;
                let q2 = &self.radical * &self.radical * BigRational::from_integer(2.into());
                if p2 > q2 {
                    a
                } else {
                    b
                }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        // (p + q√2)⁻¹ = (p − q√2) / (p² − 2q²)
        let norm = &self.rational * &self.rational
            - &self.radical * &self.radical * BigRational::from_integer(2.into());
        Some(Scalar::new(&self.rational / &norm, -&self.radical / &norm))
    }

    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        other.recip().map(|inv| self * &inv)
    }

    pub fn scale(&self, factor: &BigRational) -> Scalar {
        Scalar::new(&self.rational * factor, &self.radical * factor)
    }

    pub fn midpoint(&self, other: &Scalar) -> Scalar {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        (self + other).scale(&half)
    }

    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64().unwrap_or(f64::NAN)
            + self.radical.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.as_rational() {
            return r.floor().to_integer();
        }
        let estimate = self.to_f64().floor();
        let mut k = BigInt::from(estimate as i64);
        while Scalar::from(k.clone()) > *self {
            k -= 1;
        }
        while Scalar::from(&k + 1) <= *self {
            k += 1;
        }
        k
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::new(BigRational::from_integer(v.into()), BigRational::zero())
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::new(BigRational::from_integer(v), BigRational::zero())
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::new(v, BigRational::zero())
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rational + &rhs.rational, &self.radical + &rhs.radical)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rational - &rhs.rational, &self.radical - &rhs.radical)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let two = BigRational::from_integer(2.into());
        Scalar::new(
            &self.rational * &rhs.rational + &self.radical * &rhs.radical * two,
            &self.rational * &rhs.radical + &self.radical * &rhs.rational,
        )
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.rational, -self.radical)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.rational, -&self.radical)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical.is_zero() {
            return write!(f, "{}", self.rational);
        }
        let radical = |f: &mut fmt::Formatter<'_>, q: &BigRational| {
            if q.is_one() {
                write!(f, "sqrt2")
            } else {
                write!(f, "{}*sqrt2", q)
            }
        };
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            if self.radical.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
        } else if self.radical.is_negative() {
            write!(f, "-")?;
        }
        radical(f, &self.radical.abs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar `{0}`: expected forms like 3, -1/2, sqrt2, 1+2*sqrt2")]
pub struct ScalarParseError(pub String);

fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

fn parse_radical_term(text: &str) -> Option<BigRational> {
    let body = text.trim();
    let (sign, body) = match body.strip_prefix('-') {
        Some(rest) => (-BigRational::one(), rest.trim()),
        None => (
            BigRational::one(),
            body.strip_prefix('+').unwrap_or(body).trim(),
        ),
    };
    let coeff = body.strip_suffix("sqrt2")?.trim();
    let coeff = coeff.strip_suffix('*').unwrap_or(coeff).trim();
    if coeff.is_empty() {
        Some(sign)
    } else {
        parse_rational(coeff).map(|c| c * sign)
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || ScalarParseError(s.to_string());
        if !text.contains("sqrt2") {
            return parse_rational(&text).map(Scalar::from).ok_or_else(err);
        }
        // split "p±q*sqrt2" at the sign that starts the radical term
        let split = text
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) if text[i..].contains("sqrt2") && !text[..i].contains("sqrt2") => {
                let rational = parse_rational(&text[..i]).ok_or_else(err)?;
                let radical = parse_radical_term(&text[i..]).ok_or_else(err)?;
                Ok(Scalar::new(rational, radical))
            }
            _ => parse_radical_term(&text)
                .map(|q| Scalar::new(BigRational::zero(), q))
                .ok_or_else(err),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn order_is_exact_near_sqrt2() {
        // 140/99 < √2 < 577/408 < 99/70
        assert!(s("140/99") < Scalar::sqrt2());
        assert!(Scalar::sqrt2() < s("99/70"));
        assert!(Scalar::sqrt2() < s("577/408"));
        assert!(s("1-sqrt2") < Scalar::zero());
        assert!(s("-3/2+sqrt2") < Scalar::zero());
        assert!(s("-7/5+sqrt2") > Scalar::zero());
    }

    #[test]
    fn parse_and_display() {
        for text in [
            "3",
            "-1/2",
            "sqrt2",
            "-sqrt2",
            "1+2*sqrt2",
            "1/2-3/4*sqrt2",
            "5*sqrt2",
        ] {
            assert_eq!(s(text).to_string(), text);
        }
        assert_eq!(
            s(" 2 * sqrt2 "),
            Scalar::sqrt2().scale(&BigRational::from_integer(2.into()))
        );
        assert!("sqrt3".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn floor_of_irrationals() {
        assert_eq!(Scalar::sqrt2().floor(), BigInt::from(1));
        assert_eq!((-Scalar::sqrt2()).floor(), BigInt::from(-2));
        assert_eq!(s("3+2*sqrt2").floor(), BigInt::from(5));
        assert_eq!(s("-5/2").floor(), BigInt::from(-3));
    }

    #[test]
    fn reciprocal() {
        let x = s("1+sqrt2");
        assert_eq!(&x * &x.recip().unwrap(), Scalar::one());
        assert!(Scalar::zero().recip().is_none());
        assert_eq!(
            s("1").checked_div(&Scalar::sqrt2()).unwrap(),
            s("1/2*sqrt2")
        );
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| {
            Scalar::new(
                BigRational::new(a.into(), b.into()),
                BigRational::new(c.into(), d.into()),
            )
        })
    }

    proptest! {
        #[test]
        fn order_agrees_with_floats_when_separated(a in arb_scalar(), b in arb_scalar()) {
            let (fa, fb) = (a.to_f64(), b.to_f64());
            if (fa - fb).abs() > 1e-9 {
                prop_assert_eq!(a < b, fa < fb);
            }
        }

        #[test]
        fn display_roundtrip(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }

        #[test]
        fn arithmetic_is_consistent(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
            }
        }
    }
}
