//! Exact rational numbers.
//!
//! Every endpoint, grade and affine coefficient in this crate is a [`Rat`].
//! There is no floating point on any computation path; conversion to `f64`
//! exists only for rendering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An exact rational in reduced form (`den > 0`). Values whose numerator and
/// denominator fit in `i64` are stored inline; larger ones spill to a
/// [`BigRational`]. The representation is canonical, so derived equality and
/// hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

fn small(n: i128, d: i128) -> Option<(i64, i64)> {
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) if n != i64::MIN => Some((n, d)),
        _ => None,
    }
}

impl Rat {
    /// `n / d` from wide parts; `d != 0`.
    fn from_wide(n: i128, d: i128) -> Rat {
        let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = n.gcd(&d);
        let (n, d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        match small(n, d) {
            Some((n, d)) => Rat(Repr::Small(n, d)),
            None => Rat(Repr::Big(Box::new(BigRational::new_raw(n.into(), d.into())))),
        }
    }

    fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i128(), r.denom().to_i128()) {
            (Some(n), Some(d)) => match small(n, d) {
                Some((n, d)) => Rat(Repr::Small(n, d)),
                None => Rat(Repr::Big(Box::new(r))),
            },
            _ => Rat(Repr::Big(Box::new(r))),
        }
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_wide(num.into(), den.into())
    }

    pub fn from_integer(n: i64) -> Rat {
        Rat::new(n, 1)
    }

    pub fn zero() -> Rat {
        Rat(Repr::Small(0, 1))
    }

    pub fn one() -> Rat {
        Rat(Repr::Small(1, 1))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => (*n).into(),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => (*d).into(),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw((*n).into(), (*d).into()),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    /// True when `0 <= self <= 1`.
    pub fn in_unit(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => 0 <= *n && n <= d,
            Repr::Big(_) => !self.is_negative() && *self <= Rat::one(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => n.div_euclid(*d).into(),
            Repr::Big(r) => r.floor().to_integer(),
        }
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Rat) -> Rat {
        (self + other) / Rat::from_integer(2)
    }

    /// Nearest value `k/den` to `self` (ties round down).
    pub fn round_to_denominator(&self, den: u32) -> Rat {
        let den = Rat::from_integer(den.into());
        let scaled = self * &den;
        let floor = Rat::from_big(BigRational::from_integer(scaled.floor()));
        let k = if &scaled - &floor > Rat::new(1, 2) { floor + Rat::one() } else { floor };
        k / den
    }

    /// Lossy conversion, for rendering only.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (i128::from(*a) * i128::from(*d)).cmp(&(i128::from(*c) * i128::from(*b))),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat::from_big(r)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_integer(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p/q`, integers and decimals (`0.3` is exactly `3/10`).
impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRatError::Empty);
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let malformed = || ParseRatError::Malformed(s.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let value = if let Some((n, d)) = body.split_once('/') {
            if !digits(n) || !digits(d) {
                return Err(malformed());
            }
            let n: BigInt = n.parse().map_err(|_| malformed())?;
            let d: BigInt = d.parse().map_err(|_| malformed())?;
            if d.is_zero() {
                return Err(ParseRatError::ZeroDenominator(s.to_string()));
            }
            BigRational::new(n, d)
        } else if let Some((int, frac)) = body.split_once('.') {
            if !(digits(int) || int.is_empty()) || !digits(frac) {
                return Err(malformed());
            }
            let int: BigInt = if int.is_empty() { BigInt::zero() } else { int.parse().map_err(|_| malformed())? };
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let frac: BigInt = frac.parse().map_err(|_| malformed())?;
            BigRational::new(int * scale.clone() + frac, scale)
        } else {
            if !digits(body) {
                return Err(malformed());
            }
            BigRational::from_integer(body.parse().map_err(|_| malformed())?)
        };
        Ok(Rat::from_big(if neg { -value } else { value }))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn add(a: &Rat, b: &Rat) -> Rat {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) if d1 == d2 => Rat::from_wide(i128::from(*n1) + i128::from(*n2), (*d1).into()),
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            let (n1, d1, n2, d2) = (i128::from(*n1), i128::from(*d1), i128::from(*n2), i128::from(*d2));
            Rat::from_wide(n1 * d2 + n2 * d1, d1 * d2)
        }
        _ => Rat::from_big(a.to_big() + b.to_big()),
    }
}

fn sub(a: &Rat, b: &Rat) -> Rat {
    add(a, &-b)
}

fn mul(a: &Rat, b: &Rat) -> Rat {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => Rat::from_wide(i128::from(*n1) * i128::from(*n2), i128::from(*d1) * i128::from(*d2)),
        _ => Rat::from_big(a.to_big() * b.to_big()),
    }
}

fn div(a: &Rat, b: &Rat) -> Rat {
    assert!(!b.is_zero(), "division by zero");
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => Rat::from_wide(i128::from(*n1) * i128::from(*d2), i128::from(*d1) * i128::from(*n2)),
        _ => Rat::from_big(a.to_big() / b.to_big()),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                $method(self, rhs)
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                $method(&self, &rhs)
            }
        }
        impl<'b> $trait<&'b Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                $method(&self, rhs)
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                $method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => Rat(Repr::Small(-n, *d)),
            Repr::Big(r) => Rat::from_big(-(**r).clone()),
        }
    }
}

/// Shorthand for `Rat::new`, used heavily in tests.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!("0.3".parse::<Rat>().unwrap(), rat(3, 10));
        assert_eq!("0.30".parse::<Rat>().unwrap(), rat(3, 10));
        assert_eq!(".5".parse::<Rat>().unwrap(), rat(1, 2));
        assert_eq!("1".parse::<Rat>().unwrap(), Rat::one());
        assert_eq!("6/8".parse::<Rat>().unwrap(), rat(3, 4));
        assert_eq!("-1/2".parse::<Rat>().unwrap(), rat(-1, 2));
    }

    #[test]
    fn malformed_literals() {
        assert!(matches!("1/0".parse::<Rat>(), Err(ParseRatError::ZeroDenominator(_))));
        assert!("1.".parse::<Rat>().is_err());
        assert!("a".parse::<Rat>().is_err());
        assert!("1/2/3".parse::<Rat>().is_err());
        assert_eq!("".parse::<Rat>(), Err(ParseRatError::Empty));
    }

    #[test]
    fn display_reduces() {
        assert_eq!(rat(4, 10).to_string(), "2/5");
        assert_eq!(rat(2, 2).to_string(), "1");
        assert_eq!(Rat::zero().to_string(), "0");
    }

    #[test]
    fn rounding() {
        assert_eq!(rat(13, 64).round_to_denominator(4), rat(1, 4));
        assert_eq!(rat(1, 8).round_to_denominator(4), rat(0, 1));
        assert_eq!(rat(3, 8).round_to_denominator(4), rat(1, 4));
    }

    #[test]
    fn wide_values_spill_and_return() {
        let big = Rat::new(i64::MAX, 3) * Rat::new(i64::MAX, 5);
        assert!(matches!(big.0, Repr::Big(_)));
        let back = &big / &Rat::new(i64::MAX, 1);
        assert_eq!(back, Rat::new(i64::MAX, 15));
        assert!(matches!(back.0, Repr::Small(..)));
        assert!(big > Rat::new(i64::MAX, 1));
        assert_eq!((&big - &big), Rat::zero());
        assert_eq!(Rat::new(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(Rat::new(-7, 2).ceil(), BigInt::from(-3));
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let json = serde_json::to_string(&rat(3, 10)).unwrap();
        assert_eq!(json, "\"3/10\"");
        let back: Rat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rat(3, 10));
    }
}
