//! Arbitrary-precision integers, canonical rationals and exact root extraction.
//!
//! Everything here is integer-only. Floating point never appears: the values
//! handled by the chain outgrow any float's exact range after two jumps.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sign-and-magnitude arbitrary-precision integer.
pub type Integer = BigInt;

/// Exact rational number, always held in canonical form: positive
/// denominator, numerator and denominator coprime, zero as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms with a positive denominator.
    pub fn new(num: Integer, den: Integer) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn from_i64s(num: i64, den: i64) -> Self {
        Self::new(num.into(), den.into()).expect("literal rational with zero denominator")
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// `max(|num|, den)`, the usual height of a rational point coordinate.
    pub fn height(&self) -> Integer {
        let num = self.numer().abs();
        let den = self.denom();
        if &num > den {
            num
        } else {
            den.clone()
        }
    }
}

impl From<Integer> for Rational {
    fn from(value: Integer) -> Self {
        Self(BigRational::from_integer(value))
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::from(Integer::from(value))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `n/d` with optional sign on either part.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((num, den)) => {
                let num = parse_integer(num.trim()).map_err(|_| parse_error(s, "bad numerator"))?;
                let den =
                    parse_integer(den.trim()).map_err(|_| parse_error(s, "bad denominator"))?;
                Rational::new(num, den).map_err(|_| parse_error(s, "zero denominator"))
            }
            None => parse_integer(s).map(Rational::from),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field operation on two rationals.
pub fn rational_arith(op: ArithOp, a: &Rational, b: &Rational) -> Result<Rational> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// Canonical rational equal to `num/den`.
pub fn normalize(num: Integer, den: Integer) -> Result<Rational> {
    Rational::new(num, den)
}

fn parse_error(input: &str, reason: &str) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

/// Parses a plain decimal integer (optional leading sign, digits only).
pub fn parse_integer(s: &str) -> Result<Integer> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(s, "expected a decimal integer"));
    }
    Integer::from_str(s).map_err(|e| parse_error(s, &e.to_string()))
}

/// Floor square root by Newton iteration; `exact` is true iff `root² = n`.
pub fn isqrt(n: &Integer) -> Result<(Integer, bool)> {
    if n.sign() == Sign::Minus {
        return Err(Error::NegativeRadicand);
    }
    if n < &Integer::from(2) {
        return Ok((n.clone(), true));
    }
    // 2^ceil(bits/2) > sqrt(n), so the iterates decrease strictly until they
    // reach floor(sqrt(n)).
    let mut x = Integer::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    let exact = &x * &x == *n;
    Ok((x, exact))
}

/// Floor fourth root; `exact` is true iff `root⁴ = n`.
///
/// Uses a direct degree-4 Newton iteration rather than composing two square
/// roots, so the two routes can check each other.
pub fn fourth_root(n: &Integer) -> Result<(Integer, bool)> {
    if n.sign() == Sign::Minus {
        return Err(Error::NegativeRadicand);
    }
    if n < &Integer::from(2) {
        return Ok((n.clone(), true));
    }
    let mut x = Integer::one() << n.bits().div_ceil(4);
    loop {
        let x3 = &x * &x * &x;
        let y = (&x * 3u32 + n / x3) / 4u32;
        if y >= x {
            break;
        }
        x = y;
    }
    let exact = num_traits::pow(x.clone(), 4) == *n;
    Ok((x, exact))
}

/// Nonnegative exact square root of a rational, if one exists.
///
/// Canonical form makes the numerator and denominator tests independent:
/// with `gcd(num, den) = 1`, `num/den` is a square iff both parts are.
pub fn rational_sqrt(q: &Rational) -> Result<Option<Rational>> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    let (num_root, num_exact) = isqrt(q.numer())?;
    if !num_exact {
        return Ok(None);
    }
    let (den_root, den_exact) = isqrt(q.denom())?;
    if !den_exact {
        return Ok(None);
    }
    Rational::new(num_root, den_root).map(Some)
}

/// Serde adapter writing integers as decimal strings.
pub mod decimal {
    use super::{parse_integer, Integer};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Integer, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Integer, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_integer(&s).map_err(serde::de::Error::custom)
    }
}
