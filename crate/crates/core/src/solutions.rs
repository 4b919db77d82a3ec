//! Rational and integer solutions built from curve points, with certificates.

use std::collections::HashSet;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{constraint_residual, generate_chain, radical_t, radical_u};
use crate::error::{Error, Result};
use crate::exact::{self, fourth_root, isqrt, Integer, Rational};

/// `x = t⁴u⁴ − 6t²u² + 1`, `y = 4tu(t²u² − 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSolution {
    pub x: Rational,
    pub y: Rational,
}

/// Identity witnesses for a pair `(t, u)`.
///
/// `A² − 2B² = sum_root²` holds for every pair; on the curve
/// `A = (tu)² + 2tu − 1` as well, which turns `x + y` into `sum_root²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateBundle {
    #[serde(rename = "A")]
    pub form_a: Rational,
    #[serde(rename = "B")]
    pub form_b: Rational,
    pub sum_root: Rational,
    pub quartic_root: Rational,
    pub rad_t: Rational,
    pub rad_u: Rational,
}

/// Integer solution with `X + Y = a²` and `X² + Y² = b⁴`, obtained from
/// `r = tu = R/S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerSolution {
    #[serde(rename = "X", with = "exact::decimal")]
    pub x: Integer,
    #[serde(rename = "Y", with = "exact::decimal")]
    pub y: Integer,
    #[serde(rename = "R", with = "exact::decimal")]
    pub r: Integer,
    #[serde(rename = "S", with = "exact::decimal")]
    pub s: Integer,
    #[serde(with = "exact::decimal")]
    pub a: Integer,
    #[serde(with = "exact::decimal")]
    pub b: Integer,
}

impl IntegerSolution {
    pub fn is_positive(&self) -> bool {
        self.x.is_positive() && self.y.is_positive()
    }

    /// Re-derives both certificates from `X` and `Y` alone.
    pub fn reverify(&self) -> bool {
        matches!(
            verify_integer_pair(&self.x, &self.y),
            Verification::Certified { ref a, ref b } if a == &self.a && b == &self.b
        )
    }
}

pub fn xy_from_pair(t: &Rational, u: &Rational) -> RationalSolution {
    let tu = t * u;
    let tu2 = tu.square();
    let one = Rational::one();
    RationalSolution {
        x: tu2.square() - Rational::from(6) * &tu2 + &one,
        y: Rational::from(4) * &tu * (tu2 - one),
    }
}

pub fn certificate(t: &Rational, u: &Rational) -> CertificateBundle {
    let tt = t.square();
    let uu = u.square();
    let two = Rational::from(2);
    CertificateBundle {
        form_a: &tt + &two * &uu,
        form_b: &two * t * u,
        sum_root: &tt - &two * &uu,
        quartic_root: &tt * &uu + Rational::one(),
        rad_t: radical_t(t, u),
        rad_u: radical_u(t, u),
    }
}

/// Clears the denominator of `r = tu` and certifies the resulting integers.
///
/// The solution formulas are homogeneous of degree 4 in `(r, s)` with
/// `s = 1`; replacing `(r, 1)` by `(R, S)` scales `x` and `y` by `S⁴`.
pub fn scale_to_integers(t: &Rational, u: &Rational) -> Result<IntegerSolution> {
    let residual = constraint_residual(t, u);
    if !residual.is_zero() {
        return Err(Error::ConstraintViolated {
            t: t.to_string(),
            u: u.to_string(),
            residual: residual.to_string(),
        });
    }
    let r = t * u;
    if r.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    let big_r = r.numer().clone();
    let big_s = r.denom().clone();
    let rr = &big_r * &big_r;
    let ss = &big_s * &big_s;

    let x = &rr * &rr - Integer::from(6) * &rr * &ss + &ss * &ss;
    let y = Integer::from(4) * &big_r * &big_s * (&rr - &ss);

    let scaled_root = Rational::from(ss.clone()) * (t.square() - Rational::from(2) * u.square());
    if !scaled_root.is_integer() {
        return Err(Error::ParametrizationInconsistency(format!(
            "S²(t²−2u²) = {scaled_root} is not an integer"
        )));
    }
    let a = scaled_root.numer().abs();
    let b = rr + ss;

    if &a * &a != &x + &y {
        return Err(Error::ParametrizationInconsistency(format!(
            "a² ≠ X+Y for a = {a}, X = {x}, Y = {y}"
        )));
    }
    if num_traits::pow(b.clone(), 4) != &x * &x + &y * &y {
        return Err(Error::ParametrizationInconsistency(format!(
            "b⁴ ≠ X²+Y² for b = {b}, X = {x}, Y = {y}"
        )));
    }

    Ok(IntegerSolution {
        x,
        y,
        r: big_r,
        s: big_s,
        a,
        b,
    })
}

/// Integer solutions for every node of `generate_chain(depth)`.
///
/// Each node is an adjacent `(t, u)` combination along the chain. Results
/// keep chain order, drop repeats of an unordered `{X, Y}` and optionally
/// drop pairs with a nonpositive member.
pub fn enumerate_solutions(depth: usize, positive_only: bool) -> Result<Vec<IntegerSolution>> {
    let chain = generate_chain(depth)?;
    let scaled: Vec<Option<IntegerSolution>> = chain
        .par_iter()
        .map(|node| match scale_to_integers(&node.t, &node.u) {
            Ok(sol) => Ok(Some(sol)),
            Err(Error::DegenerateParameter) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;

    let mut seen = HashSet::new();
    Ok(scaled
        .into_iter()
        .flatten()
        .filter(|sol| {
            let key = if sol.x <= sol.y {
                (sol.x.clone(), sol.y.clone())
            } else {
                (sol.y.clone(), sol.x.clone())
            };
            seen.insert(key)
        })
        .filter(|sol| !positive_only || sol.is_positive())
        .collect())
}

/// Outcome of checking an arbitrary integer pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Certified { a: Integer, b: Integer },
    SumNotSquare { sum: Integer },
    NotFourthPower { sum_of_squares: Integer },
}

impl Verification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verification::Certified { .. })
    }

    pub fn failure_reason(&self) -> Option<String> {
        match self {
            Verification::Certified { .. } => None,
            Verification::SumNotSquare { sum } => {
                Some(format!("sum {sum} is not a perfect square"))
            }
            Verification::NotFourthPower { sum_of_squares } => Some(format!(
                "sum of squares {sum_of_squares} is not a perfect fourth power"
            )),
        }
    }
}

/// Checks `X + Y` for squareness, then `X² + Y²` for being a fourth power,
/// reporting the first condition that fails. Any integers are accepted.
pub fn verify_integer_pair(x: &Integer, y: &Integer) -> Verification {
    let sum = x + y;
    let a = match (!sum.is_negative()).then(|| isqrt(&sum)) {
        Some(Ok((a, true))) => a,
        _ => return Verification::SumNotSquare { sum },
    };
    let sum_of_squares = x * x + y * y;
    match fourth_root(&sum_of_squares) {
        Ok((b, true)) => Verification::Certified { a, b },
        _ => Verification::NotFourthPower { sum_of_squares },
    }
}
