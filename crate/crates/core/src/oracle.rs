//! Independent checks: the two-step Pythagorean parametrization, a bounded
//! brute-force search, and an audit of the historically printed chain values.

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{constraint_residual, radical_t, radical_u, vieta_next_t, vieta_next_u};
use crate::error::{Error, Result};
use crate::exact::{self, isqrt, Integer, Rational};
use crate::solutions::scale_to_integers;

/// `x = p² − q²`, `y = 2pq` with `p = R² − S²`, `q = 2RS`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamStack {
    #[serde(rename = "R", with = "exact::decimal")]
    pub r: Integer,
    #[serde(rename = "S", with = "exact::decimal")]
    pub s: Integer,
    #[serde(with = "exact::decimal")]
    pub p: Integer,
    #[serde(with = "exact::decimal")]
    pub q: Integer,
    #[serde(with = "exact::decimal")]
    pub x: Integer,
    #[serde(with = "exact::decimal")]
    pub y: Integer,
}

/// Builds the parametrization stack from `tu = R/S` and checks it against
/// [`scale_to_integers`], which evaluates the quartic formulas directly.
pub fn param_stack_check(t: &Rational, u: &Rational) -> Result<ParamStack> {
    let direct = scale_to_integers(t, u)?;
    let r = t * u;
    let (big_r, big_s) = (r.numer().clone(), r.denom().clone());

    let p = &big_r * &big_r - &big_s * &big_s;
    let q = Integer::from(2) * &big_r * &big_s;
    let x = &p * &p - &q * &q;
    let y = Integer::from(2) * &p * &q;

    let inconsistent =
        |what: &str| Error::ParametrizationInconsistency(format!("{what} at (t, u) = ({t}, {u})"));
    if x != direct.x || y != direct.y {
        return Err(inconsistent("stack (x, y) differs from direct evaluation"));
    }
    let hyp = &p * &p + &q * &q;
    let rs = &big_r * &big_r + &big_s * &big_s;
    if hyp != &rs * &rs {
        return Err(inconsistent("p² + q² ≠ (R² + S²)²"));
    }
    if &x * &x + &y * &y != &hyp * &hyp {
        return Err(inconsistent("x² + y² ≠ (p² + q²)²"));
    }
    Ok(ParamStack {
        r: big_r,
        s: big_s,
        p,
        q,
        x,
        y,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SearchHit {
    #[serde(with = "exact::decimal")]
    pub x: Integer,
    #[serde(with = "exact::decimal")]
    pub y: Integer,
    #[serde(with = "exact::decimal")]
    pub b: Integer,
}

/// All `0 < x ≤ y` with `x² + y² = b⁴` and `x + y` square, for `b ≤ max_b`.
pub fn brute_force_search(max_b: u64) -> Vec<SearchHit> {
    search(max_b, false)
}

/// Same scan as [`brute_force_search`] but admitting `x = 0`, which makes
/// every `(0, b², b)` a hit.
pub fn brute_force_search_with_zero(max_b: u64) -> Vec<SearchHit> {
    search(max_b, true)
}

fn search(max_b: u64, allow_zero: bool) -> Vec<SearchHit> {
    let mut hits: Vec<SearchHit> = (1..=max_b)
        .into_par_iter()
        .flat_map_iter(|b| scan_fourth_power(b, allow_zero))
        .collect();
    hits.sort();
    hits
}

/// Hits for one `b`, smaller member first. `x ≤ y` bounds `x` by
/// `floor(b²/√2) = isqrt(floor(b⁴/2))`.
fn scan_fourth_power(b: u64, allow_zero: bool) -> Vec<SearchHit> {
    let b_big = Integer::from(b);
    let b4 = num_traits::pow(b_big.clone(), 4);
    let (x_max, _) = isqrt(&(&b4 >> 1)).expect("nonnegative");
    let x_max = u64::try_from(&x_max).expect("bound fits in u64 for any scannable b");
    let start = if allow_zero { 0 } else { 1 };

    let mut hits = Vec::new();
    for x in start..=x_max {
        let x = Integer::from(x);
        let rest = &b4 - &x * &x;
        let (y, exact) = isqrt(&rest).expect("x² ≤ b⁴/2");
        if !exact || y < x {
            continue;
        }
        if isqrt(&(&x + &y)).expect("nonnegative").1 {
            hits.push(SearchHit {
                x,
                y,
                b: b_big.clone(),
            });
        }
    }
    hits
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    SuspectedTypo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub location: String,
    pub quantity: String,
    pub printed_value: Rational,
    pub recomputed_value: Rational,
    pub verdict: Verdict,
    /// Identity defect or constraint residual of the printed value; zero
    /// means the printed value is consistent with its own equation.
    pub evidence: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The radicand a printed radical claims to be the square root of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Radicand {
    TwoUFourthMinusOne,
    TFourthMinusTwo,
    TwoTFourthMinusTwo,
}

impl Radicand {
    fn eval(self, t: &Rational, u: &Rational) -> Rational {
        let two = Rational::from(2);
        match self {
            Radicand::TwoUFourthMinusOne => two * u.pow(4) - Rational::one(),
            Radicand::TFourthMinusTwo => t.pow(4) - two,
            Radicand::TwoTFourthMinusTwo => &two * t.pow(4) - two,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Quantity {
    /// `t(1 − u²) − u`, the signed root of `2u⁴ − 1`.
    RadicalT,
    /// `u(2 − t²) − t`, the signed root of `t⁴ − 2`.
    RadicalU { printed_radicand: Radicand },
    /// The t-jump from the given pair.
    NextT,
    /// The u-jump from the given pair.
    NextU,
}

struct PrintedValue {
    location: &'static str,
    quantity: &'static str,
    printed: &'static str,
    t: &'static str,
    u: &'static str,
    kind: Quantity,
}

/// Values as printed, with the pair they were derived from.
const PRINTED_VALUES: &[PrintedValue] = &[
    PrintedValue {
        location: "§7",
        quantity: "√(2u⁴−1) = t(1−u²)−u at t=3/2, u=−13",
        printed: "-239",
        t: "3/2",
        u: "-13",
        kind: Quantity::RadicalT,
    },
    PrintedValue {
        location: "§7",
        quantity: "t-jump from (t, u) = (3/2, −13)",
        printed: "-113/84",
        t: "3/2",
        u: "-13",
        kind: Quantity::NextT,
    },
    PrintedValue {
        location: "§6",
        quantity: "√(2t⁴−2) at t=3/2, u=1",
        printed: "7/4",
        t: "3/2",
        u: "1",
        kind: Quantity::RadicalU {
            printed_radicand: Radicand::TwoTFourthMinusTwo,
        },
    },
    PrintedValue {
        location: "§8",
        quantity: "√(t⁴−2) = u(2−t²)−t at t=−113/84, u=−13",
        printed: "-311485/7056",
        t: "-113/84",
        u: "-13",
        kind: Quantity::RadicalU {
            printed_radicand: Radicand::TFourthMinusTwo,
        },
    },
    PrintedValue {
        location: "§8–9",
        quantity: "u-jump from (t, u) = (−113/84, −13)",
        printed: "301993/1343",
        t: "-113/84",
        u: "-13",
        kind: Quantity::NextU,
    },
];

/// The radical value −239 at the first u-jump, which the later printed
/// values turn out to have used in place of u.
const RADICAL_AS_U: i64 = -239;

fn literal(s: &str) -> Rational {
    s.parse().expect("audit table literal")
}

fn evaluate(kind: Quantity, t: &Rational, u: &Rational) -> Rational {
    match kind {
        Quantity::RadicalT => radical_t(t, u),
        Quantity::RadicalU { .. } => radical_u(t, u),
        Quantity::NextT => vieta_next_t(t, u).expect("audit pairs avoid u = ±1"),
        Quantity::NextU => vieta_next_u(t, u).expect("t² ≠ 2 for rational t"),
    }
}

fn audit_one(entry: &PrintedValue) -> AuditFinding {
    let printed = literal(entry.printed);
    let t = literal(entry.t);
    let u = literal(entry.u);
    let recomputed = evaluate(entry.kind, &t, &u);

    let (evidence, verdict) = match entry.kind {
        Quantity::RadicalT => {
            let defect = printed.square() - Radicand::TwoUFourthMinusOne.eval(&t, &u);
            (defect, plain_verdict(&printed, &recomputed))
        }
        Quantity::RadicalU { printed_radicand } => {
            let defect = printed.square() - printed_radicand.eval(&t, &u);
            let verdict = if printed == recomputed {
                Verdict::Match
            } else if printed_radicand != Radicand::TFourthMinusTwo
                && printed.square() == recomputed.square()
            {
                // Right magnitude for √(t⁴−2); the printed radicand is off.
                Verdict::SuspectedTypo
            } else {
                Verdict::Mismatch
            };
            (defect, verdict)
        }
        Quantity::NextT => (
            constraint_residual(&printed, &u),
            plain_verdict(&printed, &recomputed),
        ),
        Quantity::NextU => (
            constraint_residual(&t, &printed),
            plain_verdict(&printed, &recomputed),
        ),
    };

    let note = match verdict {
        Verdict::Mismatch => {
            let substituted = evaluate(entry.kind, &t, &Rational::from(RADICAL_AS_U));
            (substituted == printed).then(|| {
                format!(
                    "printed value equals the recomputation with u = {RADICAL_AS_U} in place of u = {u}"
                )
            })
        }
        Verdict::SuspectedTypo => Some(format!(
            "printed value squares to t⁴−2 = {}, not to the printed radicand 2t⁴−2 = {}",
            Radicand::TFourthMinusTwo.eval(&t, &u),
            Radicand::TwoTFourthMinusTwo.eval(&t, &u)
        )),
        Verdict::Match => None,
    };

    AuditFinding {
        location: entry.location.to_string(),
        quantity: entry.quantity.to_string(),
        printed_value: printed,
        recomputed_value: recomputed,
        verdict,
        evidence,
        note,
    }
}

fn plain_verdict(printed: &Rational, recomputed: &Rational) -> Verdict {
    if printed == recomputed {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
}

/// Recomputes every printed chain value and radical with exact arithmetic.
pub fn errata_audit() -> Vec<AuditFinding> {
    PRINTED_VALUES.iter().map(audit_one).collect()
}

impl AuditFinding {
    /// True when the printed value is consistent with its own defining
    /// equation (zero evidence).
    pub fn is_self_consistent(&self) -> bool {
        self.evidence.is_zero()
    }
}

impl SearchHit {
    pub fn reverify(&self) -> bool {
        let sum_square = isqrt(&(&self.x + &self.y)).is_ok_and(|(_, exact)| exact);
        let fourth = crate::exact::fourth_root(&(&self.x * &self.x + &self.y * &self.y))
            .is_ok_and(|(root, exact)| exact && root == self.b);
        sum_square && fourth && !self.x.is_negative()
    }
}
