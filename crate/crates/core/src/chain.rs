//! The constraint curve `t²u² + 2tu − 1 = t² + 2u²` and the Vieta-jump chain
//! of rational points on it.
//!
//! Viewed as a quadratic in `t` the curve is
//! `(u² − 1)t² + 2ut − (2u² + 1) = 0`, whose roots sum to `2u/(1 − u²)` and
//! whose discriminant is `4(2u⁴ − 1)`. As a quadratic in `u` it is
//! `(t² − 2)u² + 2tu − (t² + 1) = 0`, with root sum `2t/(2 − t²)` and
//! discriminant `4(t⁴ − 2)`. A jump replaces one coordinate by the other root.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rational_sqrt, Rational};

/// How a chain node was obtained from its predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Jump {
    Seed,
    UJump,
    TJump,
}

/// Which sign of the `±` in the closed-form root is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainNode {
    pub index: usize,
    pub t: Rational,
    pub u: Rational,
    pub produced_by: Jump,
}

/// Starting point `(t, u) = (3/2, 1)`.
///
/// At `u = 1` the closed form for `t` is `0/0`; expanding around `u = 1`
/// to first order gives the limit `t = 3/2`. The value is fixed here rather
/// than derived at runtime.
pub fn seed() -> ChainNode {
    ChainNode {
        index: 0,
        t: Rational::from_i64s(3, 2),
        u: Rational::one(),
        produced_by: Jump::Seed,
    }
}

/// `t²u² + 2tu − 1 − t² − 2u²`; zero exactly on the curve.
pub fn constraint_residual(t: &Rational, u: &Rational) -> Rational {
    let tt = t.square();
    let uu = u.square();
    let two = Rational::from(2);
    &tt * &uu + &two * t * u - Rational::one() - &tt - two * uu
}

/// Signed radical `t(1 − u²) − u`. On the curve its square is `2u⁴ − 1`.
pub fn radical_t(t: &Rational, u: &Rational) -> Rational {
    t * (Rational::one() - u.square()) - u
}

/// Signed radical `u(2 − t²) − t`. On the curve its square is `t⁴ − 2`.
pub fn radical_u(t: &Rational, u: &Rational) -> Rational {
    u * (Rational::from(2) - t.square()) - t
}

/// Replaces `t` by the other root in `t`: `2u/(1 − u²) − t`.
pub fn vieta_next_t(t: &Rational, u: &Rational) -> Result<Rational> {
    let den = Rational::one() - u.square();
    if den.is_zero() {
        return Err(Error::SingularTJump);
    }
    let sum = (Rational::from(2) * u).checked_div(&den)?;
    Ok(sum - t)
}

/// Replaces `u` by the other root in `u`: `2t/(2 − t²) − u`.
pub fn vieta_next_u(t: &Rational, u: &Rational) -> Result<Rational> {
    // t² = 2 has no rational solution; the guard is for completeness.
    let den = Rational::from(2) - t.square();
    if den.is_zero() {
        return Err(Error::SingularUJump);
    }
    let sum = (Rational::from(2) * t).checked_div(&den)?;
    Ok(sum - u)
}

fn signed(root: Rational, branch: Branch) -> Rational {
    match branch {
        Branch::Plus => root,
        Branch::Minus => -root,
    }
}

/// Closed-form `t = (u ± √(2u⁴ − 1)) / (1 − u²)` with the nonnegative root.
///
/// At `u = ±1` both branches collapse to the limit value `±3/2`.
pub fn solve_t_from_u(u: &Rational, branch: Branch) -> Result<Rational> {
    let uu = u.square();
    let den = Rational::one() - &uu;
    if den.is_zero() {
        let limit = Rational::from_i64s(3, 2);
        return Ok(if u.is_negative() { -limit } else { limit });
    }
    let radicand = Rational::from(2) * uu.square() - Rational::one();
    let off_curve = || Error::OffCurveU {
        radicand: radicand.to_string(),
    };
    if radicand.is_negative() {
        return Err(off_curve());
    }
    let root = rational_sqrt(&radicand)?.ok_or_else(off_curve)?;
    (u + signed(root, branch)).checked_div(&den)
}

/// Closed-form `u = (t ± √(t⁴ − 2)) / (2 − t²)` with the nonnegative root.
pub fn solve_u_from_t(t: &Rational, branch: Branch) -> Result<Rational> {
    let tt = t.square();
    let den = Rational::from(2) - &tt;
    if den.is_zero() {
        return Err(Error::SingularUJump);
    }
    let radicand = tt.square() - Rational::from(2);
    let off_curve = || Error::OffCurveT {
        radicand: radicand.to_string(),
    };
    if radicand.is_negative() {
        return Err(off_curve());
    }
    let root = rational_sqrt(&radicand)?.ok_or_else(off_curve)?;
    (t + signed(root, branch)).checked_div(&den)
}

/// Seed followed by `depth` alternating jumps, the first one in `u`.
///
/// Node `k` pairs the newest `t` with the newest `u`, so consecutive nodes
/// share one coordinate.
pub fn generate_chain(depth: usize) -> Result<Vec<ChainNode>> {
    generate_chain_with(Jump::UJump, depth)
}

/// Like [`generate_chain`] but with an explicit first jump.
///
/// Starting with a t-jump fails: the seed sits at `u = 1` where the t-jump
/// is singular.
pub fn generate_chain_with(first: Jump, depth: usize) -> Result<Vec<ChainNode>> {
    let mut nodes = Vec::with_capacity(depth + 1);
    nodes.push(seed());
    let mut next = match first {
        Jump::Seed | Jump::UJump => Jump::UJump,
        Jump::TJump => Jump::TJump,
    };
    for index in 1..=depth {
        let prev = nodes.last().expect("chain starts with the seed");
        let (t, u) = match next {
            Jump::TJump => (vieta_next_t(&prev.t, &prev.u)?, prev.u.clone()),
            _ => (prev.t.clone(), vieta_next_u(&prev.t, &prev.u)?),
        };
        nodes.push(ChainNode {
            index,
            t,
            u,
            produced_by: next,
        });
        next = if next == Jump::TJump {
            Jump::UJump
        } else {
            Jump::TJump
        };
    }
    Ok(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_i64s(n, d)
    }

    #[test]
    fn seed_is_on_curve() {
        let s = seed();
        assert_eq!(
            (s.index, &s.t, &s.u, s.produced_by),
            (0, &q(3, 2), &q(1, 1), Jump::Seed)
        );
        assert!(constraint_residual(&s.t, &s.u).is_zero());
        assert_eq!(radical_t(&s.t, &s.u), q(-1, 1));
    }

    #[test]
    fn residual_examples() {
        assert!(constraint_residual(&q(3, 2), &q(-13, 1)).is_zero());
        assert_eq!(constraint_residual(&q(1, 1), &q(1, 1)), q(-1, 1));
        assert!(!constraint_residual(&q(-113, 84), &q(301993, 1343)).is_zero());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical_t(&q(3, 2), &q(-13, 1)), q(-239, 1));
        assert_eq!(radical_t(&q(3, 2), &q(1, 1)), q(-1, 1));
        assert_eq!(
            radical_t(&Rational::zero(), &Rational::zero()),
            Rational::zero()
        );

        assert_eq!(radical_u(&q(3, 2), &q(1, 1)), q(-7, 4));
        assert_eq!(radical_u(&q(-113, 84), &q(-13, 1)), q(-7967, 7056));
        assert_eq!(
            radical_u(&Rational::zero(), &Rational::zero()),
            Rational::zero()
        );
    }

    #[test]
    fn t_jump_examples() {
        assert_eq!(vieta_next_t(&q(3, 2), &q(-13, 1)).unwrap(), q(-113, 84));
        assert_eq!(vieta_next_t(&q(-113, 84), &q(-13, 1)).unwrap(), q(3, 2));
        assert_eq!(vieta_next_t(&q(3, 2), &q(1, 1)), Err(Error::SingularTJump));
        assert_eq!(vieta_next_t(&q(3, 2), &q(-1, 1)), Err(Error::SingularTJump));
        assert_eq!(Error::SingularTJump.to_string(), "t-jump singular at u=±1");
    }

    #[test]
    fn u_jump_examples() {
        assert_eq!(vieta_next_u(&q(3, 2), &q(1, 1)).unwrap(), q(-13, 1));
        assert_eq!(
            vieta_next_u(&q(-113, 84), &q(-13, 1)).unwrap(),
            q(-1525, 1343)
        );
        assert_eq!(
            vieta_next_u(&Rational::zero(), &Rational::zero()).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn solve_t_examples() {
        assert_eq!(
            solve_t_from_u(&q(-13, 1), Branch::Plus).unwrap(),
            q(-113, 84)
        );
        assert_eq!(solve_t_from_u(&q(-13, 1), Branch::Minus).unwrap(), q(3, 2));
        assert_eq!(solve_t_from_u(&q(1, 1), Branch::Plus).unwrap(), q(3, 2));
        assert_eq!(solve_t_from_u(&q(1, 1), Branch::Minus).unwrap(), q(3, 2));
        assert_eq!(solve_t_from_u(&q(-1, 1), Branch::Plus).unwrap(), q(-3, 2));
        assert!(constraint_residual(&q(-3, 2), &q(-1, 1)).is_zero());
    }

    #[test]
    fn solve_t_rejects_off_curve() {
        assert!(matches!(
            solve_t_from_u(&q(2, 1), Branch::Plus),
            Err(Error::OffCurveU { .. })
        ));
        // negative radicand: 2·(1/2)⁴ − 1 < 0
        assert!(matches!(
            solve_t_from_u(&q(1, 2), Branch::Minus),
            Err(Error::OffCurveU { .. })
        ));
    }

    #[test]
    fn solve_u_examples() {
        assert_eq!(solve_u_from_t(&q(3, 2), Branch::Plus).unwrap(), q(-13, 1));
        assert_eq!(solve_u_from_t(&q(3, 2), Branch::Minus).unwrap(), q(1, 1));
        for branch in [Branch::Plus, Branch::Minus] {
            let err = solve_u_from_t(&Rational::zero(), branch).unwrap_err();
            assert!(matches!(err, Error::OffCurveT { .. }));
            assert!(err.to_string().starts_with("off-curve t"));
        }
    }

    #[test]
    fn chain_prefixes() {
        let one = generate_chain(1).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!((&one[1].t, &one[1].u), (&q(3, 2), &q(-13, 1)));
        assert_eq!(one[1].produced_by, Jump::UJump);

        let two = generate_chain(2).unwrap();
        assert_eq!((&two[2].t, &two[2].u), (&q(-113, 84), &q(-13, 1)));
        assert_eq!(two[2].produced_by, Jump::TJump);

        let three = generate_chain(3).unwrap();
        assert_eq!((&three[3].t, &three[3].u), (&q(-113, 84), &q(-1525, 1343)));

        assert_eq!(generate_chain(0).unwrap(), vec![seed()]);
    }

    #[test]
    fn chain_values_to_depth_eight() {
        // Independently computed with Python's fractions module.
        let expected = [
            ("3/2", "1"),
            ("3/2", "-13"),
            ("-113/84", "-13"),
            ("-113/84", "-1525/1343"),
            ("57123/6214", "-1525/1343"),
            ("57123/6214", "2165017/2372159"),
            ("262621633/151245528", "2165017/2372159"),
            ("262621633/151245528", "-42422452969/9788425919"),
            ("-14070212996451/11265465210550", "-42422452969/9788425919"),
        ];
        let chain = generate_chain(8).unwrap();
        for (node, (t, u)) in chain.iter().zip(expected) {
            assert_eq!(node.t, t.parse().unwrap(), "t at node {}", node.index);
            assert_eq!(node.u, u.parse().unwrap(), "u at node {}", node.index);
        }
    }

    #[test]
    fn t_first_chain_is_rejected() {
        assert_eq!(
            generate_chain_with(Jump::TJump, 1),
            Err(Error::SingularTJump)
        );
        assert_eq!(generate_chain_with(Jump::TJump, 0).unwrap(), vec![seed()]);
    }
}
