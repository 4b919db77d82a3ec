//! Exact generation and certification of integer pairs `(X, Y)` such that
//! `X + Y` is a perfect square and `X² + Y²` is a perfect fourth power.
//!
//! Solutions come from a chain of rational points `(t, u)` on the quartic
//! curve
//!
//! ```text
//! t²u² + 2tu − 1 = t² + 2u²
//! ```
//!
//! which is walked by alternately swapping each coordinate for the other
//! root of the curve equation viewed as a quadratic in that coordinate
//! (a Vieta jump). Every point maps to a rational solution
//!
//! ```text
//! x = t⁴u⁴ − 6t²u² + 1,    y = 4tu(t²u² − 1)
//! ```
//!
//! and, after clearing denominators of `r = tu`, to an integer solution with
//! square root `a` of `X + Y` and fourth root `b` of `X² + Y²`.
//!
//! Modules:
//! - [`exact`]: big integers, canonical rationals, exact roots.
//! - [`chain`]: the curve, its radicals, the jumps and the chain generator.
//! - [`solutions`]: rational and integer solutions with certificates.
//! - [`oracle`]: independent cross-checks, bounded brute force, printed-value audit.
//! - [`cli`]: the command-line surface and its JSON/text reports.

#![forbid(unsafe_code)]

pub mod chain;
pub mod cli;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod solutions;

pub use chain::{generate_chain, seed, Branch, ChainNode, Jump};
pub use error::{Error, Result};
pub use exact::{Integer, Rational};
pub use oracle::{
    brute_force_search, errata_audit, param_stack_check, AuditFinding, ParamStack, Verdict,
};
pub use solutions::{
    certificate, enumerate_solutions, scale_to_integers, xy_from_pair, CertificateBundle,
    IntegerSolution, RationalSolution,
};
