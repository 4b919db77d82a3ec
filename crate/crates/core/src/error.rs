use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("negative radicand")]
    NegativeRadicand,

    #[error("t-jump singular at u=±1")]
    SingularTJump,

    #[error("u-jump singular at t²=2")]
    SingularUJump,

    #[error("off-curve u: 2u⁴−1 = {radicand} is not a rational square")]
    OffCurveU { radicand: String },

    #[error("off-curve t: t⁴−2 = {radicand} is not a rational square")]
    OffCurveT { radicand: String },

    #[error("constraint violated: residual {residual} at (t, u) = ({t}, {u})")]
    ConstraintViolated {
        t: String,
        u: String,
        residual: String,
    },

    #[error("degenerate parameter: tu = 0")]
    DegenerateParameter,

    #[error("parametrization inconsistency: {0}")]
    ParametrizationInconsistency(String),

    #[error("invalid number {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
