use thiserror::Error;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quadratic extension radicand must be nonzero")]
    ZeroRadicand,
    #[error("radicand mismatch: {left} vs {right}")]
    RadicandMismatch { left: String, right: String },
    /// `p² = q²Δ`: the value is a zero divisor of a split extension.
    #[error("{value} is not invertible: p^2 = q^2*D, the extension splits over the rationals")]
    DegenerateSplit { value: String },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Rejections when building sequence parameters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("parameter {name} must be nonzero")]
    ZeroCoefficient { name: &'static str },
    #[error("a^2 b^2 + 4abc = 0, so alpha = beta and the closed forms are undefined")]
    ZeroDiscriminant,
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} takes {expected} free parameter(s) ({names}), got {got}")]
    FreeParamCount {
        family: &'static str,
        expected: usize,
        names: String,
        got: usize,
    },
}

/// Errors raised by identity checkers for parameter points outside a
/// theorem's hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("summation denominator zero: c^2 - ab - 2c + 1 = 0 at (a, b, c) = ({a}, {b}, {c})")]
    SummationDenominatorZero { a: String, b: String, c: String },
    #[error("precondition violated for {identity}: {detail}")]
    Precondition {
        identity: &'static str,
        detail: String,
    },
}

impl IdentityError {
    /// Stable machine-readable tag, used by sweep configs to declare expected errors.
    pub fn kind(&self) -> &'static str {
        match self {
            IdentityError::SummationDenominatorZero { .. } => "summation_denominator_zero",
            IdentityError::Precondition { .. } => "precondition",
        }
    }
}
