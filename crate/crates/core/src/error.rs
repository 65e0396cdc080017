//! Error type shared by every module of the toolkit.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in parsing, evaluation, calculus and the
/// verifiers. Variants carry enough context to render a useful diagnostic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The fractal order must satisfy 0 < alpha <= 1.
    #[error("alpha out of range (need 0 < alpha <= 1): {0}")]
    InvalidAlpha(f64),

    /// Binary operation on fractal numbers with different orders.
    #[error("alpha mismatch: {lhs} vs {rhs}")]
    AlphaMismatch { lhs: f64, rhs: f64 },

    /// Division by the zero element 0^alpha.
    #[error("division by zero")]
    DivisionByZero,

    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole at {0}")]
    GammaPole(f64),

    /// A partial sum or intermediate value left the f64 range.
    #[error("overflow")]
    Overflow,

    /// Evaluation outside the natural domain; `expr` is the offending
    /// subexpression in canonical text.
    #[error("domain error in `{expr}`: {message}")]
    Domain { expr: String, message: String },

    /// Parse failure with byte offset and the tokens that would have been
    /// accepted at that point.
    #[error("syntax error at byte {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: String,
        found: String,
    },

    /// classical_diff met a node it has no rule for.
    #[error("not classically differentiable: `{0}`")]
    NotClassicallyDifferentiable(String),

    /// alpha_diff met a composition outside the supported rule set.
    #[error("out of rule set: {0}")]
    OutOfRuleSet(String),

    /// Fractal-mode evaluation of a node with no base image.
    #[error("unsupported in fractal mode: `{0}`")]
    FractalUnsupported(String),

    /// Integrand not expressed in the (x - a)^(k alpha) basis of the lower limit.
    #[error("expression not anchored at lower limit: anchor {anchor}, lower limit {lower}")]
    AnchorMismatch { anchor: f64, lower: f64 },

    /// Jensen weights must lie in [0,1] and sum to 1.
    #[error("weights must be in [0,1] and sum to 1 (sum = {0})")]
    WeightSum(f64),

    /// A named precondition of an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn domain(expr: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Domain {
            expr: expr.into(),
            message: message.into(),
        }
    }
}
