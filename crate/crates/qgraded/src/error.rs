//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by the algebra, the rewriter, the solver and the CLI glue.
#[derive(Debug, Error)]
pub enum Error {
    /// The deformation parameter q = 0 is excluded from the algebra.
    #[error("deformation parameter must be nonzero")]
    ZeroParameter,

    /// Negative power of a diagonal operator with a zero eigenvalue, with the
    /// zero-preserving pseudo-power disabled.
    #[error("negative power of singular diagonal operator (zero eigenvalue at level {level})")]
    SingularPower { level: usize },

    /// Normal ordering is defined only for words over a single deformation
    /// parameter.
    #[error("normal ordering requires all factors to share one deformation parameter")]
    MixedParameters,

    /// Total exponent of the word exceeds the rewrite bound.
    #[error("word of total exponent {len} exceeds the normal-ordering bound {bound}")]
    WordTooLong { len: usize, bound: usize },

    /// Operators live on truncated spaces of different dimension.
    #[error("operator dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// The elementary bracket applies only to single-generator operands.
    #[error("operand is not an elementary generator")]
    NotElementary,

    /// Sums are defined per grade; operands carry distinct grade tags.
    #[error("cannot add operators with distinct grade tags")]
    MixedGrading,

    /// A verification suite found a relation outside tolerance.
    #[error("relation '{relation}' failed with residual {residual:.3e}")]
    VerificationFailure { relation: String, residual: f64 },

    /// The requested verification suite does not exist.
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    /// The requested operator name does not exist.
    #[error("unknown operator '{0}'")]
    UnknownOperator(String),

    /// Run configuration violates its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A word or parameter string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Output could not be written.
    #[error("i/o failure: {0}")]
    IoFailure(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
