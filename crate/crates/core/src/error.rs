use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

/// One route's answer, kept when routes disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteOutcome {
    pub route: String,
    pub a_regular: bool,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported simple type {0}: exceptional algebras are catalog-only")]
    UnsupportedType(String),

    #[error("invalid simple factor: {0}")]
    InvalidFactor(String),

    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),

    #[error("invalid parameters for `{constructor}`: {reason}")]
    InvalidParameters { constructor: String, reason: String },

    #[error("subalgebra is not closed under the bracket")]
    NotClosed,

    #[error("element is not in the ambient algebra: {0}")]
    NotInAlgebra(String),

    #[error("subalgebra is not reductive: {0}")]
    NotReductive(String),

    #[error("invariant form is degenerate on the input")]
    DegenerateForm,

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("ambient algebra must be semisimple for this operation")]
    NotSemisimple,

    #[error("genericity failure, retry with another seed: {0}")]
    GenericityFailure(String),

    #[error("decision routes disagree: {0:?}")]
    RouteDisagreement(Vec<RouteOutcome>),

    #[error("too many simple factors ({0} > 8)")]
    TooManyFactors(usize),

    #[error("expected {expected} verdicts, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("catalog error: {0}")]
    Catalog(String),

    #[error("catalog checksum mismatch: expected {expected}, computed {computed}")]
    Checksum { expected: String, computed: String },

    #[error("ambiguous catalog match: {0:?}")]
    AmbiguousMatch(Vec<String>),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(constructor: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParameters {
        constructor: constructor.into(),
        reason: reason.into(),
    }
}
