use thiserror::Error;

/// Errors raised by the algebra, interpolation and recognition routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("invalid variable index {index} for dimension {dimension}")]
    InvalidIndex { index: usize, dimension: usize },

    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("exponent set is not lower (divisor-closed)")]
    NotLower,

    #[error("duplicate point {0}")]
    DuplicatePoint(String),

    #[error("a point set or functional set needs at least one element")]
    Empty,

    #[error("derivative set attached to a point must be nonempty")]
    EmptyDerivativeSet,

    #[error("degenerate functional set: evaluation rank {rank} < {expected}")]
    DegenerateFunctionals { rank: usize, expected: usize },

    #[error("order ideal is not a quotient basis: {0}")]
    NotQuotientBasis(String),

    #[error("instance too large for oracle: {conditions} conditions in dimension {dimension} (limit {max_conditions}, {max_dimension})")]
    OracleTooLarge {
        conditions: usize,
        dimension: usize,
        max_conditions: usize,
        max_dimension: usize,
    },

    #[error("dimension {dimension} is below the minimum {minimum}")]
    DimensionTooSmall { dimension: usize, minimum: usize },

    #[error("no slices in dimension 1")]
    NoSlicesInDimensionOne,

    #[error("invalid Cartesian description: {0}")]
    InvalidDescription(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroDimension => "zero_dimension",
            Error::InvalidOrder(_) => "invalid_order",
            Error::InvalidIndex { .. } => "invalid_index",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NotLower => "not_lower",
            Error::DuplicatePoint(_) => "duplicate_point",
            Error::Empty => "empty",
            Error::EmptyDerivativeSet => "empty_derivative_set",
            Error::DegenerateFunctionals { .. } => "degenerate_functional_set",
            Error::NotQuotientBasis(_) => "not_quotient_basis",
            Error::OracleTooLarge { .. } => "instance_too_large",
            Error::DimensionTooSmall { .. } => "dimension_too_small",
            Error::NoSlicesInDimensionOne => "no_slices_in_dimension_1",
            Error::InvalidDescription(_) => "invalid_description",
            Error::Parse(_) => "parse_error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
