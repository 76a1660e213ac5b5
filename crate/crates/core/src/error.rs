use thiserror::Error;

use crate::algebra::HalfInt;

/// Every failure the library can report.
///
/// Each variant has a stable machine-readable [`Error::code`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("constant term is not a unit in the coefficient ring")]
    NonUnitConstantTerm,
    #[error("exponential needs a series with zero constant term")]
    NonZeroConstantTerm,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rational function is not a Laurent polynomial (reduced denominator has degree {denominator_degree} with a non-monomial factor)")]
    NotLaurent { denominator_degree: usize },
    #[error("grade {grade} exceeds truncation order {truncation}")]
    GradeOutOfRange { grade: HalfInt, truncation: u32 },
    #[error("tau = {re} + {im}i is not in the upper half-plane")]
    NotUpperHalfPlane { re: f64, im: f64 },
    #[error("weights must be distinct, {0} repeats")]
    DuplicateWeights(i64),
    #[error("weight sum {0} is odd")]
    OddWeightSum(i64),
    #[error("expected a positive even number of weights, got {0}")]
    BadWeightCount(usize),
    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),
    #[error("odd exponent {0} where an even one is required")]
    OddExponent(i64),
    #[error("{law}: residual {residual:e} exceeds tolerance {tol:e}")]
    LawFailed { law: String, residual: f64, tol: f64 },
    #[error("degenerate root datum: {0}")]
    DegenerateRootDatum(String),
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("inconsistent system: {0}")]
    InconsistentSystem(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable identifier used in machine-readable error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonUnitConstantTerm => "NonUnitConstantTerm",
            Error::NonZeroConstantTerm => "NonZeroConstantTerm",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::NotLaurent { .. } => "NotLaurent",
            Error::GradeOutOfRange { .. } => "GradeOutOfRange",
            Error::NotUpperHalfPlane { .. } => "NotUpperHalfPlane",
            Error::DuplicateWeights(_) => "DuplicateWeights",
            Error::OddWeightSum(_) => "OddWeightSum",
            Error::BadWeightCount(_) => "BadWeightCount",
            Error::NonIntegral(_) => "NonIntegral",
            Error::OddExponent(_) => "OddExponent",
            Error::LawFailed { .. } => "LawFailed",
            Error::DegenerateRootDatum(_) => "DegenerateRootDatum",
            Error::SingularSystem(_) => "SingularSystem",
            Error::InconsistentSystem(_) => "InconsistentSystem",
            Error::Parse(_) => "ParseError",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Json(_) => "MalformedJson",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
