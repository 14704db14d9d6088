use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("moduli are not pairwise coprime: {0} and {1}")]
    NonCoprimeModuli(i64, i64),
    #[error("multiplicities are not pairwise coprime: {0} and {1}")]
    NonCoprime(i64, i64),
    #[error("bundles live over different base orbifolds")]
    BaseMismatch,
    #[error("the fibration has degree zero")]
    ZeroDegree,
    #[error("invalid Hirzebruch-Jung pair ({p}, {q}): need 0 < q < p and gcd(p, q) = 1")]
    InvalidPair { p: i64, q: i64 },
    #[error("sheaf index {j} out of range 0..{p}")]
    JOutOfRange { j: i64, p: i64 },
    #[error("invalid orbifold: {0}")]
    InvalidBase(String),
    #[error("invalid Seifert data: {0}")]
    InvalidData(String),
    #[error("critical manifold {0} is positive dimensional; no absolute grading")]
    NonIsolatedCritical(String),
    #[error("fibration has positive degree; invert it to get the negative-degree orientation")]
    WrongOrientation,
    #[error("the reducible locus is degenerate")]
    DegenerateReducible,
    #[error("no flows connect critical manifolds of opposite sign")]
    OppositeSign,
    #[error("the only flows leaving a reducible are stationary")]
    FromReducible,
    #[error("grading {0} is not an integer")]
    NonIntegralGrading(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    /// Stable identifier printed by the command line front-end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::SingularMatrix => "SingularMatrix",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NonCoprimeModuli(..) => "NonCoprimeModuli",
            Error::NonCoprime(..) => "NonCoprime",
            Error::BaseMismatch => "BaseMismatch",
            Error::ZeroDegree => "ZeroDegree",
            Error::InvalidPair { .. } => "InvalidPair",
            Error::JOutOfRange { .. } => "JOutOfRange",
            Error::InvalidBase(_) => "InvalidBase",
            Error::InvalidData(_) => "InvalidData",
            Error::NonIsolatedCritical(_) => "NonIsolatedCritical",
            Error::WrongOrientation => "WrongOrientation",
            Error::DegenerateReducible => "DegenerateReducible",
            Error::OppositeSign => "OppositeSign",
            Error::FromReducible => "FromReducible",
            Error::NonIntegralGrading(_) => "NonIntegralGrading",
            Error::Parse { .. } => "ParseError",
        }
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
