use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// `Domain` and `Usage` are caller mistakes. `Consistency` means two routes
/// that must agree did not, which is always a bug here, never bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("inexact division: remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("singular or non-unit determinant: {det}")]
    NonUnitDeterminant { det: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
