use thiserror::Error;

/// Errors reported by the fallible operations of this crate.
///
/// Almost everything here is total on its documented domain; the exceptions
/// are series exponentiation (which needs a zero constant term to stay inside
/// truncated polynomial series) and the brute-force cell-selection oracle
/// (which refuses inputs large enough to make subset enumeration explode).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `SeriesPhi::exp` was called on a series whose constant term is not
    /// the zero polynomial.
    #[error("series exp requires a zero constant term, found {0}")]
    ExpNonzeroConstantTerm(String),

    /// The subset-enumeration oracle was asked about a diagram with more
    /// cells than its configured cap.
    #[error("oracle cap exceeded: diagram has {cells} cells, cap is {cap}")]
    OracleCapExceeded { cells: u32, cap: u32 },
}
