use thiserror::Error;

/// Errors shared across the library.
///
/// Domain violations are reported eagerly: an operation either checks its
/// whole precondition up front and returns `NotInDomain`/`Domain`, or it
/// succeeds. Counting never silently truncates — exceeding an enumeration
/// cap is `SizeLimit`, and a closed-form division with a nonzero remainder
/// is `Integrality` rather than a rounded value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at index {index} (expected 'U', 'D' or 'F')")]
    InvalidCharacter { found: char, index: usize },

    #[error("order {n} exceeds the enumeration cap {cap}")]
    SizeLimit { n: usize, cap: usize },

    #[error("negative index: {0}")]
    NegativeIndex(String),

    #[error("not in domain: {0}")]
    NotInDomain(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("integrality failure: {0}")]
    Integrality(String),
}

pub type Result<T> = std::result::Result<T, Error>;
