//! Crate-wide error type.

use thiserror::Error;

/// Errors raised on violated preconditions.
///
/// All operations are total on valid inputs; every variant here corresponds
/// to an input that fails a documented precondition, except
/// [`Error::IdentityMismatch`] which flags a failed internal cross-check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The relator's leading monomial divides another of its own monomials,
    /// so rewriting would not terminate.
    #[error(
        "relator leading term divides another relator monomial; rewriting would not terminate"
    )]
    RelatorLeadingTermAmbiguous,
    /// A binary form was paired against a weight space of the wrong degree.
    #[error("degree mismatch: expected a form of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: i64, got: i64 },
    /// A linear generator with zero determinant.
    #[error("singular matrix: linear generators must be invertible")]
    SingularMatrix,
    /// An operation that needs a nontrivial bundle received the trivial one.
    #[error("operation requires a nontrivial bundle")]
    TrivialBundle,
    /// The section parameter lambda is zero or a root of r(z).
    #[error("bad lambda: must be nonzero and avoid the roots of r(z)")]
    BadLambda,
    /// The descent cocycle is zero, so no section data exists.
    #[error("zero cocycle: the section construction needs a nonzero class")]
    ZeroCocycle,
    /// Bundle data violating the canonical-form invariants.
    #[error("invalid bundle data: {0}")]
    InvalidBundle(String),
    /// Cocycle data outside the admissible shape for the requested degree.
    #[error("invalid cocycle data: {0}")]
    InvalidCocycle(String),
    /// Input exceeds the configured degree guard.
    #[error("input exceeds the degree guard (limit {limit})")]
    MaxDegreeExceeded { limit: i64 },
    /// Two routes that must agree produced different values.
    #[error("internal identity cross-check failed: {0}")]
    IdentityMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
