use thiserror::Error;

/// Errors surfaced by the library.
///
/// `NonIntegralMarks` and `Degenerate` are "theory check" errors: they fire
/// when input data is inconsistent with the invariants the exact identities
/// rely on, never on valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("validation failed: {0}")]
    Validation(String),

    /// A marks vector is not in the image of the integral Burnside ring.
    /// Carries the class index at which back-substitution left a fraction.
    #[error("marks vector is not integral at class index {class}: coefficient {value}")]
    NonIntegralMarks { class: usize, value: String },

    /// A determinant restricted to a fixed subspace vanished, violating the
    /// nondegeneracy hypothesis on the input differential.
    #[error("degenerate differential: det = 0 on a fixed subspace (class index {class})")]
    Degenerate { class: usize },

    #[error("vertex {vertex} has stabilizer of order {actual}, datum claims order {claimed}")]
    VertexStabilizerMismatch {
        vertex: usize,
        actual: usize,
        claimed: usize,
    },

    /// A cellular map sends part of a fixed-set component inside itself and
    /// part outside; the component-preservation question has no combinatorial
    /// answer, so we refuse to guess.
    #[error("carriers of component at cell {component} land in several components of the fixed set")]
    BorderlineComponentMap { component: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
