use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside an operation's parameter range.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// The input object is outside the operation's domain (e.g. an empty word
    /// where a polyomino is needed).
    #[error("domain error: {0}")]
    Domain(String),
    /// Polynomials over different variable lists were combined.
    #[error("variable mismatch: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    /// A rational generating function whose denominator cannot be brought to
    /// constant term 1.
    #[error("cannot normalize denominator: {0}")]
    Normalization(String),
    /// A checked identity or structural invariant failed. Seeing this means a
    /// transcription bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Parameter(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}
