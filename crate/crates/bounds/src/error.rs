//! Error taxonomy for the bound layer.

/// Errors produced by envelope evaluation and threshold solving.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Failure in the underlying numeric layer.
    #[error(transparent)]
    Num(#[from] xilab_num::Error),

    /// An argument lies outside the documented domain of the bound.
    #[error("domain error in {what}: {detail}")]
    Domain {
        /// Operation name.
        what: &'static str,
        /// Human-readable description of the violation.
        detail: String,
    },

    /// A threshold solve landed within the tie window of an integer at every
    /// attempted precision, so its ceiling cannot be reported honestly.
    #[error("{what}: value stayed within 2^-32 of an integer after {attempts} precision escalations")]
    TieUnresolved {
        /// Operation name.
        what: &'static str,
        /// Escalation attempts performed.
        attempts: u32,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
