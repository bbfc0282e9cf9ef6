//! Error taxonomy for the kernel layer.

/// Errors produced by kernel construction and evaluation.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Failure in the underlying numeric layer (domain, convergence,
    /// bracketing, quadrature).
    #[error(transparent)]
    Num(#[from] xilab_num::Error),

    /// The sign scan for the smallest positive kernel zero found no sign
    /// change on its probe interval.
    #[error("no zero of the truncated kernel with n = {n} found in (0, {upper:.6}]")]
    ZeroNotFound {
        /// Truncation order that was probed.
        n: u32,
        /// Upper end of the scanned interval (approximate).
        upper: f64,
    },

    /// A kernel name not present in the registry.
    #[error("unknown kernel '{name}'; known kernels: {known}")]
    UnknownKernel {
        /// The offending name.
        name: String,
        /// Comma-separated registry contents.
        known: String,
    },

    /// A kernel was given the wrong number of parameters.
    #[error("kernel '{name}' expects {expected}, got {got} argument(s)")]
    BadArity {
        /// Kernel name.
        name: &'static str,
        /// Human-readable expectation, e.g. "1 argument (n)".
        expected: &'static str,
        /// Number of arguments supplied.
        got: usize,
    },

    /// A kernel parameter violates its documented constraint.
    #[error("kernel '{name}': {requirement}, got {got}")]
    BadArgument {
        /// Kernel name.
        name: &'static str,
        /// The violated constraint, e.g. "n must be an integer >= 2".
        requirement: &'static str,
        /// The offending value.
        got: f64,
    },

    /// A kernel spec string could not be parsed.
    #[error("malformed kernel spec '{text}': {detail}")]
    BadSpec {
        /// The input text.
        text: String,
        /// What went wrong.
        detail: &'static str,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
