//! Error taxonomy for the numeric layer.

/// Errors produced by the numeric layer.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A series failed to meet the termination policy within its term cap.
    #[error("series did not converge: {terms} terms summed, cap {cap} (context: {what})")]
    Nonconvergence {
        /// What was being summed.
        what: &'static str,
        /// Terms consumed before giving up.
        terms: u64,
        /// Configured term cap.
        cap: u64,
    },

    /// An argument lies outside the documented domain of the operation.
    #[error("domain error in {what}: {detail}")]
    Domain {
        /// Operation name.
        what: &'static str,
        /// Human-readable description of the violation.
        detail: String,
    },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not reach tolerance: {panels} panels used, max depth {max_depth}")]
    QuadratureBudget {
        /// Panels evaluated.
        panels: u64,
        /// Maximum bisection depth reached.
        max_depth: u32,
    },

    /// A root-finding bracket has endpoint values of equal sign.
    #[error("no sign change on [{lo}, {hi}]: f(lo) sign {sign_lo}, f(hi) sign {sign_hi}")]
    NoSignChange {
        /// Lower endpoint (approximate, for diagnostics).
        lo: f64,
        /// Upper endpoint (approximate, for diagnostics).
        hi: f64,
        /// Sign of f at lo.
        sign_lo: i8,
        /// Sign of f at hi.
        sign_hi: i8,
    },

    /// Root refinement hit its iteration cap before reaching the target width.
    #[error("root refinement exceeded {max_iter} iterations")]
    MaxIterations {
        /// Configured iteration cap.
        max_iter: u64,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
