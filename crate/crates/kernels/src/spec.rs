//! Kernel selection: a parsed, validated description of which kernel to
//! evaluate, decoupled from the evaluation strategy behind it.

use std::fmt;

use xilab_num::PrecisionContext;

use crate::error::{Error, Result};
use crate::historic::shi_mu_ceil;

/// Which kernel to evaluate, with its parameters.
///
/// Structural constraints (`n >= 2`, `m >= 1`, `a` in `(0,1)`) are enforced
/// at construction from the registry; the `shi` threshold `m >= ceil(mu(a))`
/// needs arithmetic and is checked by [`KernelSpec::validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    /// Full kernel sum.
    Exact,
    /// Symmetrized truncation of order `n >= 2`.
    Truncated {
        /// Truncation order.
        n: u32,
    },
    /// Leading-term cosh kernel.
    Polya,
    /// Two-cosh kernel.
    Polya2,
    /// Three-cosh kernel.
    DeBruijn,
    /// m-term cosh family, `m >= 1`.
    Hejhal {
        /// Term count.
        m: u32,
    },
    /// Smoothed family with `m >= ceil(mu(a))` terms and mixing `a` in `(0,1)`.
    Shi {
        /// Term count.
        m: u32,
        /// Smoothing parameter.
        a: f64,
    },
    /// Cosh-series form of the symmetrized truncation, order `n >= 2`.
    SincCosh {
        /// Truncation order.
        n: u32,
    },
}

impl KernelSpec {
    /// Registry name of the variant.
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::Truncated { .. } => "truncated",
            Self::Polya => "polya",
            Self::Polya2 => "polya2",
            Self::DeBruijn => "debruijn",
            Self::Hejhal { .. } => "hejhal",
            Self::Shi { .. } => "shi",
            Self::SincCosh { .. } => "sinc_cosh",
        }
    }

    /// Check every constraint, including the arithmetic `shi` threshold
    /// `m >= ceil(mu(a))` at the context precision.
    ///
    /// # Errors
    /// `BadArgument` for structural violations; a domain error when the
    /// `shi` threshold fails.
    pub fn validate(&self, ctx: &PrecisionContext) -> Result<()> {
        match *self {
            Self::Exact | Self::Polya | Self::Polya2 | Self::DeBruijn => Ok(()),
            Self::Truncated { n } | Self::SincCosh { n } => {
                if n >= 2 {
                    Ok(())
                } else {
                    Err(Error::BadArgument {
                        name: if matches!(self, Self::Truncated { .. }) {
                            "truncated"
                        } else {
                            "sinc_cosh"
                        },
                        requirement: "order n must be at least 2",
                        got: f64::from(n),
                    })
                }
            }
            Self::Hejhal { m } => {
                if m >= 1 {
                    Ok(())
                } else {
                    Err(Error::BadArgument {
                        name: "hejhal",
                        requirement: "term count m must be at least 1",
                        got: f64::from(m),
                    })
                }
            }
            Self::Shi { m, a } => {
                if !(a.is_finite() && a > 0.0 && a < 1.0) {
                    return Err(Error::BadArgument {
                        name: "shi",
                        requirement: "smoothing parameter a must lie in (0, 1)",
                        got: a,
                    });
                }
                if m == 0 {
                    return Err(Error::BadArgument {
                        name: "shi",
                        requirement: "term count m must be at least 1",
                        got: f64::from(m),
                    });
                }
                let threshold = shi_mu_ceil(a, ctx)?;
                if m >= threshold {
                    Ok(())
                } else {
                    Err(xilab_num::Error::Domain {
                        what: "shi kernel",
                        detail: format!(
                            "term count m = {m} is below the threshold \
                             ceil(mu({a})) = {threshold}"
                        ),
                    }
                    .into())
                }
            }
        }
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Exact | Self::Polya | Self::Polya2 | Self::DeBruijn => {
                write!(f, "{}", self.name())
            }
            Self::Truncated { n } | Self::SincCosh { n } => write!(f, "{}({n})", self.name()),
            Self::Hejhal { m } => write!(f, "hejhal({m})"),
            Self::Shi { m, a } => write!(f, "shi({m},{a})"),
        }
    }
}
