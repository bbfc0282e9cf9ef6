//! Arbitrary-precision numeric core for the xi laboratory.
//!
//! Provides the precision context threaded through every operation, complex
//! arithmetic over MPFR floats, signed log-magnitude accumulation for
//! ladders with huge dynamic range, a convergent-series engine with an
//! explicit termination policy, the special functions the approximant
//! families are built from, adaptive Gauss-Legendre quadrature, and
//! bracketed root refinement.
//!
//! Every operation is a pure function of its inputs and the
//! [`PrecisionContext`]; for a fixed context, results are deterministic to
//! the bit.

pub mod complex;
pub mod ctx;
pub mod error;
pub mod guard;
pub mod logsum;
pub mod quad;
pub mod roots;
pub mod series;
pub mod special;
pub mod witness;

pub use complex::{real_pow_complex, Complex};
pub use ctx::PrecisionContext;
pub use error::{Error, Result};
pub use logsum::{sum_balanced, LogMag};
pub use witness::RemainderWitness;

// Re-export the float type so downstream crates name one backend only.
pub use rug::Float;
