//! Certified truncation envelopes and threshold solvers.
//!
//! The approximant families in this workspace come with explicit, fully
//! effective error envelopes: closed-form majorants in the order `n`, the
//! truncation length `m`, and the bandwidth parameter `beta`. This crate
//! evaluates those envelopes at arbitrary precision, solves them for the
//! order or term count needed to reach a target tolerance (with exact
//! integer ceilings), and packages envelope-versus-measurement comparisons
//! into [`BoundReport`] records that downstream checks and the CLI share.
//!
//! Modules:
//! - [`envelopes`]: the closed-form majorants (`delta_bound`,
//!   `lambda_bound`, `rho_bound`) and the factorial-ratio sandwich.
//! - [`thresholds`]: inverse solves (`nu0_threshold`, `mu0_threshold`) and
//!   prescribed term counts (`m_of`), with tie-safe ceiling extraction.
//! - [`report`]: the [`BoundReport`] record type.

pub mod envelopes;
pub mod error;
pub mod report;
pub mod thresholds;

pub use envelopes::{
    delta_bound, gamma_ratio_bounds, gamma_ratio_empirical, lambda_bound, rho_bound,
    rho_domain_floor,
};
pub use error::{Error, Result};
pub use report::{BoundReport, ParamValue};
pub use thresholds::{
    ceil_exact, eta_threshold, eta_tilde, m_of, mu0_threshold, mu0_tilde, nu0_ceil,
    nu0_threshold, sigma_of, sigma_tilde,
};
