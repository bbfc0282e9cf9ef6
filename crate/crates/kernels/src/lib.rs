//! Kernel layer of the xi laboratory: the even, rapidly decaying kernel
//! whose cosine transform is the xi function, its symmetrized truncations
//! and their Mellin-side partners, a family of historical closed-form
//! approximations, a cosh-series re-expansion, and the alternating-series
//! kernels with their theta-function link.
//!
//! Evaluation strategies live behind the [`Kernel`] trait and are selected
//! by name through [`KernelRegistry`], so callers (tests, the command
//! layer) pick variants at runtime from configuration.
//!
//! All functions are pure in `(inputs, ctx)` and deterministic to the bit
//! for a fixed context.

pub mod alt;
pub mod error;
pub mod historic;
pub mod registry;
pub mod sinc;
pub mod spec;
pub mod terms;
pub mod variants;
pub mod zeros;

pub use alt::{alt_phi, alt_varphi, theta4, ALT_X_MIN};
pub use error::{Error, Result};
pub use historic::{shi_coefficient, shi_mu_ceil, shi_solve_mu, SHI_B};
pub use registry::{KernelEntry, KernelRegistry};
pub use spec::KernelSpec;
pub use terms::{
    omega, phi_exact, phi_term, phi_truncated, psi_n, psi_term, PHI_EXACT_T_MAX,
    PHI_EXACT_T_MIN,
};
pub use variants::{kernel_eval, Kernel};
pub use zeros::{smallest_positive_kernel_zero, ZERO_PROBE_N_MAX, ZERO_PROBE_N_MIN};
