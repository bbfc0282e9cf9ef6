//! Special functions: erfc, log-Gamma, complex Gamma, normalized incomplete
//! gammas (lower and upper), Kummer 1F1, generalized 2F2, Lambert W
//! branches, and exact power sums.

mod gamma;
mod gamma_complex;
mod kummer;
mod lambert;
mod powersum;

pub use gamma::{cancellation_guard_bits, erfc, gamma_ln, gamma_lower_normalized, gamma_lower_normalized_capped};
pub use gamma_complex::{gamma_complex, gamma_upper_normalized};
pub use kummer::{hyp_2f2, hyp_2f2_capped, kummer_1f1, kummer_1f1_capped};
pub use lambert::{lambert_w0, lambert_w_minus1};
pub use powersum::{power_sum, power_sum_ladder};
