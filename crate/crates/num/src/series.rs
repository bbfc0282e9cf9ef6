//! Convergent-series summation with the workspace termination policy.
//!
//! Hypergeometric-type terms grow before they decay, so a single small term
//! proves nothing. Summation stops only once (a) eight consecutive terms are
//! each below `rel_tol` times the current partial-sum magnitude, and (b) the
//! term index has reached the argument magnitude. Exceeding the term cap is
//! reported as nonconvergence, never silently truncated.

use rug::Float;

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Consecutive below-tolerance terms required before stopping.
pub const CONSECUTIVE_SMALL: u32 = 8;

/// Default term cap for an argument of magnitude `z_abs` with parameter
/// magnitudes summing to `param_abs`: `10 * (z_abs + param_abs + 64)`.
#[must_use]
pub fn default_cap(z_abs: f64, param_abs: f64) -> u64 {
    let raw = 10.0 * (z_abs.abs() + param_abs.abs() + 64.0);
    if raw >= u64::MAX as f64 {
        u64::MAX
    } else {
        raw as u64
    }
}

/// Sum `term(0) + term(1) + ...` until the termination policy is met.
///
/// `min_index` is the smallest index at which termination may trigger
/// (callers pass `ceil(|z|)`); `cap` bounds the number of terms. Terms that
/// are exactly zero count as below tolerance: they cannot move the sum.
pub fn sum_complex_series(
    what: &'static str,
    prec: u32,
    rel_tol: &Float,
    min_index: u64,
    cap: u64,
    mut term: impl FnMut(u64) -> Complex,
) -> Result<Complex> {
    let mut partial = Complex::zero(prec);
    let mut small_streak = 0_u32;
    let mut k = 0_u64;
    while k <= cap {
        let t = term(k);
        partial = partial.add(&t);
        let t_abs = t.abs();
        let threshold = Float::with_val(prec, rel_tol * &partial.abs());
        if t_abs.is_zero() || t_abs < threshold {
            small_streak += 1;
            if small_streak >= CONSECUTIVE_SMALL && k >= min_index {
                return Ok(partial);
            }
        } else {
            small_streak = 0;
        }
        k += 1;
    }
    Err(Error::Nonconvergence {
        what,
        terms: k,
        cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_sums_to_closed_form() {
        let prec = 128;
        let tol = Float::with_val(64, Float::i_exp(1, -100));
        let half = Float::with_val(prec, 0.5);
        let mut t = Complex::one(prec);
        let got = sum_complex_series("geometric", prec, &tol, 0, 10_000, |k| {
            if k > 0 {
                t = t.scale(&half);
            }
            t.clone()
        })
        .unwrap();
        assert!((got.re.to_f64() - 2.0).abs() < 1e-28);
    }

    #[test]
    fn cap_violation_is_reported() {
        let prec = 64;
        let tol = Float::with_val(64, Float::i_exp(1, -40));
        let err = sum_complex_series("ones", prec, &tol, 0, 50, |_| Complex::one(prec));
        assert!(matches!(err, Err(Error::Nonconvergence { cap: 50, .. })));
    }

    #[test]
    fn termination_waits_for_min_index() {
        // Terms are zero after k = 0; with min_index = 40 the summer must
        // still walk past index 40 before declaring convergence.
        let prec = 64;
        let tol = Float::with_val(64, Float::i_exp(1, -40));
        let mut calls = 0_u64;
        let got = sum_complex_series("spike", prec, &tol, 40, 1000, |k| {
            calls += 1;
            if k == 0 {
                Complex::one(prec)
            } else {
                Complex::zero(prec)
            }
        })
        .unwrap();
        assert!((got.re.to_f64() - 1.0).abs() < 1e-15);
        assert!(calls > 40, "stopped after only {calls} terms");
    }
}
