//! Measured-cancellation retry policy for series summation.
//!
//! A static guard-bit estimate covers the predictable part of leading-digit
//! cancellation (peak term growth). Whenever the result is additionally
//! suppressed by effects invisible to the estimate, the realized cancellation
//! is measured from exponents after the fact and the summation retried with a
//! wider guard.

use rug::Float;

use crate::complex::Complex;

/// Each retry at least doubles the guard, so eight attempts widen the
/// initial estimate by up to a factor of 128 before a loop must settle.
pub const MAX_GUARD_ATTEMPTS: u32 = 8;

/// Exponent of `x` as a proxy for `log2 |x|` (`None` for zero or non-finite).
#[must_use]
pub fn float_exponent(x: &Float) -> Option<i64> {
    if x.is_finite() {
        x.get_exp().map(i64::from)
    } else {
        None
    }
}

/// Largest exponent among the finite nonzero components of `c`, a proxy for
/// `log2 |c|` accurate to within one bit.
#[must_use]
pub fn complex_exponent(c: &Complex) -> Option<i64> {
    match (float_exponent(&c.re), float_exponent(&c.im)) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (one, None) => one,
        (None, one) => one,
    }
}

/// Bits of leading-digit cancellation realized by a summation whose largest
/// term had exponent `peak` and whose result has exponent `result`. `None`
/// when it cannot be measured (empty series, or total cancellation).
#[must_use]
pub fn realized_cancellation(peak: Option<i64>, result: Option<i64>) -> Option<u32> {
    Some(u32::try_from((peak? - result?).max(0)).unwrap_or(u32::MAX))
}

/// Whether `guard` bits sufficed for the measured cancellation; on `Err`,
/// the widened guard to retry with. An unmeasurable cancellation (result
/// cancelled to exact zero) always forces a retry.
///
/// # Errors
/// `Err(wider_guard)` when the margin was short.
pub fn guard_verdict(guard: u32, measured: Option<u32>) -> Result<(), u32> {
    match measured {
        Some(c) if c + 32 <= guard => Ok(()),
        Some(c) => Err((c + 96).max(guard.saturating_mul(2))),
        None => Err(guard.saturating_mul(2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_exponent_of_zero_is_none() {
        assert_eq!(float_exponent(&Float::new(64)), None);
        assert_eq!(float_exponent(&Float::with_val(64, 8)), Some(4));
    }

    #[test]
    fn verdict_accepts_comfortable_margin_and_widens_otherwise() {
        assert!(guard_verdict(128, Some(64)).is_ok());
        assert_eq!(guard_verdict(128, Some(200)), Err(296));
        assert_eq!(guard_verdict(200, Some(300)), Err(400));
        assert_eq!(guard_verdict(100, None), Err(200));
    }

    #[test]
    fn realized_cancellation_clamps_at_zero() {
        assert_eq!(realized_cancellation(Some(10), Some(40)), Some(0));
        assert_eq!(realized_cancellation(Some(40), Some(10)), Some(30));
        assert_eq!(realized_cancellation(None, Some(0)), None);
    }
}
