//! Complementary error function, log-Gamma, and the branch-free normalized
//! lower incomplete gamma.

use rug::Float;

use crate::complex::Complex;
use crate::ctx::PrecisionContext;
use crate::error::{Error, Result};
use crate::guard::{
    complex_exponent, guard_verdict, realized_cancellation, MAX_GUARD_ATTEMPTS,
};
use crate::series;

/// Complementary error function `(2/sqrt(pi)) * integral_x^inf exp(-t^2) dt`.
///
/// Total on finite input; delegates to the correctly-rounded backend.
#[must_use]
pub fn erfc(x: &Float, ctx: &PrecisionContext) -> Float {
    Float::with_val(ctx.prec(), x.erfc_ref())
}

/// `ln Gamma(x)` for `x > 0`.
///
/// # Errors
/// `Domain` if `x <= 0` or not finite.
pub fn gamma_ln(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !x.is_finite() || x.is_zero() || !x.is_sign_positive() {
        return Err(Error::Domain {
            what: "gamma_ln",
            detail: format!("requires x > 0, got {x}"),
        });
    }
    Ok(Float::with_val(ctx.prec(), x.ln_gamma_ref()))
}

pub(super) fn is_nonpositive_integer(s: &Complex) -> bool {
    s.im.is_zero() && s.re.is_integer() && (s.re.is_zero() || !s.re.is_sign_positive())
}

/// Guard bits covering the worst-case leading-digit cancellation of an
/// alternating/rotating hypergeometric-type series in `z`.
///
/// The peak term magnitude is about `exp(|z|)` while the sum can be as small
/// as `exp(max(Re z, 0))`, so up to `(|z| - max(Re z, 0)) * log2(e)` leading
/// bits cancel. Parameter-driven extra smallness of the sum (for example a
/// `1/Gamma` factor decaying in the parameter's imaginary part) is not
/// predictable from `z` alone; the series evaluators measure the realized
/// cancellation and retry with a wider guard when this estimate falls short.
#[must_use]
pub fn cancellation_guard_bits(z: &Complex) -> u32 {
    let z_abs = z.abs().to_f64();
    let re_pos = z.re.to_f64().max(0.0);
    let cancel = (z_abs - re_pos).max(0.0);
    (std::f64::consts::LOG2_E * cancel).ceil() as u32 + 64
}

/// Normalized lower incomplete gamma
/// `gamma_hat(s, x) = sum_{j>=0} (-x)^j / (j! (j+s)) = gamma(s, x) / x^s`,
/// entire in `x` and free of any branch choice for negative arguments.
///
/// # Errors
/// `Domain` if `s` is a nonpositive integer; `Nonconvergence` if the series
/// exceeds its term cap (default `10 * (|x| + |s| + 64)`).
pub fn gamma_lower_normalized(s: &Complex, x: &Float, ctx: &PrecisionContext) -> Result<Complex> {
    gamma_lower_normalized_capped(s, x, ctx, None)
}

/// [`gamma_lower_normalized`] with an explicit term cap.
pub fn gamma_lower_normalized_capped(
    s: &Complex,
    x: &Float,
    ctx: &PrecisionContext,
    cap: Option<u64>,
) -> Result<Complex> {
    if !s.is_finite() || is_nonpositive_integer(s) {
        return Err(Error::Domain {
            what: "gamma_lower_normalized",
            detail: format!("s must avoid {{0, -1, -2, ...}}, got {:?}", s.to_f64_parts()),
        });
    }
    if !x.is_finite() {
        return Err(Error::Domain {
            what: "gamma_lower_normalized",
            detail: format!("x must be finite, got {x}"),
        });
    }
    // The series argument is -x: cancellation occurs for x > 0.
    let minus_x = Complex::new(Float::with_val(x.prec(), -x), Float::new(x.prec()));
    let x_abs = x.to_f64().abs();
    let cap = cap.unwrap_or_else(|| series::default_cap(x_abs, s.abs().to_f64()));

    let mut guard = cancellation_guard_bits(&minus_x);
    for attempt in 0..MAX_GUARD_ATTEMPTS {
        let p = ctx.prec() + guard;
        let s_hi = Complex::new(Float::with_val(p, &s.re), Float::with_val(p, &s.im));
        let neg_x = Float::with_val(p, -x);
        // power = (-x)^j / j!, maintained incrementally.
        let mut power = Float::with_val(p, 1);
        let mut peak: Option<i64> = None;
        let sum = series::sum_complex_series(
            "gamma_lower_normalized",
            p,
            ctx.rel_tol(),
            x_abs.ceil() as u64,
            cap,
            |j| {
                if j > 0 {
                    power *= &neg_x;
                    power /= j;
                }
                let denom = s_hi.add_real(&Float::with_val(p, j));
                let term = Complex::from_real(power.clone()).div(&denom);
                peak = peak.max(complex_exponent(&term));
                term
            },
        )?;
        match guard_verdict(guard, realized_cancellation(peak, complex_exponent(&sum))) {
            Err(wider) if attempt + 1 < MAX_GUARD_ATTEMPTS => guard = wider,
            _ => return Ok(Complex::new(ctx.round(&sum.re), ctx.round(&sum.im))),
        }
    }
    unreachable!("guard retry loop returns on its final attempt")
}
