//! Kernels of the alternating family: the alternating Gaussian series, its
//! signed three-track variant, and the fourth Jacobi theta value that links
//! them.
//!
//! `alt_phi(x) = sum_{n>=1} (-1)^(n+1) e^(-pi n^2 x)` and
//! `alt_varphi(x) = sum_{k>=0} (e^(-pi(4k+1)^2 x/4) + e^(-pi(4k+3)^2 x/4)
//!                  - 2 e^(-pi(4k+2)^2 x/4))`.
//! Both are always summed directly (never via their `x -> 1/x` reflection
//! laws), so those laws stay testable properties. `theta4` uses the product
//! form, giving an independent route to `alt_phi = (1 - theta4)/2`.

use rug::float::Constant;
use rug::Float;

use xilab_num::guard::{
    float_exponent, guard_verdict, realized_cancellation, MAX_GUARD_ATTEMPTS,
};
use xilab_num::PrecisionContext;

use crate::error::Result;
use crate::terms::ensure_positive;

/// Smallest argument accepted by [`alt_varphi`] and [`theta4`]: below this
/// the term count (respectively `1/x`-sized cancellation) makes a single
/// call take seconds, and the reflection laws reach any small argument from
/// a moderate one.
pub const ALT_X_MIN: f64 = 1e-4;

/// Alternating Gaussian series `sum_{n>=1} (-1)^(n+1) e^(-pi n^2 x)`.
///
/// Terms are positive and strictly decreasing, so the tail after any term
/// is smaller than that term; no cancellation beyond one bit occurs.
///
/// # Errors
/// Domain error for `x <= 0`.
pub fn alt_phi(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    ensure_positive("alt_phi", x)?;
    let p = ctx.prec() + 32;
    let pix = Float::with_val(p, Constant::Pi) * x;
    let n_cap = (f64::from(p + 64) * std::f64::consts::LN_2
        / (std::f64::consts::PI * x.to_f64()))
    .sqrt()
    .ceil() as u64
        + 8;
    let mut sum = Float::new(p);
    for n in 1..=n_cap {
        let term = (-(Float::with_val(p, &pix * (n * n)))).exp();
        if n % 2 == 1 {
            sum += &term;
        } else {
            sum -= &term;
        }
        let done = match (float_exponent(&term), float_exponent(&sum)) {
            (None, _) => true,
            (Some(te), Some(se)) => te < se - i64::from(p) + 8,
            (Some(_), None) => false,
        };
        if done {
            return Ok(ctx.round(&sum));
        }
    }
    Err(xilab_num::Error::Nonconvergence {
        what: "alternating Gaussian series",
        terms: n_cap,
        cap: n_cap,
    }
    .into())
}

/// One pass of the three-track signed series at precision `p`; returns the
/// sum and the peak exponent over the individual exponentials (between
/// which the cancellation happens).
fn varphi_sum(x: &Float, p: u32) -> (Float, Option<i64>) {
    let q = Float::with_val(p, Constant::Pi) * x / 4u32;
    let q64 = std::f64::consts::PI * x.to_f64() / 4.0;
    let k_cap = (0.25 * (f64::from(p + 64) * std::f64::consts::LN_2 / q64).sqrt()).ceil()
        as u64
        + 8;
    let mut sum = Float::new(p);
    let mut peak: Option<i64> = None;
    for k in 0..=k_cap {
        let gauss = |r: u64| (-(Float::with_val(p, &q * (r * r)))).exp();
        let e1 = gauss(4 * k + 1);
        let e2 = gauss(4 * k + 2);
        let e3 = gauss(4 * k + 3);
        peak = match (peak, float_exponent(&e1)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (one, None) => one,
            (None, one) => one,
        };
        sum += Float::with_val(p, &e1 + &e3) - e2 * 2u32;
        let small = match (float_exponent(&e1), peak) {
            (None, _) => true,
            (Some(e), Some(pk)) => e < pk - i64::from(p) - 16,
            (Some(_), None) => false,
        };
        if small {
            break;
        }
    }
    (sum, peak)
}

/// Three-track signed Gaussian series
/// `sum_{k>=0} (e^(-pi(4k+1)^2 x/4) + e^(-pi(4k+3)^2 x/4) - 2 e^(-pi(4k+2)^2 x/4))`.
///
/// For `x < 1` the three tracks cancel down to the `sqrt(1/x) e^(-pi/(4x))`
/// scale demanded by the reflection law, so the guard starts at that closed
/// form and is rechecked against the realized cancellation.
///
/// # Errors
/// Domain error for `x < 1e-4` (see [`ALT_X_MIN`]) or `x <= 0`.
pub fn alt_varphi(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    ensure_positive("alt_varphi", x)?;
    let x64 = x.to_f64();
    if x64 < ALT_X_MIN {
        return Err(xilab_num::Error::Domain {
            what: "alt_varphi",
            detail: format!("x must be at least {ALT_X_MIN}, got {x64}"),
        }
        .into());
    }
    let mut guard: u32 = if x64 < 1.0 {
        (std::f64::consts::PI / 4.0 * (1.0 / x64 - x64) * std::f64::consts::LOG2_E).ceil()
            as u32
            + 96
    } else {
        64
    };
    for attempt in 0..MAX_GUARD_ATTEMPTS {
        let p = ctx.prec().saturating_add(guard);
        let (sum, peak) = varphi_sum(x, p);
        match guard_verdict(guard, realized_cancellation(peak, float_exponent(&sum))) {
            Err(wider) if attempt + 1 < MAX_GUARD_ATTEMPTS => guard = wider,
            _ => return Ok(ctx.round(&sum)),
        }
    }
    unreachable!("guard retry loop returns on its final attempt")
}

/// Fourth Jacobi theta value `theta4(e^(-pi x))` via the product form
/// `prod_{m>=1} (1 - q^(2m)) (1 - q^(2m-1))^2` with `q = e^(-pi x)`.
///
/// An implementation independent of the alternating series, used as the
/// second route for `alt_phi(x) = (1 - theta4(x))/2`.
///
/// # Errors
/// Domain error for `x < 1e-4` (see [`ALT_X_MIN`]) or `x <= 0`.
pub fn theta4(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    ensure_positive("theta4", x)?;
    let x64 = x.to_f64();
    if x64 < ALT_X_MIN {
        return Err(xilab_num::Error::Domain {
            what: "theta4",
            detail: format!("x must be at least {ALT_X_MIN}, got {x64}"),
        }
        .into());
    }
    let p = ctx.prec() + 64;
    let q = (-(Float::with_val(p, Constant::Pi) * x)).exp();
    if q.is_zero() {
        return Ok(ctx.int(1));
    }
    let r = Float::with_val(p, q.square_ref());
    let mut even_pow = r.clone(); // q^(2m)
    let mut odd_pow = q; // q^(2m-1)
    let mut prod = Float::with_val(p, 1i32);
    let m_cap = (f64::from(p + 16) * std::f64::consts::LN_2
        / (2.0 * std::f64::consts::PI * x64))
        .ceil() as u64
        + 16;
    for _ in 1..=m_cap {
        let odd_factor = Float::with_val(p, 1i32 - &odd_pow);
        prod *= Float::with_val(p, 1i32 - &even_pow);
        prod *= Float::with_val(p, odd_factor.square_ref());
        let done = match float_exponent(&odd_pow) {
            None => true,
            Some(e) => e < -(i64::from(p) + 16),
        };
        if done {
            return Ok(ctx.round(&prod));
        }
        even_pow *= &r;
        odd_pow *= &r;
    }
    Err(xilab_num::Error::Nonconvergence {
        what: "theta product",
        terms: m_cap,
        cap: m_cap,
    }
    .into())
}
