//! The base kernel: single terms, the full sum, symmetrized truncations, and
//! the Mellin-side partner.
//!
//! The term family is
//! `phi_k(t) = (4 (pi k^2)^2 e^(9t/2) - 6 pi k^2 e^(5t/2)) exp(-pi k^2 e^(2t))`;
//! summed over `k >= 1` it gives the even, super-exponentially decaying
//! kernel whose cosine transform is the xi function on the critical line.
//! The symmetrized truncation keeps `k <= n` and averages `t` with `-t`.
//! On the Mellin side the analogous terms are
//! `psi_k(x) = (2 (pi k^2)^2 x^2 - 3 pi k^2 x) e^(-pi k^2 x)`.

use rug::float::Constant;
use rug::Float;

use xilab_num::guard::{
    float_exponent, guard_verdict, realized_cancellation, MAX_GUARD_ATTEMPTS,
};
use xilab_num::PrecisionContext;

use crate::error::Result;

/// Most negative argument accepted by [`phi_exact`]. The full sum at `t < 0`
/// cancels down to `exp(-pi e^(2|t|))` scale, so the working precision and
/// term count both grow like `e^(2|t|)`; beyond this point a single call
/// would take minutes.
pub const PHI_EXACT_T_MIN: f64 = -4.5;

/// Largest argument accepted by [`phi_exact`]: past this the value's binary
/// exponent (about `-4.53 * e^(2t)`) leaves the backend exponent range.
pub const PHI_EXACT_T_MAX: f64 = 20.0;

/// `omega_n = (ln n)/2`, the half-width of the frequency window attached to
/// truncation order `n`.
///
/// # Panics
/// If `n == 0`.
#[must_use]
pub fn omega(n: u32, ctx: &PrecisionContext) -> Float {
    assert!(n >= 1, "omega requires n >= 1, got {n}");
    Float::with_val(ctx.prec(), n).ln() / 2i32
}

/// Single kernel term at explicit working precision.
pub(crate) fn phi_term_at(k: u64, t: &Float, p: u32) -> Float {
    let pk2 = Float::with_val(p, Constant::Pi) * (k * k);
    let e92 = (Float::with_val(p, t * 9i32) / 2i32).exp();
    let e52 = (Float::with_val(p, t * 5i32) / 2i32).exp();
    let e2t = Float::with_val(p, t * 2i32).exp();
    let lead = Float::with_val(p, pk2.square_ref()) * 4i32 * e92;
    let sub = Float::with_val(p, &pk2 * 6i32) * e52;
    let gauss = (-(pk2 * e2t)).exp();
    (lead - sub) * gauss
}

/// `phi_k(t) = (4 (pi k^2)^2 e^(9t/2) - 6 pi k^2 e^(5t/2)) exp(-pi k^2 e^(2t))`.
///
/// Positive for `t > 0` (the quartic part dominates there for every `k`);
/// not an even function of `t` on its own.
///
/// # Panics
/// If `k == 0`.
#[must_use]
pub fn phi_term(k: u32, t: &Float, ctx: &PrecisionContext) -> Float {
    assert!(k >= 1, "phi_term requires k >= 1, got {k}");
    ctx.round(&phi_term_at(u64::from(k), t, ctx.prec() + 32))
}

/// Full kernel sum and the peak term exponent, at explicit precision.
///
/// Terms are positive and monotone decreasing once `pi k^2 e^(2t) >= 3`;
/// summation stops after two consecutive terms fall below `2^-(p+16)`
/// relative to the largest term seen, so the discarded tail is negligible
/// at `p` bits even after the guard absorbs the cancellation.
fn phi_sum_at(t: &Float, p: u32) -> Result<(Float, Option<i64>)> {
    let e2t = Float::with_val(p, t * 2i32).exp();
    let e2t_64 = e2t.to_f64();
    let pi64 = std::f64::consts::PI;
    let k_min = (3.0 / (pi64 * e2t_64)).sqrt().ceil().max(1.0) as u64;
    let needed_nats =
        f64::from(p + 64) * std::f64::consts::LN_2 + 4.5 * t.to_f64().abs() + 64.0;
    let k_cap = k_min + (2.0 * needed_nats / (pi64 * e2t_64)).sqrt().ceil() as u64 + 16;

    let mut sum = Float::new(p);
    let mut peak: Option<i64> = None;
    let mut small_streak = 0u32;
    for k in 1..=k_cap {
        let term = phi_term_at(k, t, p);
        let texp = float_exponent(&term);
        peak = match (peak, texp) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (one, None) => one,
            (None, one) => one,
        };
        sum += &term;
        let small = match (texp, peak) {
            (None, _) => true,
            (Some(e), Some(pk)) => e < pk - i64::from(p) - 16,
            (Some(_), None) => false,
        };
        if k >= k_min && small {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok((sum, peak));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(xilab_num::Error::Nonconvergence {
        what: "full kernel sum",
        terms: k_cap,
        cap: k_cap,
    }
    .into())
}

/// The full kernel `Phi(t) = sum_{k>=1} phi_k(t)` to the context tolerance.
///
/// For `t < 0` the partial sums cancel down to the `exp(-pi e^(2|t|))`-sized
/// even value, so the summation runs with a guard sized from that closed
/// form and rechecked against the realized cancellation; the negative side
/// is always summed directly, never reflected, so evenness stays a testable
/// property of the implementation.
///
/// # Errors
/// Domain error for `t` outside `[-4.5, 20]` (see [`PHI_EXACT_T_MIN`],
/// [`PHI_EXACT_T_MAX`]); nonconvergence only on termination-policy bugs.
pub fn phi_exact(t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let t64 = t.to_f64();
    if !t64.is_finite() || !(PHI_EXACT_T_MIN..=PHI_EXACT_T_MAX).contains(&t64) {
        return Err(xilab_num::Error::Domain {
            what: "phi_exact",
            detail: format!(
                "t must lie in [{PHI_EXACT_T_MIN}, {PHI_EXACT_T_MAX}], got {t64}"
            ),
        }
        .into());
    }
    let mut guard: u32 = if t64 < 0.0 {
        let nats = std::f64::consts::PI * (-2.0 * t64).exp() + 4.5 * t64;
        (nats.max(0.0) * std::f64::consts::LOG2_E).ceil() as u32 + 64
    } else {
        64
    };
    for attempt in 0..MAX_GUARD_ATTEMPTS {
        let p = ctx.prec().saturating_add(guard);
        let (sum, peak) = phi_sum_at(t, p)?;
        match guard_verdict(guard, realized_cancellation(peak, float_exponent(&sum))) {
            Err(wider) if attempt + 1 < MAX_GUARD_ATTEMPTS => guard = wider,
            _ => return Ok(ctx.round(&sum)),
        }
    }
    unreachable!("guard retry loop returns on its final attempt")
}

/// Symmetrized truncation `Phi_n(t) = (1/2) sum_{k<=n} (phi_k(t) + phi_k(-t))`.
///
/// Even in `t` bit-for-bit: each pair is combined with one commutative
/// addition and one exact halving, so evaluating at `-t` reproduces the
/// identical float. Near a zero of `Phi_n` the relative error degrades as
/// the value vanishes; the absolute error stays below `2^(16-p)` times the
/// largest pair, which is what sign-based root refinement needs.
///
/// # Panics
/// If `n == 0`.
#[must_use]
pub fn phi_truncated(n: u32, t: &Float, ctx: &PrecisionContext) -> Float {
    assert!(n >= 1, "phi_truncated requires n >= 1, got {n}");
    let p = ctx.prec() + 64;
    let neg_t = Float::with_val(t.prec(), &*t.as_neg());
    let mut sum = Float::new(p);
    for k in 1..=u64::from(n) {
        let a = phi_term_at(k, t, p);
        let b = phi_term_at(k, &neg_t, p);
        sum += Float::with_val(p, &a + &b) / 2i32;
    }
    ctx.round(&sum)
}

/// Single Mellin-side term at explicit working precision.
pub(crate) fn psi_term_at(k: u64, x: &Float, p: u32) -> Float {
    let pk2x = Float::with_val(p, Constant::Pi) * (k * k) * x;
    let lead = Float::with_val(p, pk2x.square_ref()) * 2i32;
    let sub = Float::with_val(p, &pk2x * 3i32);
    let gauss = (-pk2x).exp();
    (lead - sub) * gauss
}

/// `psi_k(x) = (2 (pi k^2)^2 x^2 - 3 pi k^2 x) e^(-pi k^2 x)`.
///
/// # Errors
/// Domain error for `x <= 0`.
///
/// # Panics
/// If `k == 0`.
pub fn psi_term(k: u32, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    assert!(k >= 1, "psi_term requires k >= 1, got {k}");
    ensure_positive("psi_term", x)?;
    Ok(ctx.round(&psi_term_at(u64::from(k), x, ctx.prec() + 32)))
}

/// Symmetrized Mellin truncation
/// `Psi_n(x) = (1/2) sum_{k<=n} (psi_k(x) + x^(-1/2) psi_k(1/x))`.
///
/// The reflected term carries the `x^(-1/2)` weight that makes
/// `x^(1/4) Psi_n(x) = x^(-1/4) Psi_n(1/x)` hold, matching the substitution
/// `Phi_n(t) = 2 e^(t/2) Psi_n(e^(2t))`.
///
/// # Errors
/// Domain error for `x <= 0` or `n < 2`.
pub fn psi_n(x: &Float, n: u32, ctx: &PrecisionContext) -> Result<Float> {
    ensure_positive("psi_n", x)?;
    if n < 2 {
        return Err(xilab_num::Error::Domain {
            what: "psi_n",
            detail: format!("truncation order must satisfy n >= 2, got {n}"),
        }
        .into());
    }
    let p = ctx.prec() + 64;
    let inv_x = Float::with_val(p, x.recip_ref());
    let weight = Float::with_val(p, x.sqrt_ref()).recip();
    let mut sum = Float::new(p);
    for k in 1..=u64::from(n) {
        let direct = psi_term_at(k, x, p);
        let reflected = psi_term_at(k, &inv_x, p) * &weight;
        sum += Float::with_val(p, &direct + &reflected) / 2i32;
    }
    Ok(ctx.round(&sum))
}

/// Shared positivity check for Mellin-side arguments.
pub(crate) fn ensure_positive(what: &'static str, x: &Float) -> Result<()> {
    if x.is_finite() && x.is_sign_positive() && !x.is_zero() {
        Ok(())
    } else {
        Err(xilab_num::Error::Domain {
            what,
            detail: format!("argument must be positive, got {x}"),
        }
        .into())
    }
}
