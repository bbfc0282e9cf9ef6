//! Gamma on the complex plane, and the normalized upper incomplete gamma.
//!
//! The evaluation route is the classical one: reflect arguments with real
//! part below one half, shift the remainder up the real axis until the
//! log-Gamma asymptotic series converges rigorously, then undo the shift by
//! dividing out the recurrence product. All cancellation sources (reflection
//! sine near integers, upper-tail subtraction) are either bounded a priori
//! from the argument or measured after the fact and retried wider.

use rug::Float;

use crate::complex::{real_pow_complex, Complex};
use crate::ctx::PrecisionContext;
use crate::error::{Error, Result};
use crate::guard::{
    complex_exponent, float_exponent, guard_verdict, realized_cancellation, MAX_GUARD_ATTEMPTS,
};

use super::gamma::{gamma_lower_normalized, is_nonpositive_integer};

/// Hard ceiling on guard widths derived from near-pole proximity estimates.
const PENALTY_CLAMP: u32 = 1 << 22;

/// Gamma of a complex argument.
///
/// Accuracy: relative error at most a few units of `2^-prec` away from the
/// poles; approaching a pole, the working precision widens automatically
/// with the (finite) proximity so the relative error is preserved.
///
/// # Errors
/// `Domain` if `z` is not finite or is exactly a nonpositive integer (a
/// pole); `Nonconvergence` only on internal budget exhaustion (not reachable
/// for representable inputs).
pub fn gamma_complex(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if !z.is_finite() {
        return Err(Error::Domain {
            what: "gamma_complex",
            detail: format!("z must be finite, got {:?}", z.to_f64_parts()),
        });
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Domain {
            what: "gamma_complex",
            detail: format!("pole at nonpositive integer z = {}", z.re),
        });
    }

    let reflect = z.re.to_f64() < 0.5;
    let mut guard = 96 + magnitude_guard_bits(z, ctx.prec());
    if reflect {
        guard = guard.saturating_add(reflection_penalty_bits(z));
    }
    let g = ctx.promote(guard.min(PENALTY_CLAMP));
    let p = g.prec();
    let zp = Complex::new(Float::with_val(p, &z.re), Float::with_val(p, &z.im));

    let v = if reflect {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z)), with Re(1 - z) > 0.5.
        let one_minus = Complex::new(
            Float::with_val(p, 1u32 - &zp.re),
            Float::with_val(p, -&zp.im),
        );
        let gamma_om = gamma_right_half(&one_minus, &g)?;
        let sin_piz = zp.scale(&g.pi()).sin();
        if sin_piz.is_zero() {
            return Err(Error::Domain {
                what: "gamma_complex",
                detail: "argument rounded onto a pole at working precision".to_string(),
            });
        }
        Complex::from_real(g.pi()).div(&sin_piz.mul(&gamma_om))
    } else {
        gamma_right_half(&zp, &g)?
    };
    Ok(Complex::new(ctx.round(&v.re), ctx.round(&v.im)))
}

/// Normalized upper incomplete gamma
/// `Q(a, x) = Gamma(a, x) / x^a = Gamma(a) x^-a - gamma_hat(a, x)` for real
/// `x > 0`.
///
/// The subtraction cancels roughly `x log2(e)` leading bits when the upper
/// tail is exponentially small; that loss is pre-budgeted from `x`, then the
/// realized cancellation is measured and the evaluation retried wider if the
/// estimate fell short.
///
/// # Errors
/// `Domain` if `a` is a nonpositive integer (this route needs `Gamma(a)`) or
/// `x <= 0`; `Nonconvergence` from the underlying series on budget
/// exhaustion.
pub fn gamma_upper_normalized(a: &Complex, x: &Float, ctx: &PrecisionContext) -> Result<Complex> {
    if !a.is_finite() || is_nonpositive_integer(a) {
        return Err(Error::Domain {
            what: "gamma_upper_normalized",
            detail: format!("a must be finite and avoid {{0, -1, -2, ...}}, got {:?}", a.to_f64_parts()),
        });
    }
    if !x.is_finite() || x.is_zero() || !x.is_sign_positive() {
        return Err(Error::Domain {
            what: "gamma_upper_normalized",
            detail: format!("requires x > 0, got {x}"),
        });
    }

    let mut guard = (x.to_f64() * std::f64::consts::LOG2_E).ceil() as u32 + 64;
    for attempt in 0..MAX_GUARD_ATTEMPTS {
        // A fresh full-width context (not `promote`, which keeps the caller's
        // rel_tol): the lower-gamma series must converge to the *widened*
        // tolerance for the subtraction to retain the caller's accuracy.
        let g = PrecisionContext::new(ctx.prec().saturating_add(guard));
        let p = g.prec();
        let a_hi = Complex::new(Float::with_val(p, &a.re), Float::with_val(p, &a.im));
        let x_hi = Float::with_val(p, x);
        let complete = gamma_complex(&a_hi, &g)?.mul(&real_pow_complex(&x_hi, &a_hi.neg()));
        let lower = gamma_lower_normalized(&a_hi, &x_hi, &g)?;
        let diff = complete.sub(&lower);
        let peak = complex_exponent(&complete).max(complex_exponent(&lower));
        match guard_verdict(guard, realized_cancellation(peak, complex_exponent(&diff))) {
            Err(wider) if attempt + 1 < MAX_GUARD_ATTEMPTS => guard = wider,
            _ => return Ok(Complex::new(ctx.round(&diff.re), ctx.round(&diff.im))),
        }
    }
    unreachable!("guard retry loop returns on its final attempt")
}

/// Bits needed to absorb the magnitude of `ln Gamma` at the shifted
/// argument, so that its exponentiation preserves `prec`-bit relative
/// accuracy.
fn magnitude_guard_bits(z: &Complex, prec: u32) -> u32 {
    let r0 = shift_target(prec + 256);
    let m = z.abs().to_f64().abs().clamp(r0, 1e300);
    (m * m.ln().max(1.0)).log2().ceil().max(0.0) as u32 + 16
}

/// Extra working bits covering the relative blow-up of `sin(pi z)` when `z`
/// sits close to (but not on) an integer.
fn reflection_penalty_bits(z: &Complex) -> u32 {
    let nearest = Float::with_val(64, z.re.round_ref());
    let frac = Float::with_val(64, &z.re - &nearest);
    let dist = Float::with_val(64, frac.hypot_ref(&z.im));
    let (Some(de), Some(ze)) = (float_exponent(&dist), float_exponent(&z.abs())) else {
        // Exact integers never reach the reflection path; an unmeasurable
        // distance therefore cannot occur, but fail safe rather than wrong.
        return PENALTY_CLAMP;
    };
    u32::try_from((ze - de).max(0)).map_or(PENALTY_CLAMP, |b| b.saturating_add(16)).min(PENALTY_CLAMP)
}

/// Real part past which the log-Gamma asymptotic series reaches `2^-bits`
/// including the half-plane secant factor (worst case on the imaginary
/// axis, where the effective decay is about `6.4` bits per unit).
fn shift_target(bits: u32) -> f64 {
    f64::from(bits) / 6.0 + 24.0
}

/// Gamma for `Re z >= 0.5 - ulp`: recurrence shift to the asymptotic zone,
/// log-expansion there, then division by the shift product.
fn gamma_right_half(z: &Complex, g: &PrecisionContext) -> Result<Complex> {
    let p = g.prec();
    let r0 = shift_target(p);
    let k = (r0 - z.re.to_f64()).ceil().max(0.0) as u32;
    let w = z.add_real(&Float::with_val(p, k));
    let ln_gamma_w = log_gamma_asymptotic(&w, g)?;
    let gamma_w = ln_gamma_w.exp();
    if k == 0 {
        return Ok(gamma_w);
    }
    let mut shift_product = Complex::one(p);
    for j in 0..k {
        shift_product = shift_product.mul(&z.add_real(&Float::with_val(p, j)));
    }
    Ok(gamma_w.div(&shift_product))
}

/// `ln Gamma(w)` for `Re w` at or beyond [`shift_target`]: the Stirling form
/// `(w - 1/2) ln w - w + ln(2 pi)/2 + sum_n c_n w^(1-2n)` with coefficients
/// `c_n = B_2n / (2n (2n-1))` generated from even zeta values.
///
/// The summation stops when a term, multiplied by the cumulative worst-case
/// secant factor `2^n` of the remainder bound, falls below one ulp of the
/// accumulated value; the shift target guarantees this happens while terms
/// are still shrinking.
fn log_gamma_asymptotic(w: &Complex, g: &PrecisionContext) -> Result<Complex> {
    let p = g.prec();
    let ln_w = w.ln();
    let half = Float::with_val(p, 0.5f64);
    let mut acc = w.sub(&Complex::from_real(half)).mul(&ln_w).sub(w);
    let half_ln_two_pi = (g.pi() * 2u32).ln() / 2u32;
    acc = acc.add_real(&half_ln_two_pi);

    let Some(acc_exp) = complex_exponent(&acc) else {
        return Err(Error::Domain {
            what: "log_gamma_asymptotic",
            detail: "accumulator vanished in the asymptotic zone".to_string(),
        });
    };
    let stop_exp = acc_exp - i64::from(p) - 16;

    let w2_inv = w.mul(w).recip();
    let mut w_pow = w.recip();
    // Iteratively maintained pieces of B_2n = (-1)^(n+1) 2 (2n)! zeta(2n) /
    // (2 pi)^2n. The factorial is kept as a float: only its leading `p` bits
    // matter and they are exact far beyond any reachable n.
    let mut fact = Float::with_val(p, 2u32);
    let two_pi_sq = g.powi(&(g.pi() * 2u32), 2);
    let mut two_pi_pow = two_pi_sq.clone();
    let mut sign_positive = true;
    let cap = u64::from(p) + 128;

    let mut n: u64 = 1;
    loop {
        let two_n = u32::try_from(2 * n).map_err(|_| Error::Nonconvergence {
            what: "log_gamma_asymptotic",
            terms: n,
            cap,
        })?;
        // zeta(2n) collapses to 1 below one ulp once 2n exceeds p + 8.
        let zeta_2n = if u64::from(two_n) > u64::from(p) + 8 {
            Float::with_val(p, 1u32)
        } else {
            Float::with_val(p, Float::zeta_u(two_n))
        };
        let mut coeff = Float::with_val(p, &fact * &zeta_2n) * 2u32;
        coeff /= &two_pi_pow;
        coeff /= two_n * (two_n - 1);
        if !sign_positive {
            coeff = -coeff;
        }
        let term = w_pow.scale(&coeff);
        acc = acc.add(&term);

        let term_exp = complex_exponent(&term).unwrap_or(i64::MIN / 2);
        // Remainder bound: first omitted term times sec(arg(w)/2)^(2n+2),
        // and sec^2 <= 2 on the half-plane, hence the +n secant allowance.
        if term_exp.saturating_add(i64::try_from(n).unwrap_or(i64::MAX / 2)) < stop_exp {
            return Ok(acc);
        }
        n += 1;
        if n > cap {
            return Err(Error::Nonconvergence {
                what: "log_gamma_asymptotic",
                terms: n,
                cap,
            });
        }
        w_pow = w_pow.mul(&w2_inv);
        fact *= two_n + 1;
        fact *= two_n + 2;
        two_pi_pow *= &two_pi_sq;
        sign_positive = !sign_positive;
    }
}
