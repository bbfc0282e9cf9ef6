//! Kummer confluent hypergeometric 1F1 and the generalized 2F2 sum.

use rug::Float;

use crate::complex::Complex;
use crate::ctx::PrecisionContext;
use crate::error::{Error, Result};
use crate::series;
use crate::guard::{
    complex_exponent, guard_verdict, realized_cancellation, MAX_GUARD_ATTEMPTS,
};
use crate::special::gamma::cancellation_guard_bits;

fn check_lower_parameter(what: &'static str, b: &Complex) -> Result<()> {
    let nonpositive_integer =
        b.im.is_zero() && b.re.is_integer() && (b.re.is_zero() || !b.re.is_sign_positive());
    if !b.is_finite() || nonpositive_integer {
        return Err(Error::Domain {
            what,
            detail: format!(
                "lower parameter must avoid {{0, -1, -2, ...}}, got {:?}",
                b.to_f64_parts()
            ),
        });
    }
    Ok(())
}

fn promote(z: &Complex, p: u32) -> Complex {
    Complex::new(Float::with_val(p, &z.re), Float::with_val(p, &z.im))
}

/// Kummer's function `1F1(a; b; z) = sum_k (a)_k / (b)_k * z^k / k!`.
///
/// # Errors
/// `Domain` if `b` is a nonpositive integer; `Nonconvergence` past the term
/// cap (default `10 * (|z| + |a| + |b| + 64)`).
pub fn kummer_1f1(a: &Complex, b: &Complex, z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    kummer_1f1_capped(a, b, z, ctx, None)
}

/// [`kummer_1f1`] with an explicit term cap.
pub fn kummer_1f1_capped(
    a: &Complex,
    b: &Complex,
    z: &Complex,
    ctx: &PrecisionContext,
    cap: Option<u64>,
) -> Result<Complex> {
    check_lower_parameter("kummer_1f1", b)?;
    let z_abs = z.abs().to_f64();
    let cap =
        cap.unwrap_or_else(|| series::default_cap(z_abs, a.abs().to_f64() + b.abs().to_f64()));

    let mut guard = cancellation_guard_bits(z);
    for attempt in 0..MAX_GUARD_ATTEMPTS {
        let p = ctx.prec() + guard;
        let (a, b, z) = (promote(a, p), promote(b, p), promote(z, p));
        let mut term = Complex::one(p);
        let mut peak: Option<i64> = None;
        let sum = series::sum_complex_series(
            "kummer_1f1",
            p,
            ctx.rel_tol(),
            z_abs.ceil() as u64,
            cap,
            |k| {
                if k > 0 {
                    let kf = Float::with_val(p, k - 1);
                    let num = a.add_real(&kf);
                    let den = b.add_real(&kf);
                    term = term.mul(&num).div(&den).mul(&z);
                    term = term.scale(&Float::with_val(p, k).recip());
                }
                peak = peak.max(complex_exponent(&term));
                term.clone()
            },
        )?;
        match guard_verdict(guard, realized_cancellation(peak, complex_exponent(&sum))) {
            Err(wider) if attempt + 1 < MAX_GUARD_ATTEMPTS => guard = wider,
            _ => return Ok(Complex::new(ctx.round(&sum.re), ctx.round(&sum.im))),
        }
    }
    unreachable!("guard retry loop returns on its final attempt")
}

/// Generalized hypergeometric
/// `2F2(a1, a2; b1, b2; z) = sum_k (a1)_k (a2)_k / ((b1)_k (b2)_k) * z^k / k!`.
///
/// # Errors
/// As [`kummer_1f1`], checking both lower parameters.
pub fn hyp_2f2(
    a1: &Complex,
    a2: &Complex,
    b1: &Complex,
    b2: &Complex,
    z: &Complex,
    ctx: &PrecisionContext,
) -> Result<Complex> {
    hyp_2f2_capped(a1, a2, b1, b2, z, ctx, None)
}

/// [`hyp_2f2`] with an explicit term cap.
#[allow(clippy::too_many_arguments)]
pub fn hyp_2f2_capped(
    a1: &Complex,
    a2: &Complex,
    b1: &Complex,
    b2: &Complex,
    z: &Complex,
    ctx: &PrecisionContext,
    cap: Option<u64>,
) -> Result<Complex> {
    check_lower_parameter("hyp_2f2", b1)?;
    check_lower_parameter("hyp_2f2", b2)?;
    let z_abs = z.abs().to_f64();
    let param_abs = a1.abs().to_f64() + a2.abs().to_f64() + b1.abs().to_f64() + b2.abs().to_f64();
    let cap = cap.unwrap_or_else(|| series::default_cap(z_abs, param_abs));

    let mut guard = cancellation_guard_bits(z);
    for attempt in 0..MAX_GUARD_ATTEMPTS {
        let p = ctx.prec() + guard;
        let (a1, a2, b1, b2, z) = (
            promote(a1, p),
            promote(a2, p),
            promote(b1, p),
            promote(b2, p),
            promote(z, p),
        );
        let mut term = Complex::one(p);
        let mut peak: Option<i64> = None;
        let sum = series::sum_complex_series(
            "hyp_2f2",
            p,
            ctx.rel_tol(),
            z_abs.ceil() as u64,
            cap,
            |k| {
                if k > 0 {
                    let kf = Float::with_val(p, k - 1);
                    term = term.mul(&a1.add_real(&kf)).mul(&a2.add_real(&kf));
                    term = term.div(&b1.add_real(&kf)).div(&b2.add_real(&kf));
                    term = term.mul(&z).scale(&Float::with_val(p, k).recip());
                }
                peak = peak.max(complex_exponent(&term));
                term.clone()
            },
        )?;
        match guard_verdict(guard, realized_cancellation(peak, complex_exponent(&sum))) {
            Err(wider) if attempt + 1 < MAX_GUARD_ATTEMPTS => guard = wider,
            _ => return Ok(Complex::new(ctx.round(&sum.re), ctx.round(&sum.im))),
        }
    }
    unreachable!("guard retry loop returns on its final attempt")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(192)
    }

    fn c(ctx: &PrecisionContext, re: f64, im: f64) -> Complex {
        Complex::new(ctx.real(re), ctx.real(im))
    }

    #[test]
    fn kummer_at_zero_is_one() {
        let ctx = ctx();
        let got = kummer_1f1(&c(&ctx, 2.5, 1.0), &c(&ctx, 3.0, -0.5), &Complex::zero(ctx.prec()), &ctx)
            .unwrap();
        assert!(got.dist(&Complex::one(ctx.prec())).to_f64() < 1e-55);
    }

    #[test]
    fn kummer_1_2_y_closed_form() {
        // 1F1(1; 2; y) = (e^y - 1)/y at y = 1.
        let ctx = ctx();
        let got = kummer_1f1(&c(&ctx, 1.0, 0.0), &c(&ctx, 2.0, 0.0), &c(&ctx, 1.0, 0.0), &ctx).unwrap();
        let want = ctx.e() - ctx.int(1);
        assert!((got.re.clone() - want).abs().to_f64() < 1e-55);
        assert!((got.re.to_f64() - 1.718_281_828_459_045).abs() < 1e-14);
    }

    #[test]
    fn two_f_two_at_zero_is_one() {
        let ctx = ctx();
        let one = Complex::one(ctx.prec());
        let got = hyp_2f2(
            &c(&ctx, 1.0, 0.0),
            &c(&ctx, 4.25, 0.0),
            &c(&ctx, 3.0, 0.0),
            &c(&ctx, 5.25, 0.0),
            &Complex::zero(ctx.prec()),
            &ctx,
        )
        .unwrap();
        assert!(got.dist(&one).to_f64() < 1e-55);
    }

    #[test]
    fn parameter_cancellation_reduces_to_kummer() {
        // 2F2(1, c; c, d; z) = 1F1(1; d; z).
        let ctx = ctx();
        let cpar = c(&ctx, 3.75, 0.0);
        let d = c(&ctx, 2.5, 0.0);
        let z = c(&ctx, 1.25, 0.75);
        let lhs = hyp_2f2(&c(&ctx, 1.0, 0.0), &cpar, &cpar, &d, &z, &ctx).unwrap();
        let rhs = kummer_1f1(&c(&ctx, 1.0, 0.0), &d, &z, &ctx).unwrap();
        assert!(lhs.dist(&rhs).to_f64() < 1e-50);
    }

    #[test]
    fn lower_parameter_domain_is_enforced() {
        let ctx = ctx();
        let one = c(&ctx, 1.0, 0.0);
        assert!(kummer_1f1(&one, &c(&ctx, -2.0, 0.0), &one, &ctx).is_err());
        assert!(hyp_2f2(&one, &one, &one, &c(&ctx, 0.0, 0.0), &one, &ctx).is_err());
    }
}
