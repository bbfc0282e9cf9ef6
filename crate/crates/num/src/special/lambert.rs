//! Lambert W, principal and lower real branches.
//!
//! Seeds are computed in double precision (series seed near the branch
//! point, logarithmic fixpoint near zero), then refined by Newton iteration
//! at a doubling precision ladder. Both branch domains used in this
//! workspace stay a fixed distance from the branch point -1/e, where Newton
//! on `w e^w - x` converges quadratically.

use rug::Float;

use crate::ctx::PrecisionContext;
use crate::error::{Error, Result};

/// Inputs within this many ulps of -1/e are treated as the branch point
/// itself (W = -1 exactly). The derivative of W is unbounded there, so no
/// finite-precision answer can distinguish them.
const BRANCH_POINT_ULPS: i32 = 4;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Branch {
    Principal,
    Lower,
}

/// Principal branch `W_0(x)` for `x >= -1/e`: the solution of `w e^w = x`
/// with `w >= -1`.
///
/// # Errors
/// `Domain` if `x < -1/e` (beyond rounding slack) or `x` is not finite.
pub fn lambert_w0(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    lambert(x, ctx, Branch::Principal)
}

/// Lower branch `W_{-1}(x)` for `-1/e <= x < 0`: the solution of `w e^w = x`
/// with `w <= -1`.
///
/// # Errors
/// `Domain` if `x` is outside `[-1/e, 0)` (beyond rounding slack) or not
/// finite.
pub fn lambert_w_minus1(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    lambert(x, ctx, Branch::Lower)
}

fn lambert(x: &Float, ctx: &PrecisionContext, branch: Branch) -> Result<Float> {
    let what: &'static str = match branch {
        Branch::Principal => "lambert_w0",
        Branch::Lower => "lambert_w_minus1",
    };
    if !x.is_finite() {
        return Err(Error::Domain {
            what,
            detail: format!("x must be finite, got {x}"),
        });
    }
    let work = ctx.prec() + 32;
    let minus_inv_e = -Float::with_val(work, -1).exp();
    // Slack: a few ulps of 1/e at the *input's* precision, so callers who
    // rounded -1/e themselves still land on the branch point.
    let slack = Float::with_val(
        work,
        Float::i_exp(BRANCH_POINT_ULPS, -(x.prec().min(work) as i32) - 1),
    );

    let below_branch = Float::with_val(work, &minus_inv_e - x); // > 0 iff x < -1/e
    if below_branch > slack {
        return Err(Error::Domain {
            what,
            detail: format!("x = {x} is below -1/e"),
        });
    }
    if below_branch.clone().abs() <= slack {
        return Ok(ctx.int(-1));
    }
    if branch == Branch::Lower && !x.is_sign_negative() {
        return Err(Error::Domain {
            what,
            detail: format!("x must be negative on the lower branch, got {x}"),
        });
    }
    if x.is_zero() {
        return Ok(ctx.zero());
    }

    // Seeds work from the f64 image of x; when |x| under- or overflows f64,
    // fall back to the asymptotic seed ln|x| - ln(|ln|x||) computed from the
    // big-float logarithm (both branches are logarithmic in that regime).
    let xf = x.to_f64();
    let seed = if xf == 0.0 || xf.is_infinite() {
        let l = Float::with_val(64, x.abs_ref()).ln().to_f64();
        l - l.abs().ln()
    } else {
        match branch {
            Branch::Principal => seed_w0(xf),
            Branch::Lower => seed_wm1(xf),
        }
    };

    // Newton ladder: w <- w - (w e^w - x)/(e^w (1 + w)), two steps per
    // precision level, doubling up to the working width.
    let mut w = Float::with_val(64, seed);
    let mut level: u32 = 64;
    loop {
        level = (level * 2).min(work);
        let xl = Float::with_val(level, x);
        w = Float::with_val(level, &w);
        for _ in 0..2 {
            let ew = Float::with_val(level, w.exp_ref());
            let f = Float::with_val(level, &w * &ew) - &xl;
            let one_plus_w = Float::with_val(level, &w + Float::with_val(level, 1));
            let df = ew * one_plus_w;
            w -= f / df;
        }
        if level == work {
            break;
        }
    }
    Ok(ctx.round(&w))
}

/// Double-precision seed for the principal branch.
fn seed_w0(x: f64) -> f64 {
    if x > 1e300 {
        // Beyond this the fixpoint below cannot be evaluated in f64.
        let l = x.ln();
        return l - l.ln();
    }
    let branch_gap = x * std::f64::consts::E + 1.0;
    if branch_gap < 0.01 {
        // Series around the branch point in p = sqrt(2(1 + e x)).
        let p = (2.0 * branch_gap).max(0.0).sqrt();
        return -1.0 + p - p * p / 3.0 + 11.0 * p.powi(3) / 72.0;
    }
    let mut w = if x > std::f64::consts::E {
        let l = x.ln();
        l - l.ln()
    } else if x >= 0.0 {
        x / (1.0 + x)
    } else {
        // x in (-1/e, 0): W_0 in (-1, 0); start inside.
        x * (1.0 - x * std::f64::consts::E).recip().sqrt()
    };
    for _ in 0..100 {
        // Halley: denominator f' - f f'' / (2 f') with f = w e^w - x.
        let ew = w.exp();
        let f = w * ew - x;
        let step = f / (ew * (1.0 + w) - f * (2.0 + w) / (2.0 * (1.0 + w)));
        if !step.is_finite() {
            break;
        }
        w -= step;
        if step.abs() < 1e-14 * (1.0 + w.abs()) {
            break;
        }
    }
    w
}

/// Double-precision seed for the lower branch.
fn seed_wm1(x: f64) -> f64 {
    let branch_gap = x * std::f64::consts::E + 1.0;
    if branch_gap < 0.01 {
        let p = (2.0 * branch_gap).max(0.0).sqrt();
        return -1.0 - p - p * p / 3.0 - 11.0 * p.powi(3) / 72.0;
    }
    // Logarithmic fixpoint w = ln(-x) - ln(-w), contraction for w < -1.
    let mut w = {
        let l = (-x).ln(); // < 0 for x in (-1/e, 0)
        (l - 2.0).min(-2.0)
    };
    for _ in 0..200 {
        let next = (-x).ln() - (-w).ln();
        if !next.is_finite() {
            break;
        }
        if (next - w).abs() < 1e-14 * w.abs() {
            w = next;
            break;
        }
        w = next;
    }
    w
}
