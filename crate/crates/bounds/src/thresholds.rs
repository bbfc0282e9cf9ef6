//! Threshold solvers: the order past which an envelope drops below a target
//! tolerance, and the term counts the truncation analysis prescribes.
//!
//! All integer thresholds are exact ceilings of big-float solves carried with
//! 64 guard bits; a solve that lands within `2^-32` of an integer triggers a
//! precision escalation instead of a guess.

use rug::ops::Pow;
use rug::Float;
use xilab_num::special::{lambert_w0, lambert_w_minus1};
use xilab_num::PrecisionContext;

use crate::error::{Error, Result};

/// Guard bits added to every threshold solve before ceiling extraction.
const GUARD_BITS: u32 = 64;

/// Tie window around integers: `2^-32`.
const TIE_WINDOW_LOG2: i32 = -32;

/// Escalation attempts before a tie is reported as unresolved.
const MAX_TIE_ESCALATIONS: u32 = 4;

/// Real solution `nu0(eps)` of `lambda(nu0) = eps`, i.e. the order beyond
/// which the single-exponential majorant drops below `eps`:
///
/// `nu0 = -(6 / pi) W_{-1}( -(1/6) (eps / 72)^(1/6) )`.
///
/// Requires `0 < eps < 1`; the lower Lambert branch picks the larger of the
/// two crossings, which is the one past the majorant's hump.
pub fn nu0_threshold(eps: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_eps("nu0_threshold", eps)?;
    let g = ctx.promote(GUARD_BITS);
    let sixth_root = Float::with_val(g.prec(), eps / 72u32).root(6);
    let w_arg = -(sixth_root / 6u32);
    let w = lambert_w_minus1(&w_arg, &g)?;
    Ok(ctx.round(&(-(w * 6u32) / g.pi())))
}

/// Exact integer ceiling of [`nu0_threshold`], with tie escalation.
pub fn nu0_ceil(eps: &Float, ctx: &PrecisionContext) -> Result<i64> {
    ceil_exact("nu0_ceil", |c| nu0_threshold(eps, c), ctx)
}

/// Logarithmic threshold `eta(eps, n) = ln(3 e pi^3 n^10 / eps) / (pi e n^3)`
/// feeding the term-count solve. Requires `n >= 2` and
/// `0 < eps < 3 e pi^3 n^10` so the logarithm stays positive.
pub fn eta_threshold(eps: &Float, n: u32, ctx: &PrecisionContext) -> Result<Float> {
    if n < 2 {
        return Err(Error::Domain {
            what: "eta_threshold",
            detail: format!("n must be >= 2, got {n}"),
        });
    }
    if !(eps.is_finite() && eps.is_sign_positive() && !eps.is_zero()) {
        return Err(Error::Domain {
            what: "eta_threshold",
            detail: "eps must be a finite positive number".to_string(),
        });
    }
    let g = ctx.promote(GUARD_BITS);
    let n_big = g.int(i64::from(n));
    let numerator_arg =
        g.powi(&g.pi(), 3) * g.e() * 3u32 * g.powi(&n_big, 10) / Float::with_val(g.prec(), eps);
    if numerator_arg <= 1u32 {
        return Err(Error::Domain {
            what: "eta_threshold",
            detail: "eps must stay below 3 e pi^3 n^10".to_string(),
        });
    }
    let denom = g.pi() * g.e() * n_big.pow(3u32);
    Ok(ctx.round(&(numerator_arg.ln() / denom)))
}

/// Slowly varying factor `sigma(x) = x / W0(x)`: strictly above 1 for all
/// `x > 0`, and below `e/(e-1)` whenever `x < 1/e`.
pub fn sigma_of(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !(x.is_finite() && x.is_sign_positive() && !x.is_zero()) {
        return Err(Error::Domain {
            what: "sigma_of",
            detail: "x must be a finite positive number".to_string(),
        });
    }
    let g = ctx.promote(GUARD_BITS);
    let w = lambert_w0(x, &g)?;
    Ok(ctx.round(&(Float::with_val(g.prec(), x) / w)))
}

/// Term-count threshold `mu0(eps, n) = 2 + pi e n^3 sigma(eta(eps, n))`: past
/// this count the truncation envelope is both valid and below `eps`.
/// Requires `n >= 2` and `0 < eps < 1`.
pub fn mu0_threshold(eps: &Float, n: u32, ctx: &PrecisionContext) -> Result<Float> {
    check_eps("mu0_threshold", eps)?;
    let g = ctx.promote(GUARD_BITS);
    let eta = eta_threshold(eps, n, &g)?;
    let sigma = sigma_of(&eta, &g)?;
    let n3 = g.int(i64::from(n)).pow(3u32);
    Ok(ctx.round(&(g.pi() * g.e() * n3 * sigma + 2u32)))
}

/// [`eta_threshold`] evaluated at the majorant's own value,
/// `eta~(n) = eta(lambda(n), n)`.
pub fn eta_tilde(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.promote(GUARD_BITS);
    let lam = crate::envelopes::lambda_bound(n, &g)?;
    eta_threshold(&lam, n, ctx)
}

/// `sigma~(n) = sigma(eta~(n))`.
pub fn sigma_tilde(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.promote(GUARD_BITS);
    let eta = eta_tilde(n, &g)?;
    sigma_of(&eta, ctx)
}

/// `mu0~(n) = 2 + pi e n^3 sigma~(n)`: the term count at which the truncation
/// envelope matches the majorant. Stays below `2 + 9 n^3` because
/// `pi e sigma~(n) < 9` already at `n = 2`.
pub fn mu0_tilde(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.promote(GUARD_BITS);
    let sigma = sigma_tilde(n, &g)?;
    let n3 = g.int(i64::from(n)).pow(3u32);
    Ok(ctx.round(&(g.pi() * g.e() * n3 * sigma + 2u32)))
}

/// Prescribed term count `m(l, n) = 2 + l n^3` (exact integer arithmetic).
/// Requires `l >= 9` — smaller multipliers fall below the envelope's turning
/// point — and `n >= 2`.
pub fn m_of(l: u32, n: u32) -> Result<u64> {
    if l < 9 {
        return Err(Error::Domain {
            what: "m_of",
            detail: format!("multiplier l must be >= 9, got {l}"),
        });
    }
    if n < 2 {
        return Err(Error::Domain {
            what: "m_of",
            detail: format!("n must be >= 2, got {n}"),
        });
    }
    u64::from(n)
        .checked_pow(3)
        .and_then(|n3| n3.checked_mul(u64::from(l)))
        .and_then(|v| v.checked_add(2))
        .ok_or(Error::Domain {
            what: "m_of",
            detail: format!("2 + {l} * {n}^3 overflows 64-bit integers"),
        })
}

/// Exact ceiling of a context-dependent solve.
///
/// Evaluates `value_at` with 64 guard bits; if the result lands within
/// `2^-32` of an integer, re-evaluates at successively doubled guard widths
/// (the solve itself must sharpen with precision) before giving up.
pub fn ceil_exact(
    what: &'static str,
    value_at: impl Fn(&PrecisionContext) -> Result<Float>,
    ctx: &PrecisionContext,
) -> Result<i64> {
    let mut extra = GUARD_BITS;
    for _ in 0..=MAX_TIE_ESCALATIONS {
        let g = ctx.promote(extra);
        let v = value_at(&g)?;
        if !v.is_finite() {
            return Err(Error::Domain {
                what,
                detail: "solve produced a non-finite value".to_string(),
            });
        }
        let nearest = Float::with_val(v.prec(), v.round_ref());
        let dist = Float::with_val(v.prec(), &v - &nearest).abs();
        if dist > g.two_pow(TIE_WINDOW_LOG2) {
            let ceil = v.ceil();
            return ceil.to_integer().and_then(|i| i.to_i64()).ok_or(Error::Domain {
                what,
                detail: "ceiling exceeds the 64-bit integer range".to_string(),
            });
        }
        extra = extra.saturating_mul(2).saturating_add(ctx.prec());
    }
    Err(Error::TieUnresolved {
        what,
        attempts: MAX_TIE_ESCALATIONS,
    })
}

fn check_eps(what: &'static str, eps: &Float) -> Result<()> {
    if !(eps.is_finite() && eps.is_sign_positive() && !eps.is_zero() && *eps < 1u32) {
        return Err(Error::Domain {
            what,
            detail: "eps must lie strictly inside (0, 1)".to_string(),
        });
    }
    Ok(())
}
