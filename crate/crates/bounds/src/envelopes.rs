//! Closed-form error envelopes: approximation error of the compact-support
//! family, its simplified single-exponential majorant, the tail bound for
//! series truncation, and the factorial-ratio sandwich used by the aggregate
//! inequalities.

use rug::ops::Pow;
use rug::Float;
use xilab_num::special::gamma_ln;
use xilab_num::PrecisionContext;

use crate::error::{Error, Result};

/// Guard bits added around every closed-form assembly before rounding back.
const GUARD_BITS: u32 = 64;

/// Approximation error envelope `delta(n, b)` with window size `b = n^(2*beta)`:
///
/// `5 pi b^(3/2) e^(-b pi) + (2 pi n^2 + 2 n b + b^(3/2)) e^(-n^2 pi / b)`.
///
/// The first term bounds the lost integral tail beyond the window, the second
/// the series remainder inside it. Requires `n >= 2` and `beta` strictly
/// inside `(0, 1)`; `beta` is lifted exactly from its IEEE-double value.
pub fn delta_bound(n: u32, beta: f64, ctx: &PrecisionContext) -> Result<Float> {
    if n < 2 {
        return Err(Error::Domain {
            what: "delta_bound",
            detail: format!("n must be >= 2, got {n}"),
        });
    }
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::Domain {
            what: "delta_bound",
            detail: format!("beta must lie in (0, 1), got {beta}"),
        });
    }
    let g = ctx.promote(GUARD_BITS);
    let nf = g.int(i64::from(n));
    let two_beta = g.real(beta) * 2u32;
    let ln_n = Float::with_val(g.prec(), nf.ln_ref());
    let b = (ln_n * two_beta).exp();
    let pi = g.pi();
    let sqrt_b = Float::with_val(g.prec(), b.sqrt_ref());
    let b_three_half = sqrt_b * &b;
    let minus_b_pi = -Float::with_val(g.prec(), &b * &pi);
    let tail = minus_b_pi.exp() * &b_three_half * 5u32 * &pi;
    let n_sq = Float::with_val(g.prec(), &nf * &nf);
    let inner_rate = -(Float::with_val(g.prec(), &n_sq * &pi) / &b);
    let inner_coeff = Float::with_val(g.prec(), &n_sq * &pi) * 2u32
        + Float::with_val(g.prec(), &nf * &b) * 2u32
        + &b_three_half;
    Ok(ctx.round(&(tail + inner_coeff * inner_rate.exp())))
}

/// Single-exponential majorant `lambda(n) = 72 (pi n)^6 e^(-pi n)` of the
/// approximation error at the balanced window `beta = 1/2`; strictly
/// decreasing for `n >= 2`.
pub fn lambda_bound(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    if n < 2 {
        return Err(Error::Domain {
            what: "lambda_bound",
            detail: format!("n must be >= 2, got {n}"),
        });
    }
    let g = ctx.promote(GUARD_BITS);
    let pin = g.pi() * g.int(i64::from(n));
    let decay = (-pin.clone()).exp();
    let v = g.powi(&pin, 6) * 72u32 * decay;
    Ok(ctx.round(&v))
}

/// Smallest term count for which the truncation envelope [`rho_bound`] is
/// valid at order `n`: the bound requires `m > 2 + pi e n^3`.
#[must_use]
pub fn rho_domain_floor(n: u32, ctx: &PrecisionContext) -> Float {
    let g = ctx.promote(GUARD_BITS);
    let n3 = g.int(i64::from(n)).pow(3u32);
    ctx.round(&(g.pi() * g.e() * n3 + 2u32))
}

/// Tail envelope for truncating the coefficient series after `m` terms:
///
/// `rho(m, n) = 3 e pi^3 n^10 (pi e n^3 / (m - 2))^(m - 2)`,
///
/// valid (and strictly decreasing in `m`) only past the turning point
/// `m > 2 + pi e n^3`; earlier `m` return a domain error rather than a
/// number the caller might mistake for a bound.
pub fn rho_bound(m: u64, n: u32, ctx: &PrecisionContext) -> Result<Float> {
    if n < 2 {
        return Err(Error::Domain {
            what: "rho_bound",
            detail: format!("n must be >= 2, got {n}"),
        });
    }
    let g = ctx.promote(GUARD_BITS);
    let floor = rho_domain_floor(n, &g);
    let mf = g.int(i64::try_from(m).map_err(|_| Error::Domain {
        what: "rho_bound",
        detail: format!("m = {m} exceeds the supported integer range"),
    })?);
    if mf <= floor {
        return Err(Error::Domain {
            what: "rho_bound",
            detail: format!("m must exceed 2 + pi e n^3 = {:.6}, got {m}", floor.to_f64()),
        });
    }
    let n3 = g.int(i64::from(n)).pow(3u32);
    let base = g.pi() * g.e() * &n3 / Float::with_val(g.prec(), &mf - 2u32);
    let log_tail = Float::with_val(g.prec(), base.ln_ref()) * (mf - 2u32);
    let prefactor = g.powi(&g.pi(), 3) * g.e() * 3u32 * g.powi(&g.int(i64::from(n)), 10);
    Ok(ctx.round(&(prefactor * log_tail.exp())))
}

/// Two-sided sandwich for the factorial ratio `(pi n^3)^(7n^3+2) / (7n^3+1)!`:
/// returns `(lower, upper)` where
///
/// `upper = C n^(3/2) exp(7 n^3 ln(pi e / 7))`, `C = pi^(3/2) e / (7 sqrt(14))`,
/// `lower = (65 / (84 e)) * upper`.
///
/// Valid for every `n >= 1`; the growth exponent `7 ln(pi e / 7) ~ 1.3917` is
/// strictly below `pi`, which is what the aggregate inequalities consume.
pub fn gamma_ratio_bounds(n: u32, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    if n < 1 {
        return Err(Error::Domain {
            what: "gamma_ratio_bounds",
            detail: "n must be >= 1".to_string(),
        });
    }
    let g = ctx.promote(GUARD_BITS);
    let coeff = g.powi(&g.pi(), 3).sqrt() * g.e() / (g.int(7) * Float::with_val(g.prec(), 14).sqrt());
    let n3 = g.int(i64::from(n)).pow(3u32);
    let expo = Float::with_val(g.prec(), (g.pi() * g.e() / 7u32).ln_ref()) * 7u32 * &n3;
    let scale = Float::with_val(g.prec(), g.int(i64::from(n)).pow(3u32).sqrt_ref());
    let upper = coeff * scale * expo.exp();
    let lower = Float::with_val(g.prec(), &upper * 65u32) / (g.e() * 84u32);
    Ok((ctx.round(&lower), ctx.round(&upper)))
}

/// Direct log-space evaluation of the sandwiched ratio
/// `(pi n^3)^(7n^3+2) / Gamma(7n^3 + 2)` for cross-checks against
/// [`gamma_ratio_bounds`].
pub fn gamma_ratio_empirical(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    if n < 1 {
        return Err(Error::Domain {
            what: "gamma_ratio_empirical",
            detail: "n must be >= 1".to_string(),
        });
    }
    let g = ctx.promote(GUARD_BITS);
    let n3 = g.int(i64::from(n)).pow(3u32);
    let m = Float::with_val(g.prec(), &n3 * 7u32) + 2u32;
    let log_num = Float::with_val(g.prec(), (g.pi() * &n3).ln_ref()) * &m;
    let log_den = gamma_ln(&m, &g)?;
    Ok(ctx.round(&(log_num - log_den).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_rejects_term_counts_at_or_below_the_turning_point() {
        let ctx = PrecisionContext::new(128);
        // floor at n=2 is 2 + 8 pi e = 70.317...: 70 is inside, 71 is out.
        assert!(matches!(
            rho_bound(70, 2, &ctx),
            Err(Error::Domain { what: "rho_bound", .. })
        ));
        assert!(rho_bound(71, 2, &ctx).is_ok());
    }

    #[test]
    fn delta_rejects_degenerate_shapes() {
        let ctx = PrecisionContext::new(128);
        assert!(delta_bound(1, 0.5, &ctx).is_err());
        assert!(delta_bound(4, 0.0, &ctx).is_err());
        assert!(delta_bound(4, 1.0, &ctx).is_err());
    }

    #[test]
    fn sandwich_holds_for_small_orders() {
        let ctx = PrecisionContext::new(192);
        for n in 1..=6 {
            let (lo, hi) = gamma_ratio_bounds(n, &ctx).unwrap();
            let mid = gamma_ratio_empirical(n, &ctx).unwrap();
            assert!(lo < mid && mid < hi, "sandwich violated at n={n}");
        }
    }
}
