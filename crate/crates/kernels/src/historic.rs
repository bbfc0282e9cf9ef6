//! Closed-form approximating kernels: the two cosh-symmetrized leading-term
//! kernels, the three-cosh refinement, the m-term cosh family, and the
//! tunable smoothed family with its threshold equation.
//!
//! All of these replace one-sided exponentials `e^(at)` of the base kernel
//! by `2 cosh(at)` in various combinations, so each is even by construction
//! and needs no symmetrization.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use xilab_num::roots::brent;
use xilab_num::PrecisionContext;

use crate::error::Result;
use crate::terms::phi_exact;

/// Decimal literal for the constant `b` in the threshold equation
/// `mu (1 - a^mu) = b` that sizes the smoothed kernel family `shi(m, a)`:
/// the family is stated with `b ~= 5.059069` and requires `m >= ceil(mu(a))`.
pub const SHI_B: &str = "5.059069";

/// `cosh(t * num / den)` at precision `p`.
fn cosh_frac(t: &Float, num: i32, den: i32, p: u32) -> Float {
    (Float::with_val(p, t * num) / den).cosh()
}

/// `exp(-2 pi cosh(2t))` at precision `p`, the shared Gaussian-like factor.
fn cosh_gauss(t: &Float, p: u32) -> Float {
    let pi = Float::with_val(p, Constant::Pi);
    (-(Float::with_val(p, t * 2i32).cosh() * 2i32 * pi)).exp()
}

/// Leading-term kernel `4 pi^2 cosh(9t/2) exp(-2 pi cosh 2t)`.
pub(crate) fn polya_at(t: &Float, p: u32) -> Float {
    let pi = Float::with_val(p, Constant::Pi);
    Float::with_val(p, pi.square_ref()) * 4i32 * cosh_frac(t, 9, 2, p) * cosh_gauss(t, p)
}

/// Two-cosh kernel `(4 pi^2 cosh(9t/2) - 6 pi cosh(5t/2)) exp(-2 pi cosh 2t)`.
pub(crate) fn polya2_at(t: &Float, p: u32) -> Float {
    let pi = Float::with_val(p, Constant::Pi);
    let lead = Float::with_val(p, pi.square_ref()) * 4i32 * cosh_frac(t, 9, 2, p);
    let sub = Float::with_val(p, &pi * 6i32) * cosh_frac(t, 5, 2, p);
    (lead - sub) * cosh_gauss(t, p)
}

/// Three-cosh kernel
/// `exp(-2 pi cosh 2t) (4 pi^2 cosh(t/2) + (4 pi^3 - 6 pi) cosh(5t/2) + 4 pi^2 cosh(9t/2))`.
pub(crate) fn debruijn_at(t: &Float, p: u32) -> Float {
    let pi = Float::with_val(p, Constant::Pi);
    let pi2_4 = Float::with_val(p, pi.square_ref()) * 4i32;
    let mid_coeff = Float::with_val(p, (&pi).pow(3i32)) * 4i32 - Float::with_val(p, &pi * 6i32);
    let inner = Float::with_val(p, &pi2_4 * &cosh_frac(t, 1, 2, p))
        + mid_coeff * cosh_frac(t, 5, 2, p)
        + pi2_4 * cosh_frac(t, 9, 2, p);
    inner * cosh_gauss(t, p)
}

/// m-term cosh family
/// `sum_{v=1}^{m} (4 pi^2 v^4 cosh(9t/2) - 6 pi v^2 cosh(5t/2)) exp(-2 pi v^2 cosh 2t)`.
pub(crate) fn hejhal_at(m: u32, t: &Float, p: u32) -> Float {
    let pi = Float::with_val(p, Constant::Pi);
    let c92 = cosh_frac(t, 9, 2, p);
    let c52 = cosh_frac(t, 5, 2, p);
    let c2 = Float::with_val(p, t * 2i32).cosh();
    let mut sum = Float::new(p);
    for v in 1..=u64::from(m) {
        let v2 = v * v;
        let lead = Float::with_val(p, pi.square_ref()) * 4i32 * (v2 * v2) * &c92;
        let sub = Float::with_val(p, &pi * 6i32) * v2 * &c52;
        let gauss = (-(Float::with_val(p, &c2 * v2) * 2i32 * &pi)).exp();
        sum += (lead - sub) * gauss;
    }
    sum
}

/// Solve the threshold equation `mu (1 - a^mu) = b` for its unique positive
/// root. The left side is strictly increasing in `mu` and bounded by `mu`,
/// so the root is bracketed by `[b, b / (1 - a^b)]`.
///
/// # Errors
/// Domain error for `a` outside `(0, 1)`.
pub fn shi_solve_mu(a: f64, ctx: &PrecisionContext) -> Result<Float> {
    ensure_a_in_unit("shi_solve_mu", a)?;
    let p = ctx.prec() + 32;
    let b = Float::with_val(p, Float::parse(SHI_B).expect("literal parses"));
    let a_f = Float::with_val(p, a);
    let a_pow_b = Float::with_val(p, (&a_f).pow(&b));
    let lo = b.clone();
    let hi = Float::with_val(p, &b / &Float::with_val(p, 1i32 - &a_pow_b));
    let mut f = |mu: &Float| {
        let shrink = Float::with_val(p, 1i32 - &Float::with_val(p, (&a_f).pow(mu)));
        Float::with_val(p, mu * &shrink) - &b
    };
    let width = Float::with_val(64, ctx.rel_tol() * &lo);
    let res = brent(&mut f, &lo, &hi, &width, 10_000)?;
    Ok(ctx.round(&res.root))
}

/// `ceil(mu(a))` for the threshold root, with one precision escalation when
/// `mu` lands within `2^-32` of an integer so the ceiling cannot be decided
/// by rounding noise.
///
/// # Errors
/// Domain error for `a` outside `(0, 1)`.
pub fn shi_mu_ceil(a: f64, ctx: &PrecisionContext) -> Result<u32> {
    let mut mu = shi_solve_mu(a, ctx)?;
    let nearest = Float::with_val(mu.prec(), mu.round_ref());
    let gap = Float::with_val(mu.prec(), &mu - &nearest).abs();
    if gap < Float::with_val(64, Float::i_exp(1, -32)) {
        mu = shi_solve_mu(a, &ctx.doubled())?;
    }
    let ceil = mu.ceil().to_f64();
    Ok(ceil as u32)
}

/// The mixing coefficient of the smoothed family:
/// `c = ((e^(2 pi) Phi(0) - 4 pi^2) / (4 pi^2)) (1-a) / (m(1-a) - a(1-a^m))`.
///
/// The denominator `(1-a)(m - a(1 + a + ... + a^(m-1)))` is positive for
/// every `m >= 1`, `a` in `(0,1)`.
///
/// # Errors
/// Domain error for `a` outside `(0, 1)` or `m == 0`.
pub fn shi_coefficient(m: u32, a: f64, ctx: &PrecisionContext) -> Result<Float> {
    Ok(ctx.round(&shi_coefficient_at(m, a, ctx.prec() + 64)?))
}

pub(crate) fn shi_coefficient_at(m: u32, a: f64, p: u32) -> Result<Float> {
    ensure_a_in_unit("shi_coefficient", a)?;
    if m == 0 {
        return Err(xilab_num::Error::Domain {
            what: "shi_coefficient",
            detail: "term count m must be at least 1".into(),
        }
        .into());
    }
    let inner = PrecisionContext::new(p.max(64));
    let phi0 = phi_exact(&Float::new(p), &inner)?;
    let pi = Float::with_val(p, Constant::Pi);
    let four_pi2 = Float::with_val(p, pi.square_ref()) * 4i32;
    let e2pi = (Float::with_val(p, &pi * 2i32)).exp();
    let head = (Float::with_val(p, &e2pi * &phi0) - &four_pi2) / &four_pi2;
    let a_f = Float::with_val(p, a);
    let one_minus_a = Float::with_val(p, 1i32 - &a_f);
    let a_pow_m = Float::with_val(p, (&a_f).pow(m));
    let denom = Float::with_val(p, &one_minus_a * m)
        - Float::with_val(p, &a_f * &Float::with_val(p, 1i32 - &a_pow_m));
    Ok(head * one_minus_a / denom)
}

/// Smoothed kernel
/// `4 pi^2 (cosh(9t/2) + c sum_{k=0}^{m-1} (1-a^(k+1)) cosh(9kt/(2m))) exp(-2 pi cosh 2t)`.
///
/// At `t = 0` the mixing collapses algebraically to `e^(2 pi) Phi(0) / (4 pi^2)`,
/// so the value there equals the full kernel's `Phi(0)` for every valid
/// `(m, a)`.
pub(crate) fn shi_at(m: u32, a: f64, t: &Float, p: u32) -> Result<Float> {
    let c = shi_coefficient_at(m, a, p)?;
    let pi = Float::with_val(p, Constant::Pi);
    let a_f = Float::with_val(p, a);
    let mut mix = Float::new(p);
    for k in 0..m {
        let weight = Float::with_val(p, 1i32 - &Float::with_val(p, (&a_f).pow(k + 1)));
        let angle = Float::with_val(p, t * (9 * u64::from(k))) / (2 * u64::from(m));
        mix += weight * angle.cosh();
    }
    let g = cosh_frac(t, 9, 2, p) + c * mix;
    Ok(Float::with_val(p, pi.square_ref()) * 4i32 * g * cosh_gauss(t, p))
}

fn ensure_a_in_unit(what: &'static str, a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 && a < 1.0 {
        Ok(())
    } else {
        Err(xilab_num::Error::Domain {
            what,
            detail: format!("smoothing parameter a must lie in (0, 1), got {a}"),
        }
        .into())
    }
}
