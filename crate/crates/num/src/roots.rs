//! Bracketed root refinement: plain bisection and Brent's method.
//!
//! Both refiners demand a sign change on the initial bracket and never step
//! outside it, so a returned root is always certified by its enclosing
//! interval. Brent is used where function values are available (superlinear,
//! needed for wide mantissas); sign-only bisection serves oracles and
//! escalation-based sign callbacks.

use rug::Float;

use crate::error::{Error, Result};

/// Sign of a float as -1, 0, or +1.
#[must_use]
pub fn sign_of(v: &Float) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_sign_positive() {
        1
    } else {
        -1
    }
}

/// A refined root with its certificate.
#[derive(Debug, Clone)]
pub struct RootResult {
    /// Best root estimate.
    pub root: Float,
    /// Enclosing interval (lo <= root <= hi) with a sign change.
    pub bracket: (Float, Float),
    /// Function value at `root` (from the last evaluation).
    pub f_at_root: Float,
    /// Iterations consumed.
    pub iterations: u64,
}

/// Bisection on a sign callback until the bracket width is at most `width`.
///
/// # Errors
/// `NoSignChange` if the endpoints have equal sign; `MaxIterations` if the
/// width target is not met in `max_iter` halvings. An exact zero at a probe
/// point collapses the bracket there.
pub fn bisect(
    f_sign: &mut impl FnMut(&Float) -> i8,
    lo: &Float,
    hi: &Float,
    width: &Float,
    max_iter: u64,
) -> Result<(Float, Float)> {
    let prec = lo.prec().max(hi.prec());
    let mut lo = Float::with_val(prec, lo);
    let mut hi = Float::with_val(prec, hi);
    let s_lo = f_sign(&lo);
    let s_hi = f_sign(&hi);
    if s_lo == 0 {
        return Ok((lo.clone(), lo));
    }
    if s_hi == 0 {
        return Ok((hi.clone(), hi));
    }
    if s_lo == s_hi {
        return Err(Error::NoSignChange {
            lo: lo.to_f64(),
            hi: hi.to_f64(),
            sign_lo: s_lo,
            sign_hi: s_hi,
        });
    }
    for _ in 0..max_iter {
        let gap = Float::with_val(prec, &hi - &lo);
        if gap <= *width {
            return Ok((lo, hi));
        }
        let mid = Float::with_val(prec, &lo + &hi) / 2u32;
        // Rounding can pin mid to an endpoint once the gap nears one ulp.
        if mid == lo || mid == hi {
            return Ok((lo, hi));
        }
        let s_mid = f_sign(&mid);
        if s_mid == 0 {
            return Ok((mid.clone(), mid));
        }
        if s_mid == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::MaxIterations { max_iter })
}

/// Brent's method on a value callback until the bracket width is at most
/// `width`.
///
/// # Errors
/// `NoSignChange` if the endpoints have equal sign; `MaxIterations` if the
/// width target is not met in `max_iter` steps.
pub fn brent(
    f: &mut impl FnMut(&Float) -> Float,
    lo: &Float,
    hi: &Float,
    width: &Float,
    max_iter: u64,
) -> Result<RootResult> {
    let prec = lo.prec().max(hi.prec());
    let fl = |v: f64| Float::with_val(prec, v);

    let mut a = Float::with_val(prec, lo);
    let mut b = Float::with_val(prec, hi);
    let mut fa = f(&a);
    let mut fb = f(&b);
    if sign_of(&fa) != 0 && sign_of(&fb) != 0 && sign_of(&fa) == sign_of(&fb) {
        return Err(Error::NoSignChange {
            lo: a.to_f64(),
            hi: b.to_f64(),
            sign_lo: sign_of(&fa),
            sign_hi: sign_of(&fb),
        });
    }
    let mut c = a.clone();
    let mut fc = fa.clone();
    let mut d = Float::with_val(prec, &b - &a);
    let mut e = d.clone();

    for iter in 1..=max_iter {
        if !fc.is_zero() && sign_of(&fb) == sign_of(&fc) {
            c = a.clone();
            fc = fa.clone();
            d = Float::with_val(prec, &b - &a);
            e = d.clone();
        }
        if Float::with_val(prec, fc.abs_ref()) < Float::with_val(prec, fb.abs_ref()) {
            a = b.clone();
            b = c.clone();
            c = a.clone();
            fa = fb.clone();
            fb = fc.clone();
            fc = fa.clone();
        }
        // b is now the best estimate; the root lies between b and c.
        // tol1 adds a 4-ulp(b) floor so steps below rounding cannot stall.
        let mut tol1 = Float::with_val(prec, b.abs_ref());
        tol1 >>= prec - 2;
        tol1 += Float::with_val(prec, width) / 2u32;
        let half_width = tol1;
        let xm = Float::with_val(prec, &c - &b) / 2u32;
        let xm_abs = Float::with_val(prec, xm.abs_ref());
        if xm_abs <= half_width || fb.is_zero() {
            let (blo, bhi) = if b <= c { (b.clone(), c) } else { (c, b.clone()) };
            return Ok(RootResult {
                root: b,
                bracket: (blo, bhi),
                f_at_root: fb,
                iterations: iter,
            });
        }
        let e_abs = Float::with_val(prec, e.abs_ref());
        let fa_abs = Float::with_val(prec, fa.abs_ref());
        let fb_abs = Float::with_val(prec, fb.abs_ref());
        if e_abs >= half_width && fa_abs > fb_abs {
            // Attempt inverse quadratic interpolation (secant if a == c).
            let s = Float::with_val(prec, &fb / &fa);
            let (mut p, mut q) = if a == c {
                let p = Float::with_val(prec, &xm * 2u32) * &s;
                let q = fl(1.0) - &s;
                (p, q)
            } else {
                let q = Float::with_val(prec, &fa / &fc);
                let r = Float::with_val(prec, &fb / &fc);
                let two_xm_q = Float::with_val(prec, &xm * 2u32) * &q;
                let p1 = Float::with_val(prec, &two_xm_q * Float::with_val(prec, &q - &r));
                let b_minus_a = Float::with_val(prec, &b - &a);
                let p2 = Float::with_val(prec, &b_minus_a * Float::with_val(prec, &r - 1u32));
                let p = Float::with_val(prec, &s * Float::with_val(prec, p1 - p2));
                let q_out = Float::with_val(prec, &q - 1u32)
                    * Float::with_val(prec, &r - 1u32)
                    * Float::with_val(prec, &s - 1u32);
                (p, q_out)
            };
            if p.is_sign_positive() && !p.is_zero() {
                q = -q;
            }
            p.abs_mut();
            // Accept the interpolated step only when it stays well inside
            // the bracket; signed xm*q makes a wrong-direction step fail.
            let min1 = Float::with_val(prec, &xm * 3u32) * &q
                - Float::with_val(prec, &half_width * &q).abs();
            let min2 = Float::with_val(prec, &e_abs * &q).abs();
            let two_p = Float::with_val(prec, &p * 2u32);
            if two_p < Float::min(min1, &min2) {
                e = d.clone();
                d = Float::with_val(prec, &p / &q);
            } else {
                d = xm.clone();
                e = d.clone();
            }
        } else {
            d = xm.clone();
            e = d.clone();
        }
        a = b.clone();
        fa = fb.clone();
        let d_abs = Float::with_val(prec, d.abs_ref());
        if d_abs > half_width {
            b += &d;
        } else if xm.is_sign_positive() {
            b += &half_width;
        } else {
            b -= &half_width;
        }
        fb = f(&b);
    }
    Err(Error::MaxIterations { max_iter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt_two() {
        let prec = 128;
        let mut f = |x: &Float| sign_of(&(Float::with_val(prec, x * x) - 2u32));
        let width = Float::with_val(64, Float::i_exp(1, -100));
        let (lo, hi) = bisect(
            &mut f,
            &Float::with_val(prec, 1),
            &Float::with_val(prec, 2),
            &width,
            10_000,
        )
        .unwrap();
        let mid = (lo + hi) / 2u32;
        assert!((mid.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn brent_converges_superlinearly_on_cosine() {
        let prec = 512;
        let mut evals = 0u64;
        let mut f = |x: &Float| {
            evals += 1;
            Float::with_val(prec, x.cos_ref())
        };
        let width = Float::with_val(64, Float::i_exp(1, -480));
        let res = brent(
            &mut f,
            &Float::with_val(prec, 1),
            &Float::with_val(prec, 2),
            &width,
            10_000,
        )
        .unwrap();
        let half_pi = Float::with_val(prec, rug::float::Constant::Pi) / 2u32;
        assert!((res.root - half_pi).abs() < Float::with_val(64, Float::i_exp(1, -470)));
        assert!(evals < 60, "Brent took {evals} evaluations");
    }

    #[test]
    fn equal_signs_are_rejected() {
        let prec = 64;
        let mut f = |x: &Float| Float::with_val(prec, x * x) + 1u32;
        let width = Float::with_val(64, 1e-10);
        let err = brent(
            &mut f,
            &Float::with_val(prec, -1),
            &Float::with_val(prec, 1),
            &width,
            100,
        );
        assert!(matches!(err, Err(Error::NoSignChange { .. })));
    }
}
