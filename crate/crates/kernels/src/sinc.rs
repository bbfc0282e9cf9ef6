//! The cosh-series form of the symmetrized truncation: an alternating series
//! over `j` with factorially decaying coefficients built from exact integer
//! power sums,
//! `Phi_2n(t) = sum_{j>=1} (-1)^j 2 (2j+1) (pi^j / (j-1)!) S_n(2j) cosh(2t(j+1/4))`,
//! where `S_n(2j) = sum_{k<=n} k^(2j)`. On `(-omega_n, omega_n)` it agrees
//! with the direct symmetrized truncation of the same order, which the test
//! suite checks as a dual route.

use rug::float::Constant;
use rug::{Float, Integer};

use xilab_num::guard::{
    float_exponent, guard_verdict, realized_cancellation, MAX_GUARD_ATTEMPTS,
};
use xilab_num::PrecisionContext;

use crate::error::Result;

/// One pass of the alternating cosh-series at precision `p`; returns the sum
/// and the peak term exponent. Terms grow until `j ~ pi n^2 e^(2|t|)` and
/// then decay factorially; summation stops after two consecutive terms fall
/// below `2^-(p+16)` of the peak.
fn sinc_cosh_sum(n: u32, t: &Float, p: u32) -> Result<(Float, Option<i64>)> {
    let pi = Float::with_val(p, Constant::Pi);
    let peak_pos = std::f64::consts::PI
        * f64::from(n)
        * f64::from(n)
        * (2.0 * t.to_f64().abs()).exp();
    let j_min = peak_pos.ceil() as u64 + 2;
    let j_cap = 8 * (j_min + u64::from(p) + 64);

    // k^(2j) ladder, advanced exactly; S_n(2j) is their sum.
    let mut powers: Vec<Integer> = (1..=u64::from(n)).map(|k| Integer::from(k * k)).collect();
    // pi^j / (j-1)!, advanced by *pi/j each step.
    let mut pj = pi.clone();
    let mut sum = Float::new(p);
    let mut peak: Option<i64> = None;
    let mut small_streak = 0u32;
    for j in 1..=j_cap {
        let mut s = Integer::new();
        for v in &powers {
            s += v;
        }
        let cosh = (Float::with_val(p, t * (8 * j + 2)) / 4u32).cosh();
        let mut term = Float::with_val(p, &pj * &s) * cosh * (2 * (2 * j + 1));
        if j % 2 == 1 {
            term = -term;
        }
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
        if j >= j_min && small {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok((sum, peak));
            }
        } else {
            small_streak = 0;
        }
        pj *= &pi;
        pj /= u32::try_from(j).unwrap_or(u32::MAX);
        for (idx, v) in powers.iter_mut().enumerate() {
            let k = idx as u64 + 1;
            *v *= k * k;
        }
    }
    Err(xilab_num::Error::Nonconvergence {
        what: "cosh-series kernel",
        terms: j_cap,
        cap: j_cap,
    }
    .into())
}

/// Cosh-series kernel value to the context tolerance.
///
/// The alternating sum cancels down from peak terms of size
/// `~exp(pi n^2 e^(2|t|))` to an O(1) value, so the guard starts at that
/// closed form and is rechecked against the realized cancellation. Cost
/// grows like `n^2 e^(2|t|)` terms; the natural window is `|t| < omega_n`.
pub(crate) fn sinc_cosh_at(n: u32, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let peak_nats = std::f64::consts::PI
        * f64::from(n)
        * f64::from(n)
        * (2.0 * t.to_f64().abs()).exp();
    let mut guard = (peak_nats * std::f64::consts::LOG2_E).ceil() as u32 + 96;
    for attempt in 0..MAX_GUARD_ATTEMPTS {
        let p = ctx.prec().saturating_add(guard);
        let (sum, peak) = sinc_cosh_sum(n, t, p)?;
        match guard_verdict(guard, realized_cancellation(peak, float_exponent(&sum))) {
            Err(wider) if attempt + 1 < MAX_GUARD_ATTEMPTS => guard = wider,
            _ => return Ok(ctx.round(&sum)),
        }
    }
    unreachable!("guard retry loop returns on its final attempt")
}
