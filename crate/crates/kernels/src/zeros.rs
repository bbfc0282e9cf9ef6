//! Location of the smallest positive zero of a symmetrized truncation.

use rug::Float;

use xilab_num::roots::{brent, sign_of};
use xilab_num::PrecisionContext;

use crate::error::{Error, Result};
use crate::terms::{omega, phi_truncated};

/// Smallest `n` probed by [`smallest_positive_kernel_zero`].
pub const ZERO_PROBE_N_MIN: u32 = 2;

/// Largest `n` probed by [`smallest_positive_kernel_zero`].
pub const ZERO_PROBE_N_MAX: u32 = 12;

/// Least positive root `tau_n` of the order-`n` symmetrized truncation.
///
/// `Phi_n(0) > 0` and the observed first sign change sits inside
/// `(omega_(n+1), omega_(n+2))`, so the scan walks from 0 to `omega_(n+3)`
/// in steps of `(omega_(n+2) - omega_(n+1))/64` and hands the first
/// sign-changing step to bracketed refinement.
///
/// # Errors
/// Domain error for `n` outside `[2, 12]`; [`Error::ZeroNotFound`] if no
/// sign change occurs in `(0, omega_(n+3)]`.
pub fn smallest_positive_kernel_zero(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    if !(ZERO_PROBE_N_MIN..=ZERO_PROBE_N_MAX).contains(&n) {
        return Err(xilab_num::Error::Domain {
            what: "smallest_positive_kernel_zero",
            detail: format!(
                "probe range is {ZERO_PROBE_N_MIN} <= n <= {ZERO_PROBE_N_MAX}, got {n}"
            ),
        }
        .into());
    }
    let p = ctx.prec();
    let w1 = omega(n + 1, ctx);
    let w2 = omega(n + 2, ctx);
    let w3 = omega(n + 3, ctx);
    let step = Float::with_val(p, &w2 - &w1) / 64i32;

    let mut t_prev = ctx.zero();
    let mut s_prev = sign_of(&phi_truncated(n, &t_prev, ctx));
    while t_prev < w3 {
        let mut t_next = Float::with_val(p, &t_prev + &step);
        if t_next > w3 {
            t_next = w3.clone();
        }
        let s_next = sign_of(&phi_truncated(n, &t_next, ctx));
        if s_next == 0 {
            return Ok(t_next);
        }
        if s_next != s_prev {
            let mut f = |t: &Float| phi_truncated(n, t, ctx);
            let width = Float::with_val(64, ctx.rel_tol());
            let res = brent(&mut f, &t_prev, &t_next, &width, 10_000)?;
            return Ok(res.root);
        }
        t_prev = t_next;
        s_prev = s_next;
    }
    Err(Error::ZeroNotFound {
        n,
        upper: w3.to_f64(),
    })
}
