//! Structural invariants of the envelopes and thresholds: monotonicity,
//! inverse round-trips, range confinement, and precision stability.

use proptest::prelude::*;
use rug::ops::Pow;
use rug::Float;
use xilab_bounds::{lambda_bound, m_of, nu0_ceil, nu0_threshold, rho_bound, sigma_of};
use xilab_num::PrecisionContext;

#[test]
fn majorant_strictly_decreases_from_order_two_on() {
    let c = PrecisionContext::new(192);
    let mut prev = lambda_bound(2, &c).unwrap();
    for n in 3..=60 {
        let cur = lambda_bound(n, &c).unwrap();
        assert!(
            cur < prev,
            "majorant failed to decrease from order {} to {}",
            n - 1,
            n
        );
        prev = cur;
    }
}

#[test]
fn tail_envelope_strictly_decreases_in_term_count() {
    let c = PrecisionContext::new(192);
    let mut prev = rho_bound(71, 2, &c).unwrap();
    for m in 72..=400 {
        let cur = rho_bound(m, 2, &c).unwrap();
        assert!(
            cur < prev,
            "tail envelope failed to decrease from {} to {} terms",
            m - 1,
            m
        );
        prev = cur;
    }
}

/// Forward majorant evaluated at a real-valued order, used to verify the
/// Lambert-branch inverse below without going through the same code path.
fn majorant_at_real_order(nu: &Float, c: &PrecisionContext) -> Float {
    let pin = c.pi() * nu;
    let decay = (-pin.clone()).exp();
    c.powi(&pin, 6) * 72u32 * decay
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_threshold_inverts_the_majorant(digit in 1u32..=9, exp in -80i32..=-1) {
        let c = PrecisionContext::new(256);
        let eps = c.int(i64::from(digit)) * Float::with_val(256, 10u32).pow(exp);
        // Keep strictly inside (0, 1).
        prop_assume!(eps < 1u32);
        let nu = nu0_threshold(&eps, &c).unwrap();
        let back = majorant_at_real_order(&nu, &c);
        let rel = Float::with_val(256, &back - &eps).abs() / eps;
        prop_assert!(
            rel < c.parse("1e-60"),
            "round-trip relative error {rel:e} at eps = {digit}e{exp}"
        );
        // The inverse must land past the majorant's hump at 6/pi.
        prop_assert!(nu > c.int(6) / c.pi());
    }

    #[test]
    fn slowly_varying_factor_exceeds_one_everywhere(digit in 1u32..=9, exp in -6i32..=6) {
        let c = PrecisionContext::new(192);
        let x = c.int(i64::from(digit)) * Float::with_val(192, 10u32).pow(exp);
        let s = sigma_of(&x, &c).unwrap();
        prop_assert!(s > 1u32, "factor {s} fell to or below 1 at x = {x}");
    }

    #[test]
    fn slowly_varying_factor_below_asymptote_on_small_arguments(frac in 1u32..=999) {
        // The upper band e/(e-1) holds on (0, 1/e).
        let c = PrecisionContext::new(192);
        let x = c.int(i64::from(frac)) / (c.e() * 1000u32);
        let s = sigma_of(&x, &c).unwrap();
        let upper = c.e() / (c.e() - 1u32);
        prop_assert!(s < upper, "factor {s} reached the asymptote at x = {x}");
    }

    #[test]
    fn order_ceiling_is_precision_stable(digit in 1u32..=9, exp in -60i32..=-2) {
        let lo = PrecisionContext::new(128);
        let hi = PrecisionContext::new(384);
        let eps_lo = lo.int(i64::from(digit)) * Float::with_val(128, 10u32).pow(exp);
        let eps_hi = hi.int(i64::from(digit)) * Float::with_val(384, 10u32).pow(exp);
        prop_assume!(eps_lo < 1u32);
        let a = nu0_ceil(&eps_lo, &lo).unwrap();
        let b = nu0_ceil(&eps_hi, &hi).unwrap();
        prop_assert_eq!(a, b, "ceiling changed between 128 and 384 bits");
    }

    #[test]
    fn prescribed_term_count_matches_wide_arithmetic(l in 9u32..=100, n in 2u32..=1000) {
        let wide = 2u128 + u128::from(l) * u128::from(n).pow(3);
        prop_assert_eq!(u128::from(m_of(l, n).unwrap()), wide);
    }
}
