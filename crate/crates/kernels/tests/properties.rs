//! Structural invariants of the kernel layer: symmetry, positivity, dual
//! evaluation routes, reflection laws, and threshold validation.

use proptest::prelude::*;
use rug::Float;

use xilab_kernels::{
    alt_phi, alt_varphi, kernel_eval, omega, phi_exact, phi_term, phi_truncated, psi_n,
    shi_mu_ceil, smallest_positive_kernel_zero, theta4, Error, KernelSpec,
};
use xilab_num::PrecisionContext;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(256)
}

/// |got - want| against `mult * rel_tol * max(|want|, 1)`; the floor makes
/// the bound absolute near zeros of the compared quantity.
fn assert_close(got: &Float, want: &Float, mult: f64, label: &str) {
    let p = got.prec().max(want.prec());
    let scale = Float::with_val(p, want.abs_ref()).max(&Float::with_val(p, 1));
    let diff = Float::with_val(p, got - want).abs();
    let bound = Float::with_val(p, ctx().rel_tol() * mult) * scale;
    assert!(
        diff <= bound,
        "{label}: |diff| = {:.3e} exceeds {:.3e}",
        diff.to_f64(),
        bound.to_f64()
    );
}

#[test]
fn full_kernel_is_even_on_fixed_grid() {
    // Dual route: the negative side re-sums with a cancellation guard.
    let c = ctx();
    for t in ["0.5", "1.5", "3.0"] {
        let tf = c.parse(t);
        let pos = phi_exact(&tf, &c).unwrap();
        let neg = phi_exact(&Float::with_val(256, -&tf), &c).unwrap();
        let rel = (Float::with_val(256, &pos - &neg) / &pos).abs().to_f64();
        assert!(rel < 1e-70, "evenness residual {rel:.3e} at t = {t}");
    }
}

#[test]
fn full_kernel_is_positive_on_grid() {
    let c = ctx();
    for i in 0..=24 {
        let t = Float::with_val(256, i) / 8u32;
        let v = phi_exact(&t, &c).unwrap();
        assert!(v.is_sign_positive() && !v.is_zero(), "Phi({i}/8) <= 0");
    }
}

#[test]
fn leading_term_kernel_converges_toward_the_tail() {
    // The cosh replacement error shrinks as t grows.
    let c = ctx();
    let rel_at = |t: i64| {
        let tf = c.int(t);
        let full = phi_exact(&tf, &c).unwrap();
        let approx = kernel_eval(KernelSpec::Polya, &tf, &c).unwrap();
        ((Float::with_val(256, &approx - &full)) / full).abs()
    };
    assert!(rel_at(3) < rel_at(1), "tail deviation must shrink with t");
}

#[test]
fn smoothed_family_reproduces_full_kernel_at_origin() {
    // Dual route: closed-form mixing vs the full kernel sum.
    let c = ctx();
    let zero = c.int(0);
    let full = phi_exact(&zero, &c).unwrap();
    for (m, a) in [(7u32, 0.5f64), (6, 0.01), (9, 0.9)] {
        let got = kernel_eval(KernelSpec::Shi { m, a }, &zero, &c).unwrap();
        let rel = (Float::with_val(256, &got - &full) / &full).abs().to_f64();
        assert!(rel < 1e-70, "shi({m},{a}) at 0: residual {rel:.3e}");
    }
}

#[test]
fn threshold_ceilings_match_plot_orders() {
    let c = ctx();
    assert_eq!(shi_mu_ceil(0.5, &c).unwrap(), 6);
    assert_eq!(shi_mu_ceil(0.01, &c).unwrap(), 6);
    assert_eq!(shi_mu_ceil(0.9, &c).unwrap(), 9);
}

#[test]
fn smoothed_family_rejects_term_counts_below_threshold() {
    let c = ctx();
    assert!(KernelSpec::Shi { m: 7, a: 0.5 }.validate(&c).is_ok());
    assert!(KernelSpec::Shi { m: 6, a: 0.5 }.validate(&c).is_ok());
    let err = KernelSpec::Shi { m: 5, a: 0.5 }.validate(&c).unwrap_err();
    assert!(matches!(err, Error::Num(xilab_num::Error::Domain { .. })));
    let err = KernelSpec::Shi { m: 8, a: 0.9 }.validate(&c).unwrap_err();
    assert!(matches!(err, Error::Num(xilab_num::Error::Domain { .. })));
}

#[test]
fn cosh_series_matches_direct_truncation_on_window() {
    // Dual route: exact integer power sums + factorially decaying cosh
    // series vs the direct symmetrized sum, on (-omega_n, omega_n).
    let c = ctx();
    for n in [2u32, 3, 4] {
        let w = omega(n, &c);
        for frac in [-0.9, -0.5, -0.25, -0.05, 0.05, 0.25, 0.5, 0.9] {
            let t = Float::with_val(256, &w * &Float::with_val(256, frac));
            let series = kernel_eval(KernelSpec::SincCosh { n }, &t, &c).unwrap();
            let direct = phi_truncated(n, &t, &c);
            let diff = Float::with_val(256, &series - &direct).abs();
            let bound = Float::with_val(256, ctx().rel_tol() * 100u32)
                * Float::with_val(256, direct.abs_ref());
            assert!(
                diff <= bound,
                "sinc_cosh({n}) vs truncated({n}) at {frac} omega_n: diff {:.3e}",
                diff.to_f64()
            );
        }
    }
}

#[test]
fn mellin_side_substitution_reproduces_truncated_kernel() {
    // Phi_n(t) = 2 e^(t/2) Psi_n(e^(2t)).
    let c = ctx();
    let t = c.parse("0.3");
    let x = Float::with_val(256, &t * 2u32).exp();
    let via_mellin = Float::with_val(256, &t / 2u32).exp()
        * psi_n(&x, 3, &c).unwrap()
        * 2u32;
    let direct = phi_truncated(3, &t, &c);
    assert_close(&via_mellin, &direct, 10.0, "substitution at (n, t) = (3, 0.3)");
}

#[test]
fn smallest_zeros_sit_in_their_windows_for_all_probe_orders() {
    let c = ctx();
    for n in 2..=12 {
        let tau = smallest_positive_kernel_zero(n, &c).unwrap();
        let lo = omega(n + 1, &c);
        let hi = omega(n + 2, &c);
        assert!(tau > lo, "tau_{n} at or below omega_{}", n + 1);
        assert!(tau < hi, "tau_{n} at or above omega_{}", n + 2);
        let residual = phi_truncated(n, &tau, &c).abs().to_f64();
        assert!(residual < 1e-65, "Phi_{n}(tau_{n}) = {residual:.3e}");
    }
}

#[test]
fn zero_probe_rejects_orders_outside_range() {
    let c = ctx();
    assert!(smallest_positive_kernel_zero(1, &c).is_err());
    assert!(smallest_positive_kernel_zero(13, &c).is_err());
}

#[test]
fn alternating_series_matches_theta_product_on_fixed_grid() {
    // Dual route: direct alternating series vs the product form.
    let c = ctx();
    for x in ["0.5", "1", "2"] {
        let xf = c.parse(x);
        let series = alt_phi(&xf, &c).unwrap();
        let via_theta =
            Float::with_val(256, 1i32 - &theta4(&xf, &c).unwrap()) / 2u32;
        assert_close(&series, &via_theta, 10.0, &format!("theta link at x = {x}"));
    }
}

proptest! {
    #[test]
    fn truncated_kernel_is_even_bit_for_bit(n in 2u32..=9, t in 0.0f64..3.0) {
        let c = ctx();
        let tf = c.real(t);
        let neg = c.real(-t);
        prop_assert_eq!(phi_truncated(n, &tf, &c), phi_truncated(n, &neg, &c));
    }

    #[test]
    fn single_terms_are_positive_for_positive_arguments(k in 1u32..=20, t in 0.001f64..3.0) {
        let c = ctx();
        let v = phi_term(k, &c.real(t), &c);
        prop_assert!(v.is_sign_positive() && !v.is_zero());
    }

    #[test]
    fn full_kernel_is_even(t in 0.01f64..2.0) {
        let c = ctx();
        let pos = phi_exact(&c.real(t), &c).unwrap();
        let neg = phi_exact(&c.real(-t), &c).unwrap();
        let rel = (Float::with_val(256, &pos - &neg) / &pos).abs().to_f64();
        prop_assert!(rel < 1e-70, "residual {} at t = {}", rel, t);
    }

    #[test]
    fn mellin_truncation_obeys_reflection_law(x in 0.2f64..5.0, n in 2u32..=6) {
        // x^(1/4) Psi_n(x) = x^(-1/4) Psi_n(1/x).
        let c = ctx();
        let xf = c.real(x);
        let quarter = Float::with_val(256, xf.sqrt_ref()).sqrt();
        let lhs = Float::with_val(256, &quarter * &psi_n(&xf, n, &c).unwrap());
        let inv = Float::with_val(256, xf.recip_ref());
        let rhs = psi_n(&inv, n, &c).unwrap() / quarter;
        assert_close(&lhs, &rhs, 10.0, "reflection law");
    }

    #[test]
    fn mellin_substitution_holds_across_orders(t in -1.0f64..1.0, n in 2u32..=6) {
        let c = ctx();
        let tf = c.real(t);
        let x = Float::with_val(256, &tf * 2u32).exp();
        let via = Float::with_val(256, &tf / 2u32).exp() * psi_n(&x, n, &c).unwrap() * 2u32;
        let direct = phi_truncated(n, &tf, &c);
        assert_close(&via, &direct, 10.0, "substitution");
    }

    #[test]
    fn signed_series_is_positive(x in 0.05f64..20.0) {
        let c = ctx();
        let v = alt_varphi(&c.real(x), &c).unwrap();
        prop_assert!(v.is_sign_positive() && !v.is_zero(), "varphi({}) <= 0", x);
    }

    #[test]
    fn signed_series_obeys_reflection_law(x in 0.4f64..3.0) {
        // varphi(1/x) = sqrt(x) varphi(x); both sides are direct sums.
        let c = ctx();
        let xf = c.real(x);
        let inv = Float::with_val(256, xf.recip_ref());
        let lhs = alt_varphi(&inv, &c).unwrap();
        let rhs = Float::with_val(256, xf.sqrt_ref()) * alt_varphi(&xf, &c).unwrap();
        assert_close(&lhs, &rhs, 10.0, "signed-series reflection");
    }

    #[test]
    fn alternating_series_matches_theta_product(x in 0.3f64..3.0) {
        let c = ctx();
        let xf = c.real(x);
        let series = alt_phi(&xf, &c).unwrap();
        let via = Float::with_val(256, 1i32 - &theta4(&xf, &c).unwrap()) / 2u32;
        assert_close(&series, &via, 10.0, "theta link");
    }
}
