//! Frozen-value checks for every kernel variant.
//!
//! Expected digits were derived in an independent 60-digit environment
//! (direct series/product summation, bracketed bisection for roots) and are
//! frozen here; the library must reproduce them from its own evaluation
//! paths.

use rug::Float;

use xilab_kernels::{
    alt_phi, alt_varphi, kernel_eval, omega, phi_exact, phi_term, phi_truncated, psi_n,
    shi_coefficient, shi_solve_mu, smallest_positive_kernel_zero, theta4, KernelSpec,
};
use xilab_num::PrecisionContext;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(256)
}

fn assert_rel(got: &Float, want: &str, rel: f64, label: &str) {
    let p = got.prec().max(256);
    let want = Float::with_val(p, Float::parse(want).expect("literal parses"));
    assert!(!want.is_zero(), "{label}: oracle value must be nonzero");
    let err = (Float::with_val(p, got - &want) / &want).abs().to_f64().abs();
    assert!(
        err < rel,
        "{label}: relative error {err:.3e} exceeds {rel:.1e}"
    );
}

#[test]
fn first_term_at_origin_matches_frozen_digits_at_two_precisions() {
    let want = "0.891453942635989488606716055733170783052875675393108381719618";
    let narrow = phi_term(1, &Float::with_val(256, 0), &ctx());
    let wide = phi_term(1, &Float::with_val(512, 0), &PrecisionContext::new(512));
    assert_rel(&narrow, want, 1e-55, "phi_1(0) at 256 bits");
    assert_rel(&wide, want, 1e-55, "phi_1(0) at 512 bits");
    let drift = Float::with_val(512, &narrow - &wide).abs().to_f64();
    assert!(drift < 1e-70, "cross-precision drift {drift:.3e}");
}

#[test]
fn first_term_is_asymmetric_before_symmetrization() {
    let c = ctx();
    let plus = phi_term(1, &c.int(1), &c);
    let minus = phi_term(1, &c.int(-1), &c);
    let gap = Float::with_val(256, &plus - &minus).abs().to_f64();
    assert!(gap > 1e-3, "phi_1(1) and phi_1(-1) differ by only {gap:.3e}");
}

#[test]
fn full_kernel_matches_frozen_digits() {
    let c = ctx();
    let at0 = phi_exact(&c.int(0), &c).unwrap();
    assert_rel(
        &at0,
        "0.893393800934246888173969334109418226440848734189649949461704",
        1e-55,
        "Phi(0)",
    );
    let at1 = phi_exact(&c.int(1), &c).unwrap();
    assert_rel(
        &at1,
        "2.7556278812712675310471654866013962290921721918047384057771e-7",
        1e-55,
        "Phi(1)",
    );
    let at3 = phi_exact(&c.int(3), &c).unwrap();
    assert_rel(
        &at3,
        "1.071802196380130970131249478606053878595e-543",
        1e-35,
        "Phi(3)",
    );
}

#[test]
fn full_kernel_negative_side_reproduces_positive_side() {
    // Dual route: t = -3 forces the cancellation-guarded summation regime,
    // while t = 3 sums positive terms only.
    let c = ctx();
    let neg = phi_exact(&c.int(-3), &c).unwrap();
    let pos = phi_exact(&c.int(3), &c).unwrap();
    let rel = (Float::with_val(256, &neg - &pos) / &pos).abs().to_f64();
    assert!(rel < 1e-50, "evenness residual {rel:.3e}");
    assert_rel(
        &neg,
        "1.071802196380130970131249478606053878595e-543",
        1e-35,
        "Phi(-3)",
    );
}

#[test]
fn full_kernel_rejects_out_of_range_arguments () {
    let c = ctx();
    assert!(phi_exact(&c.real(-4.75), &c).is_err());
    assert!(phi_exact(&c.real(20.5), &c).is_err());
}

#[test]
fn truncated_kernel_matches_frozen_digits() {
    let c = ctx();
    let at = phi_truncated(3, &c.parse("0.3"), &c);
    assert_rel(
        &at,
        "0.366974288089151420130150097071857015944741590350740738259166",
        1e-55,
        "Phi_3(0.3)",
    );
    let t = omega(8, &c) * 3u32;
    let deep = phi_truncated(8, &t, &c);
    assert_rel(&deep, "-0.50832533", 1e-7, "Phi_8(3 omega_8)");
    assert!(deep.is_sign_negative(), "Phi_8 must be negative at 3 omega_8");
}

#[test]
fn historical_kernels_match_frozen_digits_at_one() {
    let c = ctx();
    let t = c.int(1);
    let cases: [(KernelSpec, &str, &str); 4] = [
        (
            KernelSpec::Polya,
            "9.62956842812186161585985955423795846098186129754071688913693e-8",
            "polya(1)",
        ),
        (
            KernelSpec::Polya2,
            "9.00321120206819318886803119058784272788453485241729404381931e-8",
            "polya2(1)",
        ),
        (
            KernelSpec::DeBruijn,
            "1.33657020087681830184583998647132472288992324987443715499256e-7",
            "debruijn(1)",
        ),
        (
            KernelSpec::Hejhal { m: 3 },
            "9.0032112020681931888680311906119585197036412370333954283627e-8",
            "hejhal(3)(1)",
        ),
    ];
    for (spec, want, label) in cases {
        let got = kernel_eval(spec, &t, &c).unwrap();
        assert_rel(&got, want, 1e-55, label);
    }
}

#[test]
fn smoothed_family_coefficient_and_value_match_frozen_digits() {
    let c = ctx();
    let coeff = shi_coefficient(7, 0.5, &c).unwrap();
    assert_rel(
        &coeff,
        "1.8506134017899928856260140801430999777858017173397984463002",
        1e-55,
        "c(7, 1/2)",
    );
    let got = kernel_eval(KernelSpec::Shi { m: 7, a: 0.5 }, &c.int(1), &c).unwrap();
    assert_rel(
        &got,
        "2.88461808198089201944698719735426919489502293828222612450539e-7",
        1e-55,
        "shi(7,0.5) at 1",
    );
}

#[test]
fn threshold_roots_match_frozen_digits() {
    let c = ctx();
    // Digits are for the exact IEEE-double parameter values, matching the
    // f64 parameter type of the API.
    let cases = [
        (0.5, "5.20049817415683624962979569669210317073145408"),
        (0.01, "5.05906900038541854006238528026042164437069362"),
        (0.9, "8.5315978955302549456553530395190865048355773"),
    ];
    for (a, want) in cases {
        let mu = shi_solve_mu(a, &c).unwrap();
        assert_rel(&mu, want, 1e-40, &format!("mu({a})"));
    }
}

#[test]
fn smallest_zeros_match_frozen_digits() {
    let c = ctx();
    let cases = [
        (
            2,
            "0.59354591563360460726612867427794206689538224474816588392766174604",
        ),
        (
            5,
            "0.91988263955698825213860378539596346435917897394139540799079633697",
        ),
        (
            8,
            "1.1158336110702286042982817544504790098806446988018190626566599599",
        ),
    ];
    for (n, want) in cases {
        let tau = smallest_positive_kernel_zero(n, &c).unwrap();
        assert_rel(&tau, want, 1e-55, &format!("tau_{n}"));
    }
}

#[test]
fn smallest_zero_of_order_two_sits_in_its_window() {
    let c = ctx();
    let tau = smallest_positive_kernel_zero(2, &c).unwrap();
    assert!(tau > omega(3, &c), "tau_2 must exceed (ln 3)/2");
    assert!(tau < omega(4, &c), "tau_2 must stay below (ln 4)/2");
}

#[test]
fn mellin_truncation_matches_frozen_digits() {
    let c = ctx();
    let got = psi_n(&c.int(2), 4, &c).unwrap();
    assert_rel(
        &got,
        "0.112246916274418612582461912679300664460221167565237936199516",
        1e-55,
        "Psi_4(2)",
    );
}

#[test]
fn alternating_kernels_match_frozen_digits() {
    let c = ctx();
    let phi1 = alt_phi(&c.int(1), &c).unwrap();
    assert_rel(
        &phi1,
        "0.0432104309219415892963787032993889551490180418032654832901517",
        1e-55,
        "alt_phi(1)",
    );
    let v1 = alt_varphi(&c.int(1), &c).unwrap();
    assert_rel(
        &v1,
        "0.370361732549462814119584532646110361166861062770859590459301",
        1e-55,
        "alt_varphi(1)",
    );
    let v2 = alt_varphi(&c.int(2), &c).unwrap();
    assert_rel(
        &v2,
        "0.204145415834597538528392589870229197066959951614415176596629",
        1e-55,
        "alt_varphi(2)",
    );
}

#[test]
fn theta_product_matches_frozen_digits() {
    let c = ctx();
    let got = theta4(&c.int(1), &c).unwrap();
    assert_rel(
        &got,
        "0.9135791381561168214072425934012220897019639163934690334196966",
        1e-55,
        "theta4 at x = 1",
    );
}
