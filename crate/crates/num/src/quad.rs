//! Adaptive Gauss-Legendre quadrature over arbitrary-precision values.
//!
//! Panels are estimated by one Gauss rule and accepted when the two-half
//! refinement agrees within the panel's share of the absolute tolerance;
//! otherwise the halves are pushed. Node tables are computed by Newton
//! iteration on the Legendre recurrence and cached per (degree, precision).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::Float;

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Value types integrable by the adaptive engine.
pub trait PanelValue: Clone {
    /// Additive identity at the given precision.
    fn zero(prec: u32) -> Self;
    /// In-place accumulation.
    fn add_assign(&mut self, rhs: &Self);
    /// Difference, for error estimation.
    fn sub(&self, rhs: &Self) -> Self;
    /// Magnitude, for error estimation.
    fn abs(&self) -> Float;
    /// Scale by a real weight.
    fn scale(&self, f: &Float) -> Self;
}

impl PanelValue for Float {
    fn zero(prec: u32) -> Self {
        Float::new(prec)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub(&self, rhs: &Self) -> Self {
        Float::with_val(self.prec().max(rhs.prec()), self - rhs)
    }
    fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.abs_ref())
    }
    fn scale(&self, f: &Float) -> Self {
        Float::with_val(self.prec().max(f.prec()), self * f)
    }
}

impl PanelValue for Complex {
    fn zero(prec: u32) -> Self {
        Complex::zero(prec)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }
    fn sub(&self, rhs: &Self) -> Self {
        Complex::sub(self, rhs)
    }
    fn abs(&self) -> Float {
        Complex::abs(self)
    }
    fn scale(&self, f: &Float) -> Self {
        Complex::scale(self, f)
    }
}

/// Tuning knobs for [`integrate_adaptive`].
#[derive(Debug, Clone)]
pub struct QuadOptions {
    /// Gauss rule degree per panel.
    pub degree: usize,
    /// Hard cap on panels processed.
    pub max_panels: u64,
    /// Maximum bisection depth.
    pub max_depth: u32,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            degree: 24,
            max_panels: 200_000,
            max_depth: 64,
        }
    }
}

type NodeCache = Mutex<HashMap<(usize, u32), Arc<Vec<(Float, Float)>>>>;

fn node_cache() -> &'static NodeCache {
    static CACHE: OnceLock<NodeCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss-Legendre (node, weight) pairs on [-1, 1] at the given precision.
///
/// Nodes are the roots of the Legendre polynomial P_degree, refined by
/// Newton iteration from double-precision Chebyshev seeds; weights are
/// `2 / ((1 - x^2) P'_degree(x)^2)`. Results are cached.
///
/// # Panics
/// If `degree < 2`.
#[must_use]
pub fn gauss_legendre_nodes(degree: usize, prec: u32) -> Arc<Vec<(Float, Float)>> {
    assert!(degree >= 2, "gauss_legendre_nodes requires degree >= 2");
    if let Some(hit) = node_cache().lock().unwrap().get(&(degree, prec)) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(compute_nodes(degree, prec));
    node_cache()
        .lock()
        .unwrap()
        .entry((degree, prec))
        .or_insert(computed)
        .clone()
}

/// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence.
fn legendre_pair(n: usize, x: &Float, prec: u32) -> (Float, Float) {
    let mut p_prev = Float::with_val(prec, 1); // P_0
    let mut p = Float::with_val(prec, x); // P_1
    for k in 2..=n {
        // P_k = ((2k-1) x P_{k-1} - (k-1) P_{k-2}) / k
        let mut next = Float::with_val(prec, x * &p);
        next *= 2 * k as u32 - 1;
        next -= Float::with_val(prec, &p_prev * (k as u32 - 1));
        next /= k as u32;
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

/// `(P_n(x), P'_n(x))` via the recurrence and the derivative identity
/// `P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)`.
fn legendre_value_derivative(n: usize, x: &Float, prec: u32) -> (Float, Float) {
    let (p, p_prev) = legendre_pair(n, x, prec);
    let x2m1 = Float::with_val(prec, x * x) - 1u32;
    let mut dp = Float::with_val(prec, x * &p);
    dp -= &p_prev;
    dp *= n as u32;
    dp /= &x2m1;
    (p, dp)
}

fn compute_nodes(degree: usize, prec: u32) -> Vec<(Float, Float)> {
    let work = prec + 32;
    let half = degree.div_ceil(2);
    let mut out: Vec<(Float, Float)> = Vec::with_capacity(degree);
    let pi = std::f64::consts::PI;
    for i in 1..=half {
        let seed = (pi * (i as f64 - 0.25) / (degree as f64 + 0.5)).cos();
        let mut x = Float::with_val(work, seed);
        let mut last_step_exp = i32::MAX;
        for _ in 0..200 {
            let (p, dp) = legendre_value_derivative(degree, &x, work);
            let step = Float::with_val(work, &p / &dp);
            x -= &step;
            if step.is_zero() {
                break;
            }
            let step_exp = step.get_exp().unwrap_or(i32::MIN);
            // Converged: step below 2^-(work-8), or stalled at rounding noise.
            let stalled = step_exp >= last_step_exp && step_exp < -(work as i32) / 2;
            if step_exp < -(work as i32) + 8 || stalled {
                break;
            }
            last_step_exp = step_exp;
        }
        let (_, dp) = legendre_value_derivative(degree, &x, work);
        // w = 2 / ((1 - x^2) P'^2) = -2 / ((x^2 - 1) P'^2)
        let mut w = Float::with_val(work, &dp * &dp);
        w *= Float::with_val(work, &x * &x) - 1u32;
        let weight = Float::with_val(prec, -2 / w);
        let node = Float::with_val(prec, &x);
        out.push((node, weight));
    }
    // Mirror: nodes are symmetric about 0; odd degree has a node at 0 which
    // the seed i = half lands on (cos near 0), kept once.
    let mirrored: Vec<(Float, Float)> = out
        .iter()
        .take(degree - half)
        .map(|(n, w)| (Float::with_val(prec, -n), w.clone()))
        .collect();
    out.extend(mirrored);
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// Single fixed-degree Gauss-Legendre pass over [a, b].
pub fn gauss_fixed<V: PanelValue>(
    f: &mut impl FnMut(&Float) -> V,
    a: &Float,
    b: &Float,
    degree: usize,
    prec: u32,
) -> V {
    let nodes = gauss_legendre_nodes(degree, prec);
    let center = Float::with_val(prec, a + b) / 2u32;
    let halfw = Float::with_val(prec, b - a) / 2u32;
    let mut acc = V::zero(prec);
    for (x, w) in nodes.iter() {
        let t = Float::with_val(prec, &halfw * x) + &center;
        let v = f(&t).scale(w);
        acc.add_assign(&v);
    }
    acc.scale(&halfw)
}

/// Adaptive integral of `f` over [a, b] with absolute tolerance `abs_tol`.
///
/// # Errors
/// `QuadratureBudget` if the panel or depth caps are exhausted before every
/// panel meets its share of the tolerance.
///
/// # Panics
/// If `abs_tol <= 0`.
pub fn integrate_adaptive<V: PanelValue>(
    f: &mut impl FnMut(&Float) -> V,
    a: &Float,
    b: &Float,
    abs_tol: &Float,
    prec: u32,
    opts: &QuadOptions,
) -> Result<V> {
    assert!(
        abs_tol.is_finite() && abs_tol.is_sign_positive() && !abs_tol.is_zero(),
        "abs_tol must be positive"
    );
    let total_len = Float::with_val(prec, b - a);
    if total_len.is_zero() {
        return Ok(V::zero(prec));
    }
    let mut acc = V::zero(prec);
    let mut panels: u64 = 0;
    let mut deepest: u32 = 0;
    // Stack entries: (a, b, estimate over [a,b], depth).
    let whole = gauss_fixed(f, a, b, opts.degree, prec);
    let mut stack: Vec<(Float, Float, V, u32)> = vec![(a.clone(), b.clone(), whole, 0)];
    while let Some((pa, pb, parent, depth)) = stack.pop() {
        panels += 1;
        deepest = deepest.max(depth);
        if panels > opts.max_panels {
            return Err(Error::QuadratureBudget {
                panels,
                max_depth: deepest,
            });
        }
        let mid = Float::with_val(prec, &pa + &pb) / 2u32;
        let left = gauss_fixed(f, &pa, &mid, opts.degree, prec);
        let right = gauss_fixed(f, &mid, &pb, opts.degree, prec);
        let mut refined = left.clone();
        refined.add_assign(&right);
        let err = refined.sub(&parent).abs();
        let len = Float::with_val(prec, &pb - &pa);
        let share = Float::with_val(prec, abs_tol * &len);
        let share = share / &total_len;
        if err <= share {
            acc.add_assign(&refined);
        } else if depth >= opts.max_depth {
            return Err(Error::QuadratureBudget {
                panels,
                max_depth: depth,
            });
        } else {
            stack.push((pa, mid.clone(), left, depth + 1));
            stack.push((mid, pb, right, depth + 1));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_integrate_polynomials_exactly() {
        // Degree-24 Gauss is exact through degree 47; try x^10 on [-1, 1].
        use rug::ops::Pow;
        let prec = 192;
        let mut f = |x: &Float| Float::with_val(prec, x.pow(10u32));
        let got = gauss_fixed(&mut f, &Float::with_val(prec, -1), &Float::with_val(prec, 1), 24, prec);
        let want = Float::with_val(prec, 2) / 11u32;
        assert!((got - want).abs().to_f64() < 1e-50);
    }

    #[test]
    fn adaptive_matches_exp_integral() {
        let prec = 192;
        let tol = Float::with_val(64, Float::i_exp(1, -150));
        let mut f = |x: &Float| Float::with_val(prec, x.exp_ref());
        let got = integrate_adaptive(
            &mut f,
            &Float::new(prec),
            &Float::with_val(prec, 3),
            &tol,
            prec,
            &QuadOptions::default(),
        )
        .unwrap();
        let want = Float::with_val(prec, 3).exp() - 1u32;
        assert!((got - want).abs() < Float::with_val(64, Float::i_exp(1, -140)));
    }

    #[test]
    fn oscillatory_integrand_is_subdivided() {
        // integral_0^{2 pi} cos(40 x) dx = 0, forcing many panels.
        let prec = 128;
        let tol = Float::with_val(64, Float::i_exp(1, -90));
        let two_pi = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
        let mut f = |x: &Float| Float::with_val(prec, x * 40u32).cos();
        let got = integrate_adaptive(&mut f, &Float::new(prec), &two_pi, &tol, prec, &QuadOptions::default()).unwrap();
        assert!(got.abs().to_f64() < 1e-25);
    }

    #[test]
    fn budget_violation_is_reported() {
        let prec = 64;
        let tol = Float::with_val(64, Float::i_exp(1, -40));
        let opts = QuadOptions {
            degree: 4,
            max_panels: 3,
            max_depth: 64,
        };
        let mut f = |x: &Float| Float::with_val(prec, x * 70u32).cos();
        let err = integrate_adaptive(
            &mut f,
            &Float::new(prec),
            &Float::with_val(prec, 50),
            &tol,
            prec,
            &opts,
        );
        assert!(matches!(err, Err(Error::QuadratureBudget { .. })));
    }
}
