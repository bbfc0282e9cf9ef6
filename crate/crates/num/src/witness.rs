//! Remainder witnesses: (main term, actual, envelope, extracted epsilon).
//!
//! A bound proposition of the form `actual = main_term + eps * envelope`
//! with `|eps| < 1` is certified by computing eps from a high-precision
//! evaluation of `actual` and checking its magnitude. Where a proposition
//! constrains real and imaginary parts separately, the componentwise check
//! applies instead.

use rug::Float;

use crate::complex::Complex;

/// One remainder-envelope certificate.
#[derive(Debug, Clone)]
pub struct RemainderWitness {
    /// Predicted leading term.
    pub main_term: Complex,
    /// Actual value at the same point.
    pub actual: Complex,
    /// Positive envelope the remainder is claimed to stay inside.
    pub envelope: Float,
    /// Extracted remainder ratio `(actual - main_term) / envelope`.
    pub epsilon: Complex,
    /// Check `|Re eps| < 1` and `|Im eps| < 1` separately instead of `|eps| < 1`.
    pub split_components: bool,
}

impl RemainderWitness {
    /// Build a witness; `epsilon` is computed here.
    ///
    /// # Panics
    /// If `envelope <= 0` or is not finite.
    #[must_use]
    pub fn new(main_term: Complex, actual: Complex, envelope: Float, split_components: bool) -> Self {
        assert!(
            envelope.is_finite() && envelope.is_sign_positive() && !envelope.is_zero(),
            "envelope must be a positive finite real, got {envelope}"
        );
        let diff = actual.sub(&main_term);
        let inv = Float::with_val(envelope.prec().max(diff.prec()), envelope.recip_ref());
        let epsilon = diff.scale(&inv);
        Self {
            main_term,
            actual,
            envelope,
            epsilon,
            split_components,
        }
    }

    /// Witness passes iff the extracted epsilon is inside the unit disc
    /// (or the unit square, when components are constrained separately).
    #[must_use]
    pub fn pass(&self) -> bool {
        let one = Float::with_val(32, 1);
        if self.split_components {
            let re_ok = Float::with_val(self.epsilon.re.prec(), self.epsilon.re.abs_ref()) < one;
            let im_ok = Float::with_val(self.epsilon.im.prec(), self.epsilon.im.abs_ref()) < one;
            re_ok && im_ok
        } else {
            self.epsilon.abs() < one
        }
    }

    /// |epsilon| as a double, for reports.
    #[must_use]
    pub fn epsilon_abs_f64(&self) -> f64 {
        self.epsilon.abs().to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(Float::with_val(96, re), Float::with_val(96, im))
    }

    #[test]
    fn pass_iff_inside_unit_disc() {
        let w = RemainderWitness::new(c(1.0, 0.0), c(1.5, 0.0), Float::with_val(96, 1.0), false);
        assert!(w.pass());
        assert!((w.epsilon_abs_f64() - 0.5).abs() < 1e-12);
        let w = RemainderWitness::new(c(1.0, 0.0), c(2.5, 0.0), Float::with_val(96, 1.0), false);
        assert!(!w.pass());
    }

    #[test]
    fn split_components_use_unit_square() {
        // |eps| = sqrt(0.81 + 0.81) > 1 but both components are < 1.
        let w = RemainderWitness::new(c(0.0, 0.0), c(0.9, 0.9), Float::with_val(96, 1.0), true);
        assert!(w.pass());
        let joint = RemainderWitness::new(c(0.0, 0.0), c(0.9, 0.9), Float::with_val(96, 1.0), false);
        assert!(!joint.pass());
    }
}
