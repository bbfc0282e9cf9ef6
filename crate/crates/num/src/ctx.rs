//! Working-precision context threaded through every numeric operation.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

/// Minimum mantissa width accepted by [`PrecisionContext::new`].
pub const MIN_MANTISSA_BITS: u32 = 64;

/// Exponent width guaranteed by the backend (MPFR default exponent range).
///
/// All magnitudes in this workspace stay far below 2^(2^30), so the backend
/// range is never the binding constraint; the field exists so callers can
/// state their requirement and have it validated.
pub const BACKEND_EXPONENT_BITS: u32 = 62;

/// Working mantissa width, exponent-range requirement, and tolerance policy.
///
/// Every numeric operation in the workspace takes a `&PrecisionContext` and
/// returns values whose documented relative error is at most [`rel_tol`].
/// Contexts are immutable after construction; all operations are pure
/// functions of their inputs and the context, so values may be shared freely
/// across threads.
///
/// [`rel_tol`]: PrecisionContext::rel_tol
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionContext {
    mantissa_bits: u32,
    exponent_bits: u32,
    rel_tol: Float,
}

impl PrecisionContext {
    /// Context with the given mantissa width and the default tolerance
    /// `rel_tol = 2^(16 - mantissa_bits)`.
    ///
    /// # Panics
    /// If `mantissa_bits < 64`.
    #[must_use]
    pub fn new(mantissa_bits: u32) -> Self {
        assert!(
            mantissa_bits >= MIN_MANTISSA_BITS,
            "mantissa_bits must be at least {MIN_MANTISSA_BITS}, got {mantissa_bits}"
        );
        let rel_tol = Float::with_val(64, Float::i_exp(1, 16 - mantissa_bits as i32));
        Self {
            mantissa_bits,
            exponent_bits: BACKEND_EXPONENT_BITS,
            rel_tol,
        }
    }

    /// Context sized for ladder work at a given `n`.
    ///
    /// Magnitudes in the coefficient ladders reach `exp(pi * n^3)` and the
    /// paired differences cancel roughly a third of the leading digits, so
    /// the default width is `max(128, ceil(1.5 * pi * n^3 / ln 2) + 256)`.
    #[must_use]
    pub fn auto_for_n(n: u32) -> Self {
        let n3 = f64::from(n).powi(3);
        let scaled = (1.5 * std::f64::consts::PI * n3 / std::f64::consts::LN_2).ceil();
        // f64 ceil is exact here: scaled stays far below 2^52 for any n that
        // produces a feasible ladder.
        let bits = (scaled as u32).saturating_add(256).max(128).max(MIN_MANTISSA_BITS);
        Self::new(bits)
    }

    /// Same mantissa width, custom tolerance.
    ///
    /// # Panics
    /// If `rel_tol <= 0` or is not finite.
    #[must_use]
    pub fn with_rel_tol(mut self, rel_tol: Float) -> Self {
        assert!(
            rel_tol.is_finite() && rel_tol.is_sign_positive() && !rel_tol.is_zero(),
            "rel_tol must be a finite positive number"
        );
        self.rel_tol = rel_tol;
        self
    }

    /// Context with `extra` additional mantissa bits and the same `rel_tol`.
    ///
    /// Used internally to add guard bits around cancellation-heavy series;
    /// results are rounded back to the caller's width before returning.
    #[must_use]
    pub fn promote(&self, extra: u32) -> Self {
        Self {
            mantissa_bits: self.mantissa_bits.saturating_add(extra),
            exponent_bits: self.exponent_bits,
            rel_tol: self.rel_tol.clone(),
        }
    }

    /// Context with doubled mantissa width and the correspondingly tighter
    /// default tolerance. Used by self-validation tests.
    #[must_use]
    pub fn doubled(&self) -> Self {
        Self::new(self.mantissa_bits * 2)
    }

    /// Mantissa width in bits.
    #[must_use]
    pub fn prec(&self) -> u32 {
        self.mantissa_bits
    }

    /// Exponent width guaranteed by the backend.
    #[must_use]
    pub fn exponent_bits(&self) -> u32 {
        self.exponent_bits
    }

    /// Relative tolerance every operation documents against.
    #[must_use]
    pub fn rel_tol(&self) -> &Float {
        &self.rel_tol
    }

    // ----- value constructors ------------------------------------------------

    /// Fresh zero at context precision.
    #[must_use]
    pub fn zero(&self) -> Float {
        Float::new(self.mantissa_bits)
    }

    /// Integer value at context precision.
    #[must_use]
    pub fn int(&self, v: i64) -> Float {
        Float::with_val(self.mantissa_bits, v)
    }

    /// `f64` value at context precision (exact: every f64 is representable).
    #[must_use]
    pub fn real(&self, v: f64) -> Float {
        Float::with_val(self.mantissa_bits, v)
    }

    /// Parse a decimal literal at context precision.
    ///
    /// # Panics
    /// If `s` is not a valid decimal float literal (programmer error: this
    /// is used for in-source constants only).
    #[must_use]
    pub fn parse(&self, s: &str) -> Float {
        Float::with_val(
            self.mantissa_bits,
            Float::parse(s).unwrap_or_else(|e| panic!("bad float literal {s:?}: {e}")),
        )
    }

    /// Pi at context precision.
    #[must_use]
    pub fn pi(&self) -> Float {
        Float::with_val(self.mantissa_bits, Constant::Pi)
    }

    /// ln 2 at context precision.
    #[must_use]
    pub fn ln2(&self) -> Float {
        Float::with_val(self.mantissa_bits, Constant::Log2)
    }

    /// Euler's number e at context precision.
    #[must_use]
    pub fn e(&self) -> Float {
        self.int(1).exp()
    }

    /// `2^k` at context precision.
    #[must_use]
    pub fn two_pow(&self, k: i32) -> Float {
        Float::with_val(self.mantissa_bits, Float::i_exp(1, k))
    }

    /// `base^k` for a real base at context precision.
    #[must_use]
    pub fn powi(&self, base: &Float, k: i32) -> Float {
        Float::with_val(self.mantissa_bits, base.pow(k))
    }

    /// Round an existing value to context precision.
    #[must_use]
    pub fn round(&self, v: &Float) -> Float {
        Float::with_val(self.mantissa_bits, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_rel_tol_tracks_mantissa() {
        let ctx = PrecisionContext::new(128);
        let expected = Float::with_val(64, Float::i_exp(1, -112));
        assert_eq!(*ctx.rel_tol(), expected);
    }

    #[test]
    fn auto_scaling_grows_with_n() {
        // n = 2: ceil(1.5*pi*8/ln2) = 55, plus 256 guard bits.
        assert_eq!(PrecisionContext::auto_for_n(2).prec(), 311);
        let n9 = PrecisionContext::auto_for_n(9).prec();
        assert!(n9 > 4900 && n9 < 5600, "n=9 width {n9} out of expected band");
    }

    #[test]
    #[should_panic(expected = "at least 64")]
    fn rejects_narrow_mantissa() {
        let _ = PrecisionContext::new(32);
    }

    #[test]
    fn round_trips_decimal_literals() {
        let ctx = PrecisionContext::new(96);
        let v = ctx.parse("0.4971207781886217");
        assert!((v.to_f64() - 0.4971207781886217).abs() < 1e-16);
    }
}
