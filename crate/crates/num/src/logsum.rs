//! Signed log-magnitude scalars and exponent-balanced accumulation.
//!
//! Coefficient ladders reach magnitudes like exp(pi n^3) with indices in the
//! tens of thousands; storing (log-magnitude, sign) pairs and accumulating
//! sums after factoring out the largest term keeps every intermediate within
//! a few ulps of unit scale regardless of the dynamic range.

use rug::Float;

/// A real number stored as sign * exp(log_abs).
///
/// `sign == 0` encodes exact zero; `log_abs` is then -infinity by convention.
#[derive(Debug, Clone, PartialEq)]
pub struct LogMag {
    /// Natural log of the magnitude.
    pub log_abs: Float,
    /// -1, 0, or +1.
    pub sign: i8,
}

impl LogMag {
    /// Exact zero at the given precision.
    #[must_use]
    pub fn zero(prec: u32) -> Self {
        let mut l = Float::new(prec);
        l.assign(rug::float::Special::NegInfinity);
        Self { log_abs: l, sign: 0 }
    }

    /// From explicit parts.
    ///
    /// # Panics
    /// If `sign` is not in {-1, 0, 1}.
    #[must_use]
    pub fn new(log_abs: Float, sign: i8) -> Self {
        assert!((-1..=1).contains(&sign), "sign must be -1, 0, or 1");
        if sign == 0 {
            return Self::zero(log_abs.prec());
        }
        Self { log_abs, sign }
    }

    /// Encode an ordinary float.
    #[must_use]
    pub fn from_float(v: &Float) -> Self {
        if v.is_zero() {
            return Self::zero(v.prec());
        }
        let sign = if v.is_sign_positive() { 1 } else { -1 };
        Self {
            log_abs: Float::with_val(v.prec(), v.abs_ref()).ln(),
            sign,
        }
    }

    /// Decode to an ordinary float at the given precision.
    #[must_use]
    pub fn to_float(&self, prec: u32) -> Float {
        if self.sign == 0 {
            return Float::new(prec);
        }
        let mut v = Float::with_val(prec, self.log_abs.exp_ref());
        if self.sign < 0 {
            v = -v;
        }
        v
    }

    /// Product: logs add, signs multiply.
    #[must_use]
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::zero(self.log_abs.prec().max(rhs.log_abs.prec()));
        }
        let p = self.log_abs.prec().max(rhs.log_abs.prec());
        Self {
            log_abs: Float::with_val(p, &self.log_abs + &rhs.log_abs),
            sign: self.sign * rhs.sign,
        }
    }

    /// Quotient: logs subtract, signs multiply.
    ///
    /// # Panics
    /// If `rhs` is zero.
    #[must_use]
    pub fn div(&self, rhs: &Self) -> Self {
        assert!(rhs.sign != 0, "division of LogMag by exact zero");
        if self.sign == 0 {
            return Self::zero(self.log_abs.prec().max(rhs.log_abs.prec()));
        }
        let p = self.log_abs.prec().max(rhs.log_abs.prec());
        Self {
            log_abs: Float::with_val(p, &self.log_abs - &rhs.log_abs),
            sign: self.sign * rhs.sign,
        }
    }

    /// Negation.
    #[must_use]
    pub fn neg(&self) -> Self {
        Self {
            log_abs: self.log_abs.clone(),
            sign: -self.sign,
        }
    }

    /// Compare magnitudes (ignores sign). Zero is smaller than any nonzero.
    #[must_use]
    pub fn abs_gt(&self, rhs: &Self) -> bool {
        match (self.sign, rhs.sign) {
            (0, _) => false,
            (_, 0) => true,
            _ => self.log_abs > rhs.log_abs,
        }
    }
}

use rug::Assign;

/// Exponent-balanced signed sum of log-magnitude terms.
///
/// Factors out the largest magnitude L, accumulates sum_i sign_i
/// exp(log_i - L) in ordinary arithmetic (every addend has magnitude <= 1),
/// and re-encodes. Cancellation in the balanced accumulator is the true
/// cancellation of the sum, bounded by the working precision `prec`.
#[must_use]
pub fn sum_balanced(terms: &[LogMag], prec: u32) -> LogMag {
    let mut max_log: Option<&Float> = None;
    for t in terms {
        if t.sign != 0 && max_log.is_none_or(|m| t.log_abs > *m) {
            max_log = Some(&t.log_abs);
        }
    }
    let Some(max_log) = max_log else {
        return LogMag::zero(prec);
    };
    let mut acc = Float::new(prec);
    let mut scratch = Float::new(prec);
    for t in terms {
        if t.sign == 0 {
            continue;
        }
        scratch.assign(&t.log_abs - max_log);
        scratch.exp_mut();
        if t.sign > 0 {
            acc += &scratch;
        } else {
            acc -= &scratch;
        }
    }
    if acc.is_zero() {
        return LogMag::zero(prec);
    }
    let sign = if acc.is_sign_positive() { 1 } else { -1 };
    let log_abs = Float::with_val(prec, max_log + Float::with_val(prec, acc.abs_ref()).ln());
    LogMag { log_abs, sign }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_value_and_sign() {
        let v = Float::with_val(128, -123.456);
        let lm = LogMag::from_float(&v);
        assert_eq!(lm.sign, -1);
        assert!((lm.to_float(128) - v).abs().to_f64() < 1e-30);
    }

    #[test]
    fn balanced_sum_recovers_small_residual_within_precision() {
        // exp(50) + exp(-50) - exp(50) = exp(-50): the residual sits
        // 144 bits below the peak, well inside the 512-bit accumulator.
        let p = 512;
        let big = LogMag::new(Float::with_val(p, 50), 1);
        let tiny = LogMag::new(Float::with_val(p, -50), 1);
        let neg_big = big.neg();
        let s = sum_balanced(&[big, tiny, neg_big], p);
        assert_eq!(s.sign, 1);
        assert!((s.log_abs.to_f64() + 50.0).abs() < 1e-40);
    }

    #[test]
    fn exact_cancellation_yields_zero() {
        let p = 128;
        let a = LogMag::new(Float::with_val(p, 3), 1);
        let b = a.neg();
        let s = sum_balanced(&[a, b], p);
        assert_eq!(s.sign, 0);
        assert!(s.to_float(p).is_zero());
    }
}
