//! Uniform record for "bound vs. measured value" comparisons.

use std::fmt;

use rug::Float;

/// A named parameter attached to a [`BoundReport`].
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    /// Integer-valued parameter (orders, term counts, indices).
    Int(i64),
    /// Real-valued parameter (shape exponents, radii, tolerances).
    Real(Float),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Real(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<Float> for ParamValue {
    fn from(v: Float) -> Self {
        ParamValue::Real(v)
    }
}

/// Outcome of comparing a closed-form bound against an optional measurement.
///
/// `pass` is `true` exactly when no empirical value was recorded or the
/// empirical value does not exceed the bound; `margin` is `bound − empirical`
/// whenever an empirical value exists. Reports are immutable once built.
#[derive(Debug, Clone)]
pub struct BoundReport {
    /// Which bound this report certifies.
    pub bound_name: String,
    /// Named parameters the bound was evaluated at.
    pub params: Vec<(String, ParamValue)>,
    /// Value of the closed-form bound.
    pub bound_value: Float,
    /// Measured quantity the bound is supposed to dominate, if any.
    pub empirical_value: Option<Float>,
    /// `bound_value − empirical_value` when an empirical value exists.
    pub margin: Option<Float>,
    /// Whether the bound dominates the measurement (vacuously true without one).
    pub pass: bool,
}

impl BoundReport {
    /// Report carrying a bound value alone; passes vacuously.
    #[must_use]
    pub fn bound_only(
        bound_name: impl Into<String>,
        params: Vec<(String, ParamValue)>,
        bound_value: Float,
    ) -> Self {
        Self {
            bound_name: bound_name.into(),
            params,
            bound_value,
            empirical_value: None,
            margin: None,
            pass: true,
        }
    }

    /// Report comparing a bound against a measurement.
    #[must_use]
    pub fn with_empirical(
        bound_name: impl Into<String>,
        params: Vec<(String, ParamValue)>,
        bound_value: Float,
        empirical_value: Float,
    ) -> Self {
        let prec = bound_value.prec().max(empirical_value.prec());
        let margin = Float::with_val(prec, &bound_value - &empirical_value);
        let pass = empirical_value <= bound_value;
        Self {
            bound_name: bound_name.into(),
            params,
            bound_value,
            empirical_value: Some(empirical_value),
            margin: Some(margin),
            pass,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.bound_name)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, "): bound {:.6e}", self.bound_value.to_f64())?;
        if let Some(e) = &self.empirical_value {
            write!(f, ", empirical {:.6e}", e.to_f64())?;
        }
        write!(f, ", {}", if self.pass { "pass" } else { "FAIL" })
    }
}
