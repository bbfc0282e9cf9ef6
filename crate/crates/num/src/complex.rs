//! Rectangular complex arithmetic over arbitrary-precision floats.
//!
//! The backend provides real floats only; the handful of complex operations
//! the workspace needs (field arithmetic, conjugation, exp, sin, cos, sinc,
//! real-base powers) are implemented here directly. All operations produce
//! results at the widest precision among their operands and are
//! correctly-rounded compositions of correctly-rounded primitives, so they
//! are deterministic for fixed operand precisions.

use rug::Float;

/// Complex number as an (re, im) pair of arbitrary-precision floats.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    /// Real part.
    pub re: Float,
    /// Imaginary part.
    pub im: Float,
}

fn prec2(a: &Complex, b: &Complex) -> u32 {
    a.prec().max(b.prec())
}

impl Complex {
    /// Construct from parts.
    #[must_use]
    pub fn new(re: Float, im: Float) -> Self {
        Self { re, im }
    }

    /// Real value promoted to complex (zero imaginary part at same precision).
    #[must_use]
    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        Self { re, im }
    }

    /// Zero at the given precision.
    #[must_use]
    pub fn zero(prec: u32) -> Self {
        Self {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    /// One at the given precision.
    #[must_use]
    pub fn one(prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, 1),
            im: Float::new(prec),
        }
    }

    /// Working precision (widest of the two parts).
    #[must_use]
    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Both parts finite.
    #[must_use]
    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// True iff both parts are exactly zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate.
    #[must_use]
    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    /// Additive inverse.
    #[must_use]
    pub fn neg(&self) -> Self {
        Self {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    /// Sum.
    #[must_use]
    pub fn add(&self, rhs: &Self) -> Self {
        let p = prec2(self, rhs);
        Self {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }

    /// Difference.
    #[must_use]
    pub fn sub(&self, rhs: &Self) -> Self {
        let p = prec2(self, rhs);
        Self {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }

    /// Product.
    #[must_use]
    pub fn mul(&self, rhs: &Self) -> Self {
        let p = prec2(self, rhs);
        let mut re = Float::with_val(p, &self.re * &rhs.re);
        re -= Float::with_val(p, &self.im * &rhs.im);
        let mut im = Float::with_val(p, &self.re * &rhs.im);
        im += Float::with_val(p, &self.im * &rhs.re);
        Self { re, im }
    }

    /// Quotient.
    ///
    /// The workspace's exponent range (±2^62) makes the textbook formula
    /// safe: no intermediate here can overflow for representable inputs.
    #[must_use]
    pub fn div(&self, rhs: &Self) -> Self {
        let p = prec2(self, rhs);
        let mut den = Float::with_val(p, &rhs.re * &rhs.re);
        den += Float::with_val(p, &rhs.im * &rhs.im);
        let mut re = Float::with_val(p, &self.re * &rhs.re);
        re += Float::with_val(p, &self.im * &rhs.im);
        re /= &den;
        let mut im = Float::with_val(p, &self.im * &rhs.re);
        im -= Float::with_val(p, &self.re * &rhs.im);
        im /= &den;
        Self { re, im }
    }

    /// Multiplicative inverse.
    #[must_use]
    pub fn recip(&self) -> Self {
        Self::one(self.prec()).div(self)
    }

    /// Scale by a real factor.
    #[must_use]
    pub fn scale(&self, f: &Float) -> Self {
        let p = self.prec().max(f.prec());
        Self {
            re: Float::with_val(p, &self.re * f),
            im: Float::with_val(p, &self.im * f),
        }
    }

    /// Scale by a small integer.
    #[must_use]
    pub fn scale_i(&self, k: i64) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    /// Add a real value to the real part.
    #[must_use]
    pub fn add_real(&self, f: &Float) -> Self {
        let p = self.prec().max(f.prec());
        Self {
            re: Float::with_val(p, &self.re + f),
            im: Float::with_val(p, &self.im),
        }
    }

    /// Multiply by i (rotate by +90 degrees).
    #[must_use]
    pub fn mul_i(&self) -> Self {
        Self {
            re: Float::with_val(self.im.prec(), -&self.im),
            im: self.re.clone(),
        }
    }

    /// Squared modulus.
    #[must_use]
    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        let mut s = Float::with_val(p, &self.re * &self.re);
        s += Float::with_val(p, &self.im * &self.im);
        s
    }

    /// Modulus, computed as a true hypotenuse (no spurious overflow).
    #[must_use]
    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// Complex exponential.
    #[must_use]
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let ex = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        Self {
            re: Float::with_val(p, &ex * &c),
            im: Float::with_val(p, &ex * &s),
        }
    }

    /// Complex sine: sin(x+iy) = sin x cosh y + i cos x sinh y.
    #[must_use]
    pub fn sin(&self) -> Self {
        let p = self.prec();
        let (sx, cx) = Float::with_val(p, &self.re).sin_cos(Float::new(p));
        let (shy, chy) = Float::with_val(p, &self.im).sinh_cosh(Float::new(p));
        Self {
            re: Float::with_val(p, &sx * &chy),
            im: Float::with_val(p, &cx * &shy),
        }
    }

    /// Complex cosine: cos(x+iy) = cos x cosh y - i sin x sinh y.
    #[must_use]
    pub fn cos(&self) -> Self {
        let p = self.prec();
        let (sx, cx) = Float::with_val(p, &self.re).sin_cos(Float::new(p));
        let (shy, chy) = Float::with_val(p, &self.im).sinh_cosh(Float::new(p));
        Self {
            re: Float::with_val(p, &cx * &chy),
            im: -Float::with_val(p, &sx * &shy),
        }
    }

    /// Principal-branch logarithm: `ln|z| + i atan2(im, re)`.
    ///
    /// The modulus goes through a true hypotenuse, so no intermediate
    /// overflow; a real positive input stays exactly real.
    #[must_use]
    pub fn ln(&self) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, self.re.hypot_ref(&self.im)).ln(),
            im: Float::with_val(p, self.im.atan2_ref(&self.re)),
        }
    }

    /// Unnormalized sinc: sin(w)/w, with sinc(0) = 1.
    ///
    /// For |w| < 2^(-prec/2) the quotient is replaced by the even series
    /// 1 - w^2/6 + w^4/120, removing the 0/0 singularity without a branch
    /// visible to rounding (the next term is below one ulp there).
    #[must_use]
    pub fn sinc(&self) -> Self {
        let p = self.prec();
        let small = Float::with_val(32, Float::i_exp(1, -((p / 2) as i32)));
        let mag_hint = Float::with_val(32, self.re.abs_ref()) + Float::with_val(32, self.im.abs_ref());
        if mag_hint < small {
            let w2 = self.mul(self);
            let w4 = w2.mul(&w2);
            let mut out = Complex::one(p);
            out = out.sub(&w2.scale(&Float::with_val(p, 6).recip()));
            out = out.add(&w4.scale(&Float::with_val(p, 120).recip()));
            return out;
        }
        self.sin().div(self)
    }

    /// Distance |self - rhs|.
    #[must_use]
    pub fn dist(&self, rhs: &Self) -> Float {
        self.sub(rhs).abs()
    }

    /// Approximate double-precision image, for diagnostics only.
    #[must_use]
    pub fn to_f64_parts(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

/// `base^s` for a positive real base and complex exponent, via exp(s ln base).
///
/// # Panics
/// If `base <= 0` (the workspace never raises nonpositive reals to complex
/// powers; negative-base quotients are handled branch-free upstream).
#[must_use]
pub fn real_pow_complex(base: &Float, s: &Complex) -> Complex {
    assert!(
        base.is_finite() && base.is_sign_positive() && !base.is_zero(),
        "real_pow_complex requires base > 0, got {base}"
    );
    let p = base.prec().max(s.prec());
    let lnb = Float::with_val(p, base.ln_ref());
    s.scale(&lnb).exp()
}
