//! Kernel evaluation strategies behind one object-safe trait.
//!
//! Each variant is its own type; [`KernelSpec::build`] validates the spec
//! and returns the matching strategy as a trait object, which is how the
//! command layer selects kernels by name at runtime.

use rug::Float;

use xilab_num::PrecisionContext;

use crate::error::Result;
use crate::historic::{debruijn_at, hejhal_at, polya2_at, polya_at, shi_at};
use crate::sinc::sinc_cosh_at;
use crate::spec::KernelSpec;
use crate::terms::{phi_exact, phi_truncated};

/// A kernel evaluation strategy.
///
/// Implementations are pure functions of `(t, ctx)` and are `Send + Sync`,
/// so one boxed kernel may serve many threads.
pub trait Kernel: Send + Sync {
    /// The spec this kernel was built from.
    fn spec(&self) -> KernelSpec;

    /// Canonical identifier, e.g. `truncated(3)` or `shi(7,0.5)`.
    fn id(&self) -> String {
        self.spec().to_string()
    }

    /// Kernel value at `t` within the context tolerance. Near an isolated
    /// zero of the kernel the guarantee is absolute, scaled by the largest
    /// summand, which suffices for sign queries.
    ///
    /// # Errors
    /// Domain errors for arguments outside the variant's documented range.
    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float>;
}

/// Full kernel sum.
pub struct ExactKernel;

impl Kernel for ExactKernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::Exact
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        phi_exact(t, ctx)
    }
}

/// Symmetrized truncation of order `n`.
pub struct TruncatedKernel {
    n: u32,
}

impl Kernel for TruncatedKernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::Truncated { n: self.n }
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        Ok(phi_truncated(self.n, t, ctx))
    }
}

/// Leading-term cosh kernel.
pub struct PolyaKernel;

impl Kernel for PolyaKernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::Polya
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        Ok(ctx.round(&polya_at(t, ctx.prec() + 32)))
    }
}

/// Two-cosh kernel.
pub struct Polya2Kernel;

impl Kernel for Polya2Kernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::Polya2
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        Ok(ctx.round(&polya2_at(t, ctx.prec() + 32)))
    }
}

/// Three-cosh kernel.
pub struct DeBruijnKernel;

impl Kernel for DeBruijnKernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::DeBruijn
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        Ok(ctx.round(&debruijn_at(t, ctx.prec() + 32)))
    }
}

/// m-term cosh family.
pub struct HejhalKernel {
    m: u32,
}

impl Kernel for HejhalKernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::Hejhal { m: self.m }
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        Ok(ctx.round(&hejhal_at(self.m, t, ctx.prec() + 32)))
    }
}

/// Smoothed family with threshold-validated term count.
pub struct ShiKernel {
    m: u32,
    a: f64,
}

impl Kernel for ShiKernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::Shi {
            m: self.m,
            a: self.a,
        }
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        Ok(ctx.round(&shi_at(self.m, self.a, t, ctx.prec() + 64)?))
    }
}

/// Cosh-series form of the symmetrized truncation.
pub struct SincCoshKernel {
    n: u32,
}

impl Kernel for SincCoshKernel {
    fn spec(&self) -> KernelSpec {
        KernelSpec::SincCosh { n: self.n }
    }

    fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
        sinc_cosh_at(self.n, t, ctx)
    }
}

impl KernelSpec {
    /// Validate the spec and return its evaluation strategy.
    ///
    /// # Errors
    /// Whatever [`KernelSpec::validate`] reports.
    pub fn build(self, ctx: &PrecisionContext) -> Result<Box<dyn Kernel>> {
        self.validate(ctx)?;
        Ok(match self {
            Self::Exact => Box::new(ExactKernel),
            Self::Truncated { n } => Box::new(TruncatedKernel { n }),
            Self::Polya => Box::new(PolyaKernel),
            Self::Polya2 => Box::new(Polya2Kernel),
            Self::DeBruijn => Box::new(DeBruijnKernel),
            Self::Hejhal { m } => Box::new(HejhalKernel { m }),
            Self::Shi { m, a } => Box::new(ShiKernel { m, a }),
            Self::SincCosh { n } => Box::new(SincCoshKernel { n }),
        })
    }
}

/// Validate, build, and evaluate in one call.
///
/// # Errors
/// Spec validation failures and evaluation domain errors.
pub fn kernel_eval(spec: KernelSpec, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    spec.build(ctx)?.eval(t, ctx)
}
