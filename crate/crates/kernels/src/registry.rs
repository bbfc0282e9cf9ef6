//! Name-keyed registry of kernel variants.
//!
//! The command layer looks kernels up by name with numeric arguments (or
//! parses a compact `name(arg,...)` form); the registry produces validated
//! [`KernelSpec`] values and documents each variant's usage.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::spec::KernelSpec;

/// One registered kernel variant.
pub struct KernelEntry {
    usage: &'static str,
    summary: &'static str,
    build: fn(&[f64]) -> Result<KernelSpec>,
}

impl KernelEntry {
    /// Argument signature, e.g. `shi(m,a)`.
    #[must_use]
    pub fn usage(&self) -> &'static str {
        self.usage
    }

    /// One-line description of the variant.
    #[must_use]
    pub fn summary(&self) -> &'static str {
        self.summary
    }
}

/// Registry of all kernel variants, keyed by name. Iteration order is the
/// name order (BTreeMap), so listings are deterministic.
pub struct KernelRegistry {
    entries: BTreeMap<&'static str, KernelEntry>,
}

impl KernelRegistry {
    /// The standard registry with all eight variants.
    #[must_use]
    pub fn standard() -> Self {
        let mut entries = BTreeMap::new();
        let mut add = |name: &'static str,
                       usage: &'static str,
                       summary: &'static str,
                       build: fn(&[f64]) -> Result<KernelSpec>| {
            entries.insert(
                name,
                KernelEntry {
                    usage,
                    summary,
                    build,
                },
            );
        };
        add("exact", "exact", "full kernel sum", |args| {
            no_args("exact", args)?;
            Ok(KernelSpec::Exact)
        });
        add(
            "truncated",
            "truncated(n)",
            "symmetrized truncation of order n >= 2",
            |args| {
                let n = one_int("truncated", "order n must be an integer >= 2", 2, args)?;
                Ok(KernelSpec::Truncated { n })
            },
        );
        add("polya", "polya", "leading-term cosh kernel", |args| {
            no_args("polya", args)?;
            Ok(KernelSpec::Polya)
        });
        add("polya2", "polya2", "two-cosh kernel", |args| {
            no_args("polya2", args)?;
            Ok(KernelSpec::Polya2)
        });
        add("debruijn", "debruijn", "three-cosh kernel", |args| {
            no_args("debruijn", args)?;
            Ok(KernelSpec::DeBruijn)
        });
        add(
            "hejhal",
            "hejhal(m)",
            "m-term cosh family, m >= 1",
            |args| {
                let m = one_int("hejhal", "term count m must be an integer >= 1", 1, args)?;
                Ok(KernelSpec::Hejhal { m })
            },
        );
        add(
            "shi",
            "shi(m,a)",
            "smoothed family; needs m >= ceil(mu(a)), a in (0,1)",
            |args| {
                if args.len() != 2 {
                    return Err(Error::BadArity {
                        name: "shi",
                        expected: "2 arguments (m, a)",
                        got: args.len(),
                    });
                }
                let m = int_arg("shi", "term count m must be an integer >= 1", 1, args[0])?;
                let a = args[1];
                if !(a.is_finite() && a > 0.0 && a < 1.0) {
                    return Err(Error::BadArgument {
                        name: "shi",
                        requirement: "smoothing parameter a must lie in (0, 1)",
                        got: a,
                    });
                }
                Ok(KernelSpec::Shi { m, a })
            },
        );
        add(
            "sinc_cosh",
            "sinc_cosh(n)",
            "cosh-series form of the order-n truncation, n >= 2",
            |args| {
                let n = one_int("sinc_cosh", "order n must be an integer >= 2", 2, args)?;
                Ok(KernelSpec::SincCosh { n })
            },
        );
        Self { entries }
    }

    /// Registered names in deterministic (sorted) order.
    #[must_use]
    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    /// Look up a variant's registry entry.
    #[must_use]
    pub fn entry(&self, name: &str) -> Option<&KernelEntry> {
        self.entries.get(name)
    }

    /// Build a spec from a name and numeric arguments.
    ///
    /// # Errors
    /// `UnknownKernel`, `BadArity`, or `BadArgument`.
    pub fn spec_from_parts(&self, name: &str, args: &[f64]) -> Result<KernelSpec> {
        let entry = self.entries.get(name).ok_or_else(|| Error::UnknownKernel {
            name: name.to_owned(),
            known: self.names().join(", "),
        })?;
        (entry.build)(args)
    }

    /// Parse a compact spec, either `name` or `name(arg1,arg2,...)`.
    ///
    /// # Errors
    /// `BadSpec` for malformed text, plus everything
    /// [`KernelRegistry::spec_from_parts`] reports.
    pub fn parse_spec(&self, text: &str) -> Result<KernelSpec> {
        let text = text.trim();
        let (name, args) = match text.find('(') {
            None => (text, Vec::new()),
            Some(open) => {
                let inner = text[open..]
                    .strip_prefix('(')
                    .and_then(|rest| rest.strip_suffix(')'))
                    .ok_or_else(|| Error::BadSpec {
                        text: text.to_owned(),
                        detail: "expected name(arg,...) with balanced parentheses",
                    })?;
                let mut args = Vec::new();
                for part in inner.split(',') {
                    let v: f64 = part.trim().parse().map_err(|_| Error::BadSpec {
                        text: text.to_owned(),
                        detail: "arguments must be decimal numbers",
                    })?;
                    args.push(v);
                }
                (&text[..open], args)
            }
        };
        self.spec_from_parts(name.trim(), &args)
    }
}

fn no_args(name: &'static str, args: &[f64]) -> Result<()> {
    if args.is_empty() {
        Ok(())
    } else {
        Err(Error::BadArity {
            name,
            expected: "no arguments",
            got: args.len(),
        })
    }
}

fn one_int(
    name: &'static str,
    requirement: &'static str,
    min: u32,
    args: &[f64],
) -> Result<u32> {
    if args.len() != 1 {
        return Err(Error::BadArity {
            name,
            expected: "1 argument",
            got: args.len(),
        });
    }
    int_arg(name, requirement, min, args[0])
}

fn int_arg(name: &'static str, requirement: &'static str, min: u32, v: f64) -> Result<u32> {
    let ok = v.is_finite()
        && v.fract() == 0.0
        && v >= f64::from(min)
        && v <= f64::from(u32::MAX);
    if ok {
        Ok(v as u32)
    } else {
        Err(Error::BadArgument {
            name,
            requirement,
            got: v,
        })
    }
}
