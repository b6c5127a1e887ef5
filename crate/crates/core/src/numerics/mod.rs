//! Shared numerical kernels: adaptive quadrature, bracketed root finding and
//! domain-clamped inverse functions.

mod inverse;
mod quadrature;
mod roots;

pub use inverse::{safe_inverse, InverseKind};
pub use quadrature::{integrate_adaptive, try_integrate_adaptive, QuadratureResult};
pub use roots::solve_bracketed;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Numerical tolerances shared by every kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    /// Absolute error target for adaptive quadrature.
    pub quad_abs: T,
    /// Relative error target for adaptive quadrature.
    pub quad_rel: T,
    /// Final bracket width for the root finder.
    pub root_tol: T,
    /// How far outside a closed domain an argument may land before it is
    /// rejected instead of clamped.
    pub domain_clamp: T,
    /// Panel budget for adaptive quadrature.
    pub max_panels: usize,
}

impl<T: Real> Default for Tolerances<T> {
    /// `1e-10` quadrature, `1e-12` root and clamp tolerances, floored at a
    /// few ulps of `T` so that `f32` gets attainable targets.
    fn default() -> Self {
        let eps = T::epsilon();
        Tolerances {
            quad_abs: T::lit(1e-10).max(eps * T::lit(200.0)),
            quad_rel: T::lit(1e-10).max(eps * T::lit(200.0)),
            root_tol: T::lit(1e-12).max(eps * T::lit(4.0)),
            domain_clamp: T::lit(1e-12).max(eps * T::lit(16.0)),
            max_panels: 10_000,
        }
    }
}

impl<T: Real> Tolerances<T> {
    pub fn validate(&self) -> Result<()> {
        let zero = T::zero();
        let fields = [
            ("quad_abs", self.quad_abs),
            ("quad_rel", self.quad_rel),
            ("root_tol", self.root_tol),
            ("domain_clamp", self.domain_clamp),
        ];
        for (name, v) in fields {
            if !(v > zero) || !v.is_finite() {
                return Err(Error::domain(
                    "tolerances",
                    format!("{name} must be strictly positive, got {v}"),
                ));
            }
        }
        if self.max_panels == 0 {
            return Err(Error::domain("tolerances", "max_panels must be at least 1"));
        }
        Ok(())
    }

    /// Clamps a radicand that should be non-negative. Values down to
    /// `-domain_clamp * scale` are treated as zero.
    pub(crate) fn clamp_radicand(&self, op: &'static str, x: T, scale: T) -> Result<T> {
        if x >= T::zero() {
            Ok(x)
        } else if x >= -self.domain_clamp * scale.abs().max(T::one()) {
            Ok(T::zero())
        } else if x.is_nan() {
            Err(Error::domain(op, "radicand is NaN"))
        } else {
            Err(Error::domain(op, format!("negative radicand {x:e}")))
        }
    }
}
