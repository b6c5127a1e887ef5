//! Volume lower bounds: pointwise near/far bounds around a basepoint, and
//! their interval and rectangle forms used by the grid sweeps.
//!
//! All functions hang off [`VolumeBounds`], which holds the constants, the
//! numerical tolerances and the Böröczky profile at radius `μ0/2` (computed
//! once, since every far-volume evaluation needs it).

mod far;
mod near;
mod short;

pub use near::MnearMode;
pub use short::RectBounds;

use crate::error::{Error, Result};
use crate::hyptrig::{boroczky_profile, BoroczkyProfile};
use crate::numerics::Tolerances;
use crate::scalar::Real;

/// Fixed constants of the volume argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants<T> {
    /// Lower bound for the length of a closed geodesic.
    pub delta0: T,
    /// Loop length at the special basepoint, `log 7`.
    pub lambda0: T,
    /// Margulis number.
    pub mu0: T,
    /// `h3(μ0/2)`.
    pub h: T,
    /// Volume to beat.
    pub vol_threshold: T,
    /// Branch point of the near-volume bound.
    pub near_branch: T,
}

impl<T: Real> Constants<T> {
    /// `δ0 = 0.58`, `λ0 = log 7`, `μ0 = 1.119`, threshold `3.44`.
    pub fn standard(tol: &Tolerances<T>) -> Result<Self> {
        let mu0 = T::lit(1.119);
        let c = Constants {
            delta0: T::lit(0.58),
            lambda0: T::lit(7.0).ln(),
            mu0,
            h: crate::hyptrig::h3(mu0 * T::lit(0.5), tol)?,
            vol_threshold: T::lit(3.44),
            near_branch: T::lit(0.7),
        };
        c.validate()?;
        Ok(c)
    }

    /// Checks `3δ0 < λ0 < 4δ0` and that the branch point lies in `(δ0, λ0)`.
    pub fn validate(&self) -> Result<()> {
        let three = T::lit(3.0);
        let four = T::lit(4.0);
        if !(three * self.delta0 < self.lambda0 && self.lambda0 < four * self.delta0) {
            return Err(Error::domain(
                "constants",
                format!("need 3δ0 < λ0 < 4δ0, got δ0 = {}, λ0 = {}", self.delta0, self.lambda0),
            ));
        }
        if !(self.near_branch > self.delta0 && self.near_branch < self.lambda0) {
            return Err(Error::domain("constants", "branch point must lie in (δ0, λ0)"));
        }
        if !(self.mu0 > T::zero() && self.h > T::zero()) {
            return Err(Error::domain("constants", "μ0 and h must be positive"));
        }
        Ok(())
    }
}

/// A half-open interval `[lo, hi)` of displacements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfOpenInterval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> HalfOpenInterval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::domain(
                "interval",
                format!("need lo < hi, got [{lo}, {hi})"),
            ));
        }
        Ok(HalfOpenInterval { lo, hi })
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x < self.hi
    }

    /// True when the open interior avoids `point`.
    pub fn avoids(&self, point: T) -> bool {
        !(self.lo < point && point < self.hi)
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }
}

/// A rectangle `[l_lo, l_hi] × [y_lo, y_hi]` in (geodesic length, offset)
/// space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRectangle<T> {
    pub l_lo: T,
    pub l_hi: T,
    pub y_lo: T,
    pub y_hi: T,
}

impl<T: Real> ParamRectangle<T> {
    pub fn new(l_lo: T, l_hi: T, y_lo: T, y_hi: T) -> Result<Self> {
        let finite = [l_lo, l_hi, y_lo, y_hi].iter().all(|v| v.is_finite());
        if !finite || !(l_lo < l_hi) || !(y_lo <= y_hi) {
            return Err(Error::domain(
                "rectangle",
                format!("need l_lo < l_hi and y_lo <= y_hi, got [{l_lo}, {l_hi}] x [{y_lo}, {y_hi}]"),
            ));
        }
        Ok(ParamRectangle {
            l_lo,
            l_hi,
            y_lo,
            y_hi,
        })
    }

    pub fn contains(&self, l: T, y: T) -> bool {
        self.l_lo <= l && l <= self.l_hi && self.y_lo <= y && y <= self.y_hi
    }
}

/// Evaluation context for the bound functions.
#[derive(Debug, Clone)]
pub struct VolumeBounds<T> {
    pub constants: Constants<T>,
    pub tol: Tolerances<T>,
    /// Böröczky profile at radius `μ0/2`.
    pub profile: BoroczkyProfile<T>,
    /// `χ_S` above which a rectangle uses the sharper far-volume bound.
    pub chi_threshold: T,
}

impl<T: Real> VolumeBounds<T> {
    pub fn new(constants: Constants<T>, tol: Tolerances<T>) -> Result<Self> {
        tol.validate()?;
        constants.validate()?;
        let profile = boroczky_profile(constants.mu0 * T::lit(0.5), &tol)?;
        Ok(VolumeBounds {
            constants,
            tol,
            profile,
            chi_threshold: T::lit(0.1),
        })
    }

    /// Standard constants with default tolerances.
    pub fn standard() -> Result<Self> {
        let tol = Tolerances::default();
        Self::new(Constants::standard(&tol)?, tol)
    }

    pub fn with_chi_threshold(mut self, threshold: T) -> Self {
        self.chi_threshold = threshold;
        self
    }

    fn half(&self) -> T {
        T::lit(0.5)
    }
}
