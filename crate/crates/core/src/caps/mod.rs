//! Volumes of caps of a hyperbolic ball, and of intersections and unions of
//! two caps of the same ball.
//!
//! A cap `K(R, w, ζ)` is the part of the closed radius-`R` ball beyond the
//! plane perpendicular to the ray towards `ζ` at distance `w` from the
//! centre. `κ(R, w)` is its volume, `ι(R, w1, w2, α)` the volume of the
//! intersection of two caps whose directions make angle `α`, and
//! `σ(R, w1, w2, α)` the volume of their union.

mod general;
mod perp;
mod radial;

pub use general::{iota_general, iota_zero_axis, sigma_union, split_angles};
pub use perp::{iota_perp, PerpCapGeometry};
pub use radial::iota_zero_axis_radial;

use crate::error::{Error, Result};
use crate::hyptrig::ball_volume;
use crate::numerics::Tolerances;
use crate::scalar::Real;

/// A cap of a ball: radius `R`, plane distance `w` and the direction of the
/// cap, as an angle measured in a fixed plane through the centre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapSpec<T> {
    pub ball_radius: T,
    pub plane_distance: T,
    pub direction: T,
}

impl<T: Real> CapSpec<T> {
    pub fn new(ball_radius: T, plane_distance: T, direction: T) -> Result<Self> {
        if !(ball_radius > T::zero()) {
            return Err(Error::domain("cap", format!("ball radius {ball_radius} must be positive")));
        }
        if !(plane_distance >= T::zero()) {
            return Err(Error::domain("cap", format!("plane distance {plane_distance} is negative")));
        }
        if !(direction >= T::zero() && direction <= T::PI()) {
            return Err(Error::domain("cap", format!("direction {direction} outside [0, π]")));
        }
        Ok(CapSpec {
            ball_radius,
            plane_distance,
            direction,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.plane_distance >= self.ball_radius
    }

    pub fn volume(&self) -> Result<T> {
        kappa(self.ball_radius, self.plane_distance)
    }

    fn angle_to(&self, other: &Self) -> Result<T> {
        if self.ball_radius != other.ball_radius {
            return Err(Error::domain("cap", "caps belong to balls of different radii"));
        }
        Ok((self.direction - other.direction).abs())
    }

    /// Volume of `self ∩ other`.
    pub fn intersection_volume(&self, other: &Self, tol: &Tolerances<T>) -> Result<T> {
        let alpha = self.angle_to(other)?;
        iota_general(self.ball_radius, self.plane_distance, other.plane_distance, alpha, tol)
    }

    /// Volume of `self ∪ other`.
    pub fn union_volume(&self, other: &Self, tol: &Tolerances<T>) -> Result<T> {
        let alpha = self.angle_to(other)?;
        sigma_union(self.ball_radius, self.plane_distance, other.plane_distance, alpha, tol)
    }
}

/// Volume `κ(R, w)` of a cap cut from a ball of radius `R` by a plane at
/// distance `w` from its centre.
///
/// The closed form is rearranged around `L(0) = e^{-R}` so that every term
/// is a small difference computed directly:
/// `κ/π = cosh R (L-L0)/(L L0) - log1p((L-L0)/L0) + log(cosh w / cosh R)`.
pub fn kappa<T: Real>(r: T, w: T) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::domain("kappa", format!("R must be positive, got {r}")));
    }
    if !(w >= T::zero()) {
        return Err(Error::domain("kappa", format!("w must be non-negative, got {w}")));
    }
    if w >= r {
        return Ok(T::zero());
    }
    if w == T::zero() {
        return Ok(ball_volume(r)? * T::lit(0.5));
    }
    let (sh, ch) = (r.sinh(), r.cosh());
    // ε² = e^{-2w} (cosh²R - cosh²w) / cosh²R
    let eps2 = (-(w + w)).exp() * (r - w).sinh() * (r + w).sinh() / (ch * ch);
    let root = (sh * sh - eps2).max(T::zero()).sqrt();
    let l0 = (-r).exp();
    let dl = eps2 / (sh + root);
    let l = l0 + dl;
    let half = T::lit(0.5);
    let log_ratio =
        (-(T::lit(2.0) * ((r + w) * half).sinh() * ((r - w) * half).sinh()) / ch).ln_1p();
    let value = ch * dl / (l * l0) - (dl / l0).ln_1p() + log_ratio;
    Ok((T::PI() * value).max(T::zero()))
}

/// Radius of the circle in which two spheres meet, and the distance from the
/// centre of the first sphere to the centre of that circle.
pub fn circle_intersection<T: Real>(r1: T, r2: T, d: T) -> Result<(T, T)> {
    if !(d > (r1 - r2).abs() && d < r1 + r2) {
        return Err(Error::domain(
            "circle_intersection",
            format!("spheres of radii {r1}, {r2} at distance {d} do not meet in a circle"),
        ));
    }
    let offset = (r1 * r1 + d * d - r2 * r2) / (d + d);
    let radius = (r1 * r1 - offset * offset).max(T::zero()).sqrt();
    Ok((radius, offset))
}

/// Hyperbolic distance between two points `(x, y)`, `y > 0`, of the upper
/// half-plane.
pub fn half_plane_distance<T: Real>(p: (T, T), q: (T, T)) -> Result<T> {
    if !(p.1 > T::zero() && q.1 > T::zero()) {
        return Err(Error::domain("half_plane_distance", "points must lie in the upper half-plane"));
    }
    let dx = p.0 - q.0;
    let dy = p.1 - q.1;
    // cosh d = 1 + |p-q|²/(2 y_p y_q); go through asinh of half the chord to
    // keep precision for nearby points.
    let s = ((dx * dx + dy * dy) / (T::lit(4.0) * p.1 * q.1)).sqrt();
    Ok(T::lit(2.0) * s.asinh())
}
