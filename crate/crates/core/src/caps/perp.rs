use crate::error::{Error, Result};
use crate::numerics::{try_integrate_adaptive, Tolerances};
use crate::scalar::Real;

use super::iota_zero_axis_radial;

/// Geometry of the intersection of a cap `K(R, w, ζ2)` with the half-ball
/// `K(R, 0, ζ1)` when the angle `α` between `ζ1` and `ζ2` is obtuse.
///
/// In the upper half-space picture the intersection projects vertically onto
/// the region `{m sec θ ≤ r ≤ ε(θ), |θ| ≤ θ0}` in polar coordinates, lying
/// between the lower hemisphere of the ball and the upper hemisphere of the
/// sphere of radius `v` bounding the cap's half-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerpCapGeometry<T> {
    pub ball_radius: T,
    pub v: T,
    pub c: T,
    pub mu: T,
    pub rho: T,
    pub m: T,
    pub theta0: T,
}

impl<T: Real> PerpCapGeometry<T> {
    pub fn new(r: T, w: T, alpha: T, tol: &Tolerances<T>) -> Result<Self> {
        let half_pi = T::FRAC_PI_2();
        if !(r > T::zero() && w > T::zero() && w < r) {
            return Err(Error::domain(
                "iota_perp",
                format!("need 0 < w < R, got R = {r}, w = {w}"),
            ));
        }
        if !(alpha > half_pi && alpha < T::PI()) {
            return Err(Error::domain(
                "iota_perp",
                format!("need π/2 < α < π, got α = {alpha}"),
            ));
        }
        let phi = alpha - half_pi;
        let v = T::one() / (w.sinh() + w.cosh() * phi.cos());
        let c = v * phi.sin() * w.cosh();
        let ch = r.cosh();
        let d2 = c * c + ch * ch;
        let s = v * v + c * c + T::one();
        let rad = tol
            .clamp_radicand("iota_perp", v * v - s * s / (T::lit(4.0) * d2), v * v)
            .map_err(|e| Error::Consistency(format!("intersection circle radius: {e}")))?;
        let mu = rad.sqrt();
        let rho = ch / d2.sqrt();
        let m = c - c * s / (T::lit(2.0) * d2);
        if m < T::zero() {
            return Err(Error::Consistency(format!(
                "negative offset m = {m} for R = {r}, w = {w}, α = {alpha}"
            )));
        }
        let reach = rho * mu;
        let theta0 = if m > reach {
            T::zero()
        } else {
            ((reach - m) * (reach + m)).sqrt().atan2(m * rho)
        };
        Ok(PerpCapGeometry {
            ball_radius: r,
            v,
            c,
            mu,
            rho,
            m,
            theta0,
        })
    }

    /// True when the two caps are disjoint (`m > ρμ`).
    pub fn is_empty(&self) -> bool {
        self.m > self.rho * self.mu
    }

    /// Outer radius `ε(θ)` of the projected region.
    pub fn epsilon(&self, theta: T) -> T {
        let (s, c) = theta.sin_cos();
        self.rho * self.mu / (c * c + self.rho * self.rho * s * s).sqrt()
    }

    /// `∫ r/L(r,θ)² - r/U(r,θ)² dr` over `m sec θ ≤ r ≤ ε(θ)`, in closed form.
    ///
    /// With `p = r - m cos θ`, `a² = sinh²R - m² sin²θ`, `s² = cosh²R - a²`
    /// and `L = cosh R - √(a² - p²)`, an antiderivative of `r/L²` is
    ///
    /// `-C/L - log L + m cos θ [C p/(s² L) + (2a²/s³) atan((C+a) p / (s (a + √(a²-p²))))]`.
    ///
    /// With `k = c - m`, `q = r + k cos θ`, `b² = v² - k² sin²θ`, one of `r/U²`
    /// is `-½ log(b² - q²) - (k cos θ / b) atanh(q/b)`.
    pub fn inner_integral(&self, theta: T) -> T {
        let (st, ct) = theta.sin_cos();
        let r0 = self.m / ct;
        let r1 = self.epsilon(theta);
        if !(r1 > r0) {
            return T::zero();
        }
        let cr = self.ball_radius.cosh();
        let sr = self.ball_radius.sinh();
        let m = self.m;
        let a2 = sr * sr - m * m * st * st;
        let a = a2.max(T::zero()).sqrt();
        let s2 = cr * cr - a2;
        let s = s2.sqrt();
        let two = T::lit(2.0);
        let f_lower = |r: T| {
            let p = r - m * ct;
            let root = (a2 - p * p).max(T::zero()).sqrt();
            let l = cr - root;
            let arc = ((cr + a) * p / (s * (a + root))).atan();
            -cr / l - l.ln() + m * ct * (cr * p / (s2 * l) + two * a2 / (s2 * s) * arc)
        };
        let k = self.c - m;
        let b2 = self.v * self.v - k * k * st * st;
        let b = b2.sqrt();
        let f_upper = |r: T| {
            let q = r + k * ct;
            -T::lit(0.5) * (b2 - q * q).ln() - k * ct / b * (q / b).atanh()
        };
        (f_lower(r1) - f_lower(r0)) - (f_upper(r1) - f_upper(r0))
    }
}

/// `ι(R, w, 0, α)` for obtuse `α`: the volume of the intersection of the
/// cap `K(R, w, ζ2)` with the half-ball `K(R, 0, ζ1)` whose directions make
/// angle `α ∈ (π/2, π)`.
///
/// When the cap's plane is nearly opposite the half-ball its bounding sphere
/// in the projection has radius `v` far beyond the ball, and the closed form
/// loses about `v²` ulps to cancellation. Beyond `v = 10³` the volume is
/// evaluated by [`iota_zero_axis_radial`] instead.
pub fn iota_perp<T: Real>(r: T, w: T, alpha: T, tol: &Tolerances<T>) -> Result<T> {
    let phi = alpha - T::FRAC_PI_2();
    if w > T::zero() && alpha > T::FRAC_PI_2() && alpha < T::PI() {
        let inv_v = w.sinh() + w.cosh() * phi.cos();
        if inv_v * T::lit(1e3) < T::one() {
            return iota_zero_axis_radial(r, w, alpha, tol);
        }
    }
    let g = PerpCapGeometry::new(r, w, alpha, tol)?;
    if g.is_empty() || g.theta0 == T::zero() {
        return Ok(T::zero());
    }
    let q = try_integrate_adaptive(|t| Ok(g.inner_integral(t)), T::zero(), g.theta0, tol)?;
    Ok(q.value.max(T::zero()))
}
