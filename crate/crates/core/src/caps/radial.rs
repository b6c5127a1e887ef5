use crate::error::{Error, Result};
use crate::hyptrig::ball_volume;
use crate::numerics::{try_integrate_adaptive, Tolerances};
use crate::scalar::Real;

/// `ι(R, w, 0, α)` in geodesic polar coordinates about the ball's centre.
///
/// The half-ball is a union of rays from the centre. Along a ray at angle
/// `ψ` from the cap's axis the cap occupies `t0 ≤ t ≤ R` with
/// `tanh t0 = tanh w / cos ψ`, and the rays inside the half-ball at that
/// `ψ` sweep an azimuth of `2 arccos(-cot α cot ψ)`. This leaves
///
/// `∫_0^Θ sin ψ · 2 arccos(-cot α cot ψ) · (B(R) - B(t0(ψ)))/(4π) dψ`
///
/// with `cos Θ = tanh w / tanh R`. Unlike the closed form it stays
/// well-conditioned when the cap's plane is nearly opposite the half-ball.
pub fn iota_zero_axis_radial<T: Real>(r: T, w: T, alpha: T, tol: &Tolerances<T>) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::domain("iota_radial", format!("R must be positive, got {r}")));
    }
    if !(w >= T::zero()) {
        return Err(Error::domain("iota_radial", format!("w must be non-negative, got {w}")));
    }
    if !(alpha > T::zero() && alpha < T::PI()) {
        return Err(Error::domain("iota_radial", format!("need 0 < α < π, got {alpha}")));
    }
    if w >= r {
        return Ok(T::zero());
    }
    let half_pi = T::FRAC_PI_2();
    let (tw, tr) = (w.tanh(), r.tanh());
    let theta = (tw / tr).min(T::one()).acos();
    let b_r = ball_volume(r)?;
    let four_pi = T::lit(4.0) * T::PI();
    let cot_a = alpha.cos() / alpha.sin();
    let shell = |psi: T| -> Result<T> {
        let t0 = (tw / psi.cos()).min(tr).atanh();
        Ok((b_r - ball_volume(t0)?).max(T::zero()) / four_pi)
    };
    let full = |psi: T| -> Result<T> { Ok(T::lit(2.0) * T::PI() * psi.sin() * shell(psi)?) };
    let partial = |psi: T| -> Result<T> {
        let x = (-cot_a * psi.cos() / psi.sin()).max(-T::one()).min(T::one());
        Ok(T::lit(2.0) * psi.sin() * x.acos() * shell(psi)?)
    };
    // Rays with ψ below |α - π/2| lie entirely inside (acute) or outside
    // (obtuse) the half-ball.
    let kink = (alpha - half_pi).abs().min(theta);
    let mut total = T::zero();
    if alpha < half_pi && kink > T::zero() {
        total = total + try_integrate_adaptive(full, T::zero(), kink, tol)?.value;
    }
    if theta > kink {
        total = total + try_integrate_adaptive(partial, kink, theta, tol)?.value;
    }
    Ok(total.max(T::zero()))
}
