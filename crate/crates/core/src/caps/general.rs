use crate::error::{Error, Result};
use crate::hyptrig::{ball_volume, cap_angle_theta};
use crate::numerics::Tolerances;
use crate::scalar::Real;

use super::{iota_perp, kappa};

fn check_angle<T: Real>(op: &'static str, alpha: T, tol: &Tolerances<T>) -> Result<T> {
    let slack = tol.domain_clamp * T::PI();
    if !(alpha >= -slack && alpha <= T::PI() + slack) {
        return Err(Error::domain(op, format!("angle {alpha} outside [0, π]")));
    }
    Ok(alpha.max(T::zero()).min(T::PI()))
}

/// `ι(R, w, 0, α)`: volume of the intersection of the cap `K(R, w, ζ2)` with
/// the half-ball `K(R, 0, ζ1)`, the directions making angle `α`.
pub fn iota_zero_axis<T: Real>(r: T, w: T, alpha: T, tol: &Tolerances<T>) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::domain("iota", format!("R must be positive, got {r}")));
    }
    if !(w >= T::zero()) {
        return Err(Error::domain("iota", format!("w must be non-negative, got {w}")));
    }
    let alpha = check_angle("iota", alpha, tol)?;
    let half_pi = T::FRAC_PI_2();
    if w >= r {
        return Ok(T::zero());
    }
    if w == T::zero() {
        // Two half-balls: a wedge of dihedral angle π - α.
        return Ok(ball_volume(r)? * (T::PI() - alpha) / (T::lit(2.0) * T::PI()));
    }
    if alpha == T::zero() {
        kappa(r, w)
    } else if alpha == T::PI() {
        Ok(T::zero())
    } else if alpha == half_pi {
        Ok(kappa(r, w)? * T::lit(0.5))
    } else if alpha > half_pi {
        iota_perp(r, w, alpha, tol)
    } else {
        let k = kappa(r, w)?;
        Ok((k - iota_perp(r, w, T::PI() - alpha, tol)?).max(T::zero()))
    }
}

/// Splits `α` as `α1 + α2` with `tanh w1 cos α2 = tanh w2 cos α1`, both
/// parts in `[-π/2, π/2]`.
///
/// Dividing by `cos α2` gives `tanh w2 (sin α tan α2 + cos α) = tanh w1`,
/// which is linear in `tan α2`; the root is taken in two-argument form.
pub fn split_angles<T: Real>(w1: T, w2: T, alpha: T, tol: &Tolerances<T>) -> Result<(T, T)> {
    if !(w1 > T::zero() && w1 <= w2) {
        return Err(Error::domain(
            "split_angles",
            format!("need 0 < w1 <= w2, got w1 = {w1}, w2 = {w2}"),
        ));
    }
    let alpha = check_angle("split_angles", alpha, tol)?;
    let (t1, t2) = (w1.tanh(), w2.tanh());
    let (sa, ca) = alpha.sin_cos();
    if !(sa > T::zero()) {
        return Err(Error::Consistency(format!(
            "split_angles: no unique split for α = {alpha}"
        )));
    }
    let alpha2 = (t1 - t2 * ca).atan2(t2 * sa);
    let alpha1 = alpha - alpha2;
    let bound = T::FRAC_PI_2() * (T::one() + tol.domain_clamp);
    if alpha1.abs() > bound {
        return Err(Error::Consistency(format!(
            "split_angles: α1 = {alpha1} outside [-π/2, π/2] for w1 = {w1}, w2 = {w2}, α = {alpha}"
        )));
    }
    Ok((alpha1, alpha2))
}

/// `ι(R, w1, w2, α)`: volume of the intersection of two caps of a radius-`R`
/// ball at plane distances `w1`, `w2` whose directions make angle `α`.
///
/// Symmetric in `(w1, w2)`. Nested caps (`α ≤ Ψ1 - Ψ2`) give the smaller
/// cap's volume, disjoint caps (`α > Ψ1 + Ψ2`) give zero, and otherwise the
/// plane through the centre and the line where the two cap planes meet
/// splits the intersection into two pieces of the form `ι(R, w, 0, ·)`.
pub fn iota_general<T: Real>(r: T, w1: T, w2: T, alpha: T, tol: &Tolerances<T>) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::domain("iota", format!("R must be positive, got {r}")));
    }
    if !(w1 >= T::zero() && w2 >= T::zero()) {
        return Err(Error::domain(
            "iota",
            format!("plane distances must be non-negative, got {w1}, {w2}"),
        ));
    }
    let alpha = check_angle("iota", alpha, tol)?;
    let (w1, w2) = if w1 <= w2 { (w1, w2) } else { (w2, w1) };
    if w2 >= r {
        return Ok(T::zero());
    }
    if w1 == T::zero() {
        return iota_zero_axis(r, w2, alpha, tol);
    }
    let psi1 = cap_angle_theta(w1, r, tol)?;
    let psi2 = cap_angle_theta(w2, r, tol)?;
    if alpha <= psi1 - psi2 {
        return kappa(r, w2);
    }
    if alpha > psi1 + psi2 {
        return Ok(T::zero());
    }
    let (a1, a2) = split_angles(w1, w2, alpha, tol)?;
    let half_pi = T::FRAC_PI_2();
    let v = iota_zero_axis(r, w1, a1 + half_pi, tol)? + iota_zero_axis(r, w2, a2 + half_pi, tol)?;
    Ok(v.max(T::zero()).min(kappa(r, w2)?))
}

/// `σ(R, w1, w2, α) = κ(R, w1) + κ(R, w2) - ι(R, w1, w2, α)`: volume of the
/// union of two caps.
pub fn sigma_union<T: Real>(r: T, w1: T, w2: T, alpha: T, tol: &Tolerances<T>) -> Result<T> {
    let k1 = kappa(r, w1)?;
    let k2 = kappa(r, w2)?;
    let i = iota_general(r, w1, w2, alpha, tol)?;
    Ok(k1 + k2 - i)
}
