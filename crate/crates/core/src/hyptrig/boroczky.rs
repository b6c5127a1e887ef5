use crate::error::{Error, Result};
use crate::numerics::{safe_inverse, try_integrate_adaptive, InverseKind, Tolerances};
use crate::scalar::Real;

use super::{ball_volume, h2, h3};

/// Böröczky data for a packing by balls of radius `r`: the dihedral angle
/// and volume of the regular tetrahedron with edge `2r`, the resulting
/// local density bound, and the circumradii `h2`, `h3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoroczkyProfile<T> {
    pub radius: T,
    pub beta: T,
    pub tau: T,
    pub density: T,
    pub h2: T,
    pub h3: T,
}

/// Computes the [`BoroczkyProfile`] for radius `r`, evaluating the
/// tetrahedron volume by adaptive quadrature.
pub fn boroczky_profile<T: Real>(r: T, tol: &Tolerances<T>) -> Result<BoroczkyProfile<T>> {
    if !(r > T::zero()) || !r.is_finite() {
        return Err(Error::domain("boroczky_profile", format!("r must be positive, got {r}")));
    }
    let two = T::lit(2.0);
    let sec_beta = T::one() / (two * r).cosh() + two;
    let beta = safe_inverse(InverseKind::Arcsec, sec_beta, tol)?;
    let upper = safe_inverse(InverseKind::Arcsec, T::lit(3.0), tol)?;
    let integral = try_integrate_adaptive(
        |t: T| safe_inverse(InverseKind::Arcsech, T::one() / t.cos() - two, tol),
        beta,
        upper,
        tol,
    )?;
    let tau = T::lit(3.0) * integral.value;
    let density = (T::lit(3.0) * beta - T::PI()) * ball_volume(r)? / T::PI() / tau;
    Ok(BoroczkyProfile {
        radius: r,
        beta,
        tau,
        density,
        h2: h2(r, tol)?,
        h3: h3(r, tol)?,
    })
}

impl<T: Real> BoroczkyProfile<T> {
    /// `B(r) / d(r)`.
    pub fn ball_over_density(&self) -> Result<T> {
        Ok(ball_volume(self.radius)? / self.density)
    }

    /// Lower bound for the volume of the radius-`rho` ball about the centre
    /// of a packing ball of radius `R = self.radius`; see [`v_bor`].
    pub fn v_bor(&self, rho: T, tol: &Tolerances<T>) -> Result<T> {
        let r = self.radius;
        if !(rho > self.h3) {
            return Err(Error::domain(
                "v_bor",
                format!("rho = {rho} must exceed h3(R) = {}", self.h3),
            ));
        }
        let phi1 = packing_angle(r, rho, tol)?;
        let phi2 = packing_angle(r, self.h3, tol)?;
        let c = (phi1 - phi2).cos();
        let half = T::lit(0.5);
        Ok((T::one() - c) * half * ball_volume(self.h3)?
            + (T::one() + c) * half * self.ball_over_density()?)
    }
}

/// `arcsin(sqrt(cosh²ρ - cosh²R) / (sinh ρ cosh R))`.
fn packing_angle<T: Real>(r: T, rho: T, tol: &Tolerances<T>) -> Result<T> {
    let rad = tol.clamp_radicand("v_bor", rho.sinh().powi(2) - r.sinh().powi(2), rho.sinh().powi(2))?;
    safe_inverse(InverseKind::Arcsin, rad.sqrt() / (rho.sinh() * r.cosh()), tol)
}

/// Böröczky volume bound for the radius-`rho` ball about the centre of a
/// packing ball of radius `R`: a convex combination of `B(h3(R))` and
/// `B(R)/d(R)` weighted by the angle `φ(R, ρ)`.
pub fn v_bor<T: Real>(r: T, rho: T, tol: &Tolerances<T>) -> Result<T> {
    boroczky_profile(r, tol)?.v_bor(rho, tol)
}
