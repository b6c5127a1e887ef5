use crate::error::Result;
use crate::hyptrig::{ball_volume, rho_k, rho_k_closed};
use crate::scalar::Real;

use super::VolumeBounds;

impl<T: Real> VolumeBounds<T> {
    /// `Z(D, λ) = ρ4(D, λ) - λ/2`.
    pub fn z_gap(&self, d: T, lambda: T) -> Result<T> {
        Ok(rho_k(4, d, lambda)? - lambda * self.half())
    }

    /// Lower bound for the volume outside the `λ/2`-ball about a basepoint
    /// at displacement `D` with loop length `λ`.
    pub fn v_far(&self, d: T, lambda: T) -> Result<T> {
        self.far_from_gap(self.z_gap(d, lambda)?, lambda)
    }

    /// [`v_far`](Self::v_far) extended to the boundary of the admissible
    /// set, where `ρ4` and hence `Z` are infinite.
    pub(crate) fn v_far_closed(&self, d: T, lambda: T) -> Result<T> {
        let z = rho_k_closed(4, d, lambda, &self.tol)? - lambda * self.half();
        self.far_from_gap(z, lambda)
    }

    fn far_from_gap(&self, z: T, lambda: T) -> Result<T> {
        let c = &self.constants;
        let r = c.mu0 * self.half();
        if z <= T::zero() {
            Ok(T::zero())
        } else if z <= c.h {
            ball_volume(r.min(z))
        } else {
            let bor = self.profile.v_bor(c.h + lambda * self.half(), &self.tol)?;
            Ok(bor + ball_volume(r.min((z - c.h) * self.half()))?)
        }
    }
}
