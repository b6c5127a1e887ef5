use crate::caps::kappa;
use crate::error::{Error, Result};
use crate::hyptrig::{ball_volume, rho_k, rho_k_closed, rho_short};
use crate::scalar::Real;

use super::{ParamRectangle, VolumeBounds};

/// Lower bounds for `W*` over a rectangle of (length, offset) parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectBounds<T> {
    /// Lower bound for `χ` on the rectangle.
    pub chi_s: T,
    /// Sharper far-volume bound, defined when `χ_S > 0`.
    pub v_plus: Option<T>,
    /// Far-volume bound valid on every rectangle.
    pub v_minus: T,
    /// Lower bound for `V*_N` on the rectangle.
    pub v_n_s: T,
    /// `V_N^S + V_+^S` if `χ_S` exceeds the threshold, else `V_N^S + V_-^S`.
    pub w_s: T,
    pub used_plus: bool,
}

impl<T: Real> VolumeBounds<T> {
    /// `V_N(l, λ) = B(λ/2) - 2κ(λ/2, l/2)`.
    pub fn v_n(&self, l: T, lambda: T) -> Result<T> {
        if !(l > T::zero() && lambda > T::zero()) {
            return Err(Error::domain("v_n", format!("need l, λ > 0, got l = {l}, λ = {lambda}")));
        }
        let r = lambda * self.half();
        Ok(ball_volume(r)? - T::lit(2.0) * kappa(r, l * self.half())?)
    }

    /// `V_N(l, 2ρ(l) + y)`.
    pub fn v_n_star(&self, l: T, y: T) -> Result<T> {
        self.v_n(l, self.star_lambda(l, y)?)
    }

    /// `W(l, λ) = V_far(l, λ) + V_N(l, λ)`.
    pub fn w_total(&self, l: T, lambda: T) -> Result<T> {
        Ok(self.v_far(l, lambda)? + self.v_n(l, lambda)?)
    }

    fn star_lambda(&self, l: T, y: T) -> Result<T> {
        if !(y >= T::zero()) {
            return Err(Error::domain("w_star", format!("offset y = {y} must be non-negative")));
        }
        Ok(T::lit(2.0) * rho_short(l)? + y)
    }

    /// `W*(l, y) = W(l, 2ρ(l) + y)`. At `y = 0` the point is on the boundary
    /// of the admissible set and the far bound takes its limiting value.
    pub fn w_star(&self, l: T, y: T) -> Result<T> {
        let lambda = self.star_lambda(l, y)?;
        Ok(self.v_far_closed(l, lambda)? + self.v_n(l, lambda)?)
    }

    /// `χ(l, y) = ρ4(l, 2ρ(l) + y) - (h + (2ρ(l) + y)/2)`; `+∞` at `y = 0`.
    pub fn chi(&self, l: T, y: T) -> Result<T> {
        let lambda = self.star_lambda(l, y)?;
        Ok(rho_k_closed(4, l, lambda, &self.tol)? - (self.constants.h + lambda * self.half()))
    }

    /// Rectangle bounds for `W*` on `S`, assembled from corner values using
    /// the monotonicity of `ρ`, `ρ4`, `B`, `V_bor` and `V_N`.
    pub fn rect_bounds(&self, s: &ParamRectangle<T>) -> Result<RectBounds<T>> {
        let c = &self.constants;
        let clamp = self.tol.domain_clamp;
        if !(s.l_lo > T::zero() && s.l_hi <= c.delta0 + clamp && s.y_lo >= T::zero()) {
            return Err(Error::domain(
                "rect_bounds",
                format!(
                    "rectangle [{}, {}] x [{}, {}] is not inside (0, δ0] x [0, ∞)",
                    s.l_lo, s.l_hi, s.y_lo, s.y_hi
                ),
            ));
        }
        let half = self.half();
        let two = T::lit(2.0);
        let mu_half = c.mu0 * half;
        let lam_far = two * rho_short(s.l_lo)? + s.y_hi;
        let r4 = rho_k(4, s.l_hi, lam_far)?;
        let chi_s = r4 - (c.h + lam_far * half);

        let lam_near = two * rho_short(s.l_hi)? + s.y_lo;
        let v_plus = if chi_s > T::zero() {
            let bor = self.profile.v_bor(c.h + lam_near * half, &self.tol)?;
            Some(bor + ball_volume(mu_half.min(chi_s * half))?)
        } else {
            None
        };
        let v_minus = ball_volume(mu_half.min(r4 - lam_far * half).max(T::zero()))?;
        let v_n_s = self.v_n(s.l_hi, lam_near)?;
        let used_plus = chi_s > self.chi_threshold && v_plus.is_some();
        let w_s = v_n_s + if used_plus { v_plus.unwrap_or(v_minus) } else { v_minus };
        Ok(RectBounds {
            chi_s,
            v_plus,
            v_minus,
            v_n_s,
            w_s,
            used_plus,
        })
    }
}
