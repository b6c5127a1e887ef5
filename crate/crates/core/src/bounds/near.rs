use serde::{Deserialize, Serialize};

use crate::caps::{kappa, sigma_union};
use crate::error::{Error, Result};
use crate::hyptrig::{ball_volume, cap_angle_theta, phi_n, psi};
use crate::scalar::Real;

use super::{HalfOpenInterval, VolumeBounds};

/// How much of the three-fold displacement cap `m_near` subtracts on
/// intervals at or beyond the branch point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MnearMode {
    /// Subtract `2κ`, matching the pointwise bound; always a lower bound.
    #[default]
    Sound,
    /// Subtract `κ` once, as in the published interval bound.
    PaperText,
}

impl MnearMode {
    pub fn coefficient<T: Real>(self) -> T {
        match self {
            MnearMode::Sound => T::lit(2.0),
            MnearMode::PaperText => T::one(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MnearMode::Sound => "sound",
            MnearMode::PaperText => "paper_text",
        }
    }
}

impl<T: Real> VolumeBounds<T> {
    /// `T_n(D) = Φ_n(δ0, D)`.
    pub fn t_n(&self, n: u32, d: T) -> Result<T> {
        let delta0 = self.constants.delta0;
        if !(d >= delta0 - self.tol.domain_clamp) {
            return Err(Error::domain("t_n", format!("D = {d} is below δ0 = {delta0}")));
        }
        phi_n(n, delta0, d.max(delta0), &self.tol)
    }

    /// `cos(Θ(D/2, λ/2) - Θ(T3/2, λ/2)) - (cosh D cosh T3 - cosh 2D)/(sinh D sinh T3)`;
    /// negative exactly when the nested-cubes inequality holds.
    pub fn grand_duke_gap(&self, d: T, t3: T, lambda: T) -> Result<T> {
        if !(T::zero() < d && d < t3 && t3 < lambda) {
            return Err(Error::domain(
                "grand_duke",
                format!("need 0 < D < T3 < λ, got D = {d}, T3 = {t3}, λ = {lambda}"),
            ));
        }
        let h = self.half();
        let r = lambda * h;
        let th_d = cap_angle_theta(d * h, r, &self.tol)?;
        let th_t = cap_angle_theta(t3 * h, r, &self.tol)?;
        let rhs = (d.cosh() * t3.cosh() - (d + d).cosh()) / (d.sinh() * t3.sinh());
        Ok((th_d - th_t).cos() - rhs)
    }

    pub fn grand_duke_holds(&self, d: T, t3: T, lambda: T) -> Result<bool> {
        Ok(self.grand_duke_gap(d, t3, lambda)? < T::zero())
    }

    /// `Δ(a, b)`: an upper bound on [`grand_duke_gap`](Self::grand_duke_gap)
    /// at `(D, T3(D), λ0)` for every `D ∈ [a, b] ⊂ [δ0, 0.7]`.
    pub fn delta_ab(&self, a: T, b: T) -> Result<T> {
        let c = &self.constants;
        let clamp = self.tol.domain_clamp;
        if !(a >= c.delta0 - clamp && a < b && b <= c.near_branch + clamp) {
            return Err(Error::domain(
                "delta_ab",
                format!("need δ0 <= a < b <= {}, got a = {a}, b = {b}", c.near_branch),
            ));
        }
        let h = self.half();
        let r = c.lambda0 * h;
        let phi_a = self.t_n(3, a)?;
        let phi_b = self.t_n(3, b)?;
        let th_b = cap_angle_theta(b * h, r, &self.tol)?;
        let th_phi_a = cap_angle_theta(phi_a * h, r, &self.tol)?;
        let coth = |x: T| T::one() / x.tanh();
        let rhs = coth(b) * coth(phi_b) - (b + b).cosh() / (a.sinh() * phi_a.sinh());
        Ok((th_b - th_phi_a).cos() - rhs)
    }

    /// `B(λ0/2) - 2σ(λ0/2, D/2, T2/2, Ψ(D, T2))`.
    pub fn v_near_nought(&self, d: T) -> Result<T> {
        let t2 = self.t_n(2, d)?;
        self.near_nought_terms(d, t2, psi(d, t2, &self.tol)?)
    }

    fn near_nought_terms(&self, d: T, t2: T, angle: T) -> Result<T> {
        let h = self.half();
        let r = self.constants.lambda0 * h;
        let s = sigma_union(r, d * h, t2 * h, angle, &self.tol)?;
        Ok(ball_volume(r)? - T::lit(2.0) * s)
    }

    /// Whether the near bound at `D` subtracts the three-fold cap.
    pub fn near_uses_t3(&self, d: T) -> bool {
        d >= self.constants.near_branch
    }

    /// Lower bound for the volume of the `λ0/2`-ball about a basepoint at
    /// displacement `D`.
    pub fn v_near(&self, d: T) -> Result<T> {
        let v0 = self.v_near_nought(d)?;
        if self.near_uses_t3(d) {
            let r = self.constants.lambda0 * self.half();
            Ok(v0 - T::lit(2.0) * kappa(r, self.t_n(3, d)? * self.half())?)
        } else {
            Ok(v0)
        }
    }

    /// Interval form of [`v_near_nought`](Self::v_near_nought):
    /// `B(λ0/2) - 2σ(λ0/2, a/2, Φ2(δ0,a)/2, Ψ(b, Φ2(δ0,a)))`.
    pub fn m_near_nought(&self, i: &HalfOpenInterval<T>) -> Result<T> {
        self.check_useful(i)?;
        let t2 = self.t_n(2, i.lo)?;
        self.near_nought_terms(i.lo, t2, psi(i.hi, t2, &self.tol)?)
    }

    fn check_useful(&self, i: &HalfOpenInterval<T>) -> Result<()> {
        let c = &self.constants;
        let clamp = self.tol.domain_clamp;
        if !(i.lo >= c.delta0 - clamp && i.hi <= c.lambda0 + clamp) {
            return Err(Error::domain(
                "m_near",
                format!("[{}, {}) is not inside [δ0, λ0)", i.lo, i.hi),
            ));
        }
        if !i.avoids(c.near_branch) {
            return Err(Error::domain(
                "m_near",
                format!("[{}, {}) straddles the branch point {}", i.lo, i.hi, c.near_branch),
            ));
        }
        Ok(())
    }

    /// Lower bound for [`v_near`](Self::v_near) on a useful interval.
    pub fn m_near(&self, i: &HalfOpenInterval<T>, mode: MnearMode) -> Result<T> {
        let m0 = self.m_near_nought(i)?;
        if self.near_uses_t3(i.lo) {
            let r = self.constants.lambda0 * self.half();
            let k = kappa(r, self.t_n(3, i.lo)? * self.half())?;
            Ok(m0 - mode.coefficient::<T>() * k)
        } else {
            Ok(m0)
        }
    }
}
