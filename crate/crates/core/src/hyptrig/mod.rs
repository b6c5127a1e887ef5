//! Hyperbolic trigonometry: displacement, angle and distance functions of
//! loxodromic isometries, balls and triangles in hyperbolic 3-space.
//!
//! Most functions are evaluated through half-angle rewrites of their defining
//! expressions (`cosh a - cosh b = 2 sinh((a+b)/2) sinh((a-b)/2)` and friends)
//! so that nothing cancels when the arguments are close together.

mod boroczky;

pub use boroczky::{boroczky_profile, v_bor, BoroczkyProfile};

use crate::error::{Error, Result};
use crate::numerics::{safe_inverse, InverseKind, Tolerances};
use crate::scalar::Real;

/// Translation length and twist angle of a loxodromic isometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoxodromicParams<T> {
    pub length: T,
    pub twist: T,
}

impl<T: Real> LoxodromicParams<T> {
    pub fn new(length: T, twist: T) -> Result<Self> {
        if !(length > T::zero()) || !twist.is_finite() {
            return Err(Error::domain(
                "loxodromic",
                format!("translation length must be positive, got {length}"),
            ));
        }
        Ok(LoxodromicParams { length, twist })
    }
}

/// Volume of a hyperbolic ball of radius `r`: `π (sinh 2r - 2r)`.
pub fn ball_volume<T: Real>(r: T) -> Result<T> {
    if !(r >= T::zero()) {
        return Err(Error::domain("ball_volume", format!("negative radius {r}")));
    }
    let two_r = r + r;
    // sinh x - x loses everything for small x; switch to the series there.
    let excess = if two_r < T::lit(1e-2) {
        let x2 = two_r * two_r;
        two_r * x2 / T::lit(6.0) * (T::one() + x2 / T::lit(20.0) * (T::one() + x2 / T::lit(42.0)))
    } else {
        two_r.sinh() - two_r
    };
    Ok(T::PI() * excess)
}

/// Distance to the axis of a loxodromic isometry with translation length `l`
/// and twist `theta` from a point it displaces by `d`.
pub fn omega<T: Real>(l: T, theta: T, d: T, tol: &Tolerances<T>) -> Result<T> {
    if !(l > T::zero()) {
        return Err(Error::domain("omega", format!("translation length {l} must be positive")));
    }
    if !(d >= l - tol.domain_clamp) {
        return Err(Error::domain("omega", format!("displacement {d} below translation length {l}")));
    }
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    // cosh d - cosh l
    let num = two * ((d + l) * half).sinh() * ((d - l) * half).sinh();
    let num = tol.clamp_radicand("omega", num, T::one())?;
    // cosh l - cos θ
    let den = two * ((l * half).sinh().powi(2) + (theta * half).sin().powi(2));
    if !(den > T::zero()) {
        return Err(Error::domain("omega", "degenerate isometry (cosh l = cos θ)"));
    }
    Ok((num / den).sqrt().asinh())
}

/// Radius of the cylinder of points moved less than `lambda` by some
/// non-trivial power of the isometry: the largest `ω(n l, n θ, λ)` over
/// `1 ≤ n ≤ ⌊λ/l⌋`.
pub fn cylinder_radius<T: Real>(
    lambda: T,
    lox: &LoxodromicParams<T>,
    tol: &Tolerances<T>,
) -> Result<T> {
    if !(lox.length < lambda) {
        return Err(Error::domain(
            "cylinder_radius",
            format!(
                "empty cylinder: translation length {} is not below {lambda}",
                lox.length
            ),
        ));
    }
    let ratio = lambda / lox.length;
    let n_max = (ratio * (T::one() + T::lit(8.0) * T::epsilon()))
        .floor()
        .to_usize()
        .ok_or_else(|| Error::domain("cylinder_radius", "too many powers"))?;
    let mut best = T::neg_infinity();
    for n in 1..=n_max {
        let nn = T::from_usize_lossy(n);
        let nl = (nn * lox.length).min(lambda);
        best = best.max(omega(nl, nn * lox.twist, lambda, tol)?);
    }
    Ok(best)
}

/// Lower bound for the displacement of the `n`-th power of an isometry with
/// translation length at least `delta` moving a point by `d`.
///
/// Evaluated as `2 asinh(cosh(d/2) sinh(nδ/2) / cosh(δ/2))`, the half-angle
/// form of `arccosh(cosh nδ + (cosh nδ - 1)(cosh d - cosh δ)/(cosh δ + 1))`.
pub fn phi_n<T: Real>(n: u32, delta: T, d: T, tol: &Tolerances<T>) -> Result<T> {
    if n == 0 {
        return Err(Error::domain("phi_n", "power must be at least 1"));
    }
    if !(delta > T::zero()) || !(d >= delta - tol.domain_clamp * delta.max(T::one())) {
        return Err(Error::domain(
            "phi_n",
            format!("need 0 < delta <= D, got delta = {delta}, D = {d}"),
        ));
    }
    let d = d.max(delta);
    let half = T::lit(0.5);
    let nn = T::from_u32(n).expect("small integer");
    let s = (d * half).cosh() * (nn * delta * half).sinh() / (delta * half).cosh();
    Ok(T::lit(2.0) * s.asinh())
}

/// Base angle of the isosceles triangle with legs `x` and base `y`.
///
/// `arccos(coth x (coth y - csch y))`, using `coth y - csch y = tanh(y/2)`.
pub fn psi<T: Real>(x: T, y: T, tol: &Tolerances<T>) -> Result<T> {
    if !(y > T::zero()) || !(y <= (x + x) * (T::one() + tol.domain_clamp)) {
        return Err(Error::domain("psi", format!("need 0 < y <= 2x, got x = {x}, y = {y}")));
    }
    let c = (y * T::lit(0.5)).tanh() / x.tanh();
    safe_inverse(InverseKind::Arccos, c, tol)
}

/// Angular radius, seen from the centre, of the cap cut from a ball of
/// radius `r` by a plane at distance `w`: `arccos(tanh w / tanh r)`.
pub fn cap_angle_theta<T: Real>(w: T, r: T, tol: &Tolerances<T>) -> Result<T> {
    if !(w > T::zero()) || !(w <= r) {
        return Err(Error::domain(
            "cap_angle_theta",
            format!("need 0 < w < R, got w = {w}, R = {r}"),
        ));
    }
    safe_inverse(InverseKind::Arccos, w.tanh() / r.tanh(), tol)
}

/// Distance between points on opposite sides of a line, at distances `r1`
/// and `r2` from it, whose projections onto the line are `h` apart.
pub fn sigma_dist<T: Real>(h: T, r1: T, r2: T, tol: &Tolerances<T>) -> Result<T> {
    if !(h >= T::zero() && r1 >= T::zero() && r2 >= T::zero()) {
        return Err(Error::domain("sigma_dist", "arguments must be non-negative"));
    }
    let c = r1.sinh() * r2.sinh() + r1.cosh() * r2.cosh() * h.cosh();
    safe_inverse(InverseKind::Arccosh, c, tol)
}

#[inline]
fn logistic_tail<T: Real>(x: T) -> T {
    // 1 / (1 + e^x)
    if x > T::zero() {
        let e = (-x).exp();
        e / (T::one() + e)
    } else {
        T::one() / (T::one() + x.exp())
    }
}

/// Slack `1/2 - 1/(1+e^D) - 1/(1+e^λ)`; positive exactly on the admissible set.
pub(crate) fn x_slack<T: Real>(d: T, lambda: T) -> T {
    T::lit(0.5) - logistic_tail(d) - logistic_tail(lambda)
}

/// Membership in the open set `{(D, λ) : 1/(1+e^D) + 1/(1+e^λ) < 1/2}`.
pub fn in_x<T: Real>(d: T, lambda: T) -> bool {
    x_slack(d, lambda) > T::zero()
}

/// The radius function `½ log((k-2)/(1/2 - 1/(1+e^D) - 1/(1+e^λ)) - 1)`.
pub fn rho_k<T: Real>(k: u32, d: T, lambda: T) -> Result<T> {
    if k <= 2 {
        return Err(Error::domain("rho_k", format!("k must exceed 2, got {k}")));
    }
    let slack = x_slack(d, lambda);
    if !(slack > T::zero()) {
        return Err(Error::domain(
            "rho_k",
            format!("(D, λ) = ({d}, {lambda}) lies outside the admissible set"),
        ));
    }
    let km2 = T::from_u32(k - 2).expect("small integer");
    Ok(T::lit(0.5) * (km2 / slack - T::one()).ln())
}

/// Like [`rho_k`], but returns `+∞` on the boundary of the admissible set
/// (slack within `domain_clamp` of zero), which is the limit approached from
/// inside.
pub(crate) fn rho_k_closed<T: Real>(k: u32, d: T, lambda: T, tol: &Tolerances<T>) -> Result<T> {
    let slack = x_slack(d, lambda);
    if slack <= T::zero() && slack >= -tol.domain_clamp {
        return Ok(T::infinity());
    }
    rho_k(k, d, lambda)
}

/// `½ log((e^l + 3)/(e^l - 1))`, the value with
/// `1/(1+e^l) + 1/(1+e^{2ρ}) = 1/2`.
pub fn rho_short<T: Real>(l: T) -> Result<T> {
    if !(l > T::zero()) {
        return Err(Error::domain("rho_short", format!("l must be positive, got {l}")));
    }
    let em1 = l.exp_m1();
    Ok(T::lit(0.5) * ((em1 + T::lit(4.0)) / em1).ln())
}

/// Circumradius `h_n(R)` of the regular `n`-simplex (`n` = 2 triangle,
/// `n` = 3 tetrahedron) with edge length `2R`.
pub fn h_n<T: Real>(n: u32, r: T, tol: &Tolerances<T>) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::domain("h_n", format!("R must be positive, got {r}")));
    }
    let num = T::lit(2.0) * r.sinh().powi(2);
    let sinh2_2r = (r + r).sinh().powi(2);
    // cosh²2R - cosh²x = sinh²2R - sinh²x
    let h2 = {
        let den = (sinh2_2r - r.sinh().powi(2)).sqrt();
        safe_inverse(InverseKind::Arctanh, num / den, tol)?
    };
    match n {
        2 => Ok(h2),
        3 => {
            let den = (sinh2_2r - h2.sinh().powi(2)).sqrt();
            safe_inverse(InverseKind::Arctanh, num / den, tol)
        }
        _ => Err(Error::domain("h_n", format!("only n = 2, 3 are supported, got {n}"))),
    }
}

pub fn h2<T: Real>(r: T, tol: &Tolerances<T>) -> Result<T> {
    h_n(2, r, tol)
}

pub fn h3<T: Real>(r: T, tol: &Tolerances<T>) -> Result<T> {
    h_n(3, r, tol)
}
