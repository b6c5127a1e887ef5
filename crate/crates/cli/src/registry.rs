//! Functions reachable through `hypvol eval`.

use hypvol_core::bounds::{HalfOpenInterval, MnearMode, VolumeBounds};
use hypvol_core::caps::{iota_general, kappa, sigma_union};
use hypvol_core::hyptrig::{
    ball_volume, boroczky_profile, cap_angle_theta, h2, h3, omega, phi_n, psi, rho_k, rho_short, v_bor,
};
use hypvol_core::{Error, Result, Tolerances64};

/// Everything a registered function may depend on besides its arguments.
pub struct Context {
    pub bounds: VolumeBounds<f64>,
    pub tol: Tolerances64,
    pub mode: MnearMode,
}

pub struct Entry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub formula: &'static str,
    run: fn(&Context, &[f64]) -> Result<f64>,
}

impl Entry {
    /// Applies the function; the caller has already checked the arity.
    pub fn call(&self, ctx: &Context, args: &[f64]) -> Result<f64> {
        (self.run)(ctx, args)
    }

    pub fn signature(&self) -> String {
        format!("{}({})", self.name, self.params.join(", "))
    }
}

fn count(op: &'static str, x: f64) -> Result<u32> {
    if x >= 1.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
        Ok(x as u32)
    } else {
        Err(Error::Domain {
            op,
            detail: format!("count must be a positive integer, got {x}"),
        })
    }
}

macro_rules! entry {
    ($name:literal, [$($p:literal),*], $formula:literal, $run:expr) => {
        Entry { name: $name, params: &[$($p),*], formula: $formula, run: $run }
    };
}

pub const ENTRIES: &[Entry] = &[
    entry!("ball_volume", ["r"], "B(r) = π(sinh 2r - 2r)", |_, a| ball_volume(a[0])),
    entry!("kappa", ["R", "w"], "κ(R, w): volume of the cap beyond a plane at distance w from the centre", |_, a| {
        kappa(a[0], a[1])
    }),
    entry!(
        "iota",
        ["R", "w1", "w2", "alpha"],
        "ι(R, w1, w2, α): volume of the intersection of two caps at angle α",
        |c, a| iota_general(a[0], a[1], a[2], a[3], &c.tol)
    ),
    entry!(
        "sigma",
        ["R", "w1", "w2", "alpha"],
        "σ = κ(R, w1) + κ(R, w2) - ι(R, w1, w2, α)",
        |c, a| sigma_union(a[0], a[1], a[2], a[3], &c.tol)
    ),
    entry!(
        "phi_n",
        ["n", "delta", "D"],
        "Φn(δ, D) = 2 asinh(cosh(D/2) sinh(nδ/2) / cosh(δ/2))",
        |c, a| phi_n(count("phi_n", a[0])?, a[1], a[2], &c.tol)
    ),
    entry!("psi", ["x", "y"], "Ψ(x, y) = arccos(tanh(y/2) / tanh x)", |c, a| psi(a[0], a[1], &c.tol)),
    entry!("theta", ["w", "R"], "Θ(w, R) = arccos(tanh w / tanh R)", |c, a| {
        cap_angle_theta(a[0], a[1], &c.tol)
    }),
    entry!(
        "omega",
        ["l", "theta", "D"],
        "ω = asinh(sqrt((cosh D - cosh l) / (cosh l - cos θ)))",
        |c, a| omega(a[0], a[1], a[2], &c.tol)
    ),
    entry!(
        "rho_k",
        ["k", "D", "lambda"],
        "ρk(D, λ) = ½ log((k-2)/(1/2 - 1/(1+e^D) - 1/(1+e^λ)) - 1)",
        |_, a| rho_k(count("rho_k", a[0])?, a[1], a[2])
    ),
    entry!("rho_short", ["l"], "ρ(l) = ½ log((e^l + 3)/(e^l - 1))", |_, a| rho_short(a[0])),
    entry!("h2", ["R"], "circumradius of the regular triangle with side 2R", |c, a| h2(a[0], &c.tol)),
    entry!("h3", ["R"], "circumradius of the regular tetrahedron with edge 2R", |c, a| h3(a[0], &c.tol)),
    entry!(
        "boroczky_d",
        ["r"],
        "d(r) = (3β - π) B(r) / (π τ(r))",
        |c, a| Ok(boroczky_profile(a[0], &c.tol)?.density)
    ),
    entry!(
        "vbor",
        ["R", "rho"],
        "Vbor(R, ρ): packing lower bound for the radius-ρ ball volume",
        |c, a| v_bor(a[0], a[1], &c.tol)
    ),
    entry!(
        "vnear_nought",
        ["D"],
        "B(λ0/2) - 2σ(λ0/2, D/2, T2/2, Ψ(D, T2))",
        |c, a| c.bounds.v_near_nought(a[0])
    ),
    entry!(
        "vnear",
        ["D"],
        "Vnear(D): near-volume lower bound, less 2κ(λ0/2, T3/2) for D ≥ 0.7",
        |c, a| c.bounds.v_near(a[0])
    ),
    entry!(
        "mnear",
        ["a", "b"],
        "mnear([a, b)): lower bound for Vnear on the interval (depends on --mode)",
        |c, a| c.bounds.m_near(&HalfOpenInterval::new(a[0], a[1])?, c.mode)
    ),
    entry!(
        "vfar",
        ["D", "lambda"],
        "Vfar(D, λ) from Z = ρ4(D, λ) - λ/2",
        |c, a| c.bounds.v_far(a[0], a[1])
    ),
    entry!("vn", ["l", "lambda"], "VN(l, λ) = B(λ/2) - 2κ(λ/2, l/2)", |c, a| c.bounds.v_n(a[0], a[1])),
    entry!("w", ["l", "lambda"], "W(l, λ) = Vfar(l, λ) + VN(l, λ)", |c, a| c.bounds.w_total(a[0], a[1])),
    entry!("wstar", ["l", "y"], "W*(l, y) = W(l, 2ρ(l) + y)", |c, a| c.bounds.w_star(a[0], a[1])),
    entry!(
        "chi",
        ["l", "y"],
        "χ(l, y) = ρ4(l, λ) - (h + λ/2) with λ = 2ρ(l) + y",
        |c, a| c.bounds.chi(a[0], a[1])
    ),
    entry!(
        "delta_ab",
        ["a", "b"],
        "Δ(a, b): upper bound for the three-fold displacement gap on [a, b]",
        |c, a| c.bounds.delta_ab(a[0], a[1])
    ),
];

pub fn lookup(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}
