//! Property and domination checks shared by the core tests and the
//! acceptance run. Each check reports a pass flag and a one-line detail.

#![allow(dead_code)]

use hypvol_core::bounds::{HalfOpenInterval, MnearMode, VolumeBounds};
use hypvol_core::caps::{iota_general, iota_zero_axis, kappa, sigma_union};
use hypvol_core::hyptrig::{ball_volume, boroczky_profile, phi_n, rho_short};
use hypvol_core::verify::{GridSpec, EVIL_STAR_INTERVALS};
use hypvol_core::Tolerances64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Check { name, passed, detail }
    }
}

fn tol() -> Tolerances64 {
    Tolerances64::default()
}

fn vb() -> VolumeBounds<f64> {
    VolumeBounds::standard().unwrap()
}

/// `ι(R, w, 0, α) + ι(R, w, 0, π - α) = κ(R, w)`, once through the
/// zero-axis formula and once with the acute side evaluated through the
/// general split formula with a nearly central first plane.
pub fn complements(samples: usize, seed: u64) -> Vec<Check> {
    let t = tol();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut direct, mut split) = (0.0f64, 0.0f64);
    for _ in 0..samples {
        let r: f64 = rng.gen_range(0.2..2.0);
        let w = r * rng.gen_range(0.0..0.95);
        let a: f64 = rng.gen_range(0.0..std::f64::consts::FRAC_PI_2);
        let k = kappa(r, w).unwrap();
        let obtuse = iota_zero_axis(r, w, std::f64::consts::PI - a, &t).unwrap();
        direct = direct.max((iota_zero_axis(r, w, a, &t).unwrap() + obtuse - k).abs());
        let eps = 1e-10;
        let acute = iota_general(r, eps, w.max(2.0 * eps), a, &t)
            .unwrap_or_else(|e| panic!("r={r:e} w={w:e} a={a:e}: {e}"));
        split = split.max((acute + obtuse - k).abs());
    }
    vec![
        Check::new("complements (zero-axis)", direct < 1e-6, format!("max residual {direct:.3e} over {samples} samples")),
        Check::new("complements (split path)", split < 1e-6, format!("max residual {split:.3e} over {samples} samples")),
    ]
}

/// `nδ ≤ Φn(δ, D) ≤ nD` for `δ ≤ D`.
pub fn phi_sandwich(samples: usize, seed: u64) -> Check {
    let t = tol();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::INFINITY;
    for _ in 0..samples {
        let n: u32 = rng.gen_range(1..8);
        let delta: f64 = rng.gen_range(0.01..2.0);
        let d = delta + rng.gen_range(0.0..2.0);
        let v = phi_n(n, delta, d, &t).unwrap();
        let nf = n as f64;
        // Slack relative to the sandwich, negative when violated.
        let slack = (v - nf * delta).min(nf * d - v) + 1e-12 * nf * d;
        worst = worst.min(slack);
    }
    Check::new("phi sandwich", worst >= 0.0, format!("min slack {worst:.3e} over {samples} tuples"))
}

/// σ decreasing in the third argument and increasing in the angle on a grid.
pub fn sigma_monotone() -> Check {
    let t = tol();
    let n = 12;
    let mut violations = 0;
    let mut checked = 0;
    for &r in &[0.5, 0.97, 1.5] {
        for i in 0..n {
            let w = r * i as f64 / n as f64;
            let wp_at = |j: usize| r * 1.1 * j as f64 / n as f64;
            let a_at = |k: usize| std::f64::consts::PI * k as f64 / n as f64;
            for j in 0..=n {
                for k in 0..=n {
                    let s = sigma_union(r, w, wp_at(j), a_at(k), &t).unwrap();
                    let eps = 1e-10 * s.abs().max(1.0);
                    if j < n {
                        checked += 1;
                        if sigma_union(r, w, wp_at(j + 1), a_at(k), &t).unwrap() > s + eps {
                            violations += 1;
                        }
                    }
                    if k < n {
                        checked += 1;
                        if sigma_union(r, w, wp_at(j), a_at(k + 1), &t).unwrap() < s - eps {
                            violations += 1;
                        }
                    }
                }
            }
        }
    }
    Check::new("sigma monotone", violations == 0, format!("{violations} violations in {checked} comparisons"))
}

/// `V_far(·, λ)` decreasing in the displacement on the admissible set.
pub fn v_far_monotone(samples: usize, seed: u64) -> Check {
    let v = vb();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambda0 = v.constants.lambda0;
    let mut violations = 0;
    for _ in 0..samples {
        // Admissible displacements at this λ: 1/(1+e^D) < 1/2 - 1/(1+e^λ).
        let lambda = rng.gen_range(1.2..lambda0);
        let d_min = (1.0 / (0.5 - 1.0 / (1.0 + lambda.exp())) - 1.0).ln();
        let a = rng.gen_range(d_min..lambda) + 1e-9;
        let b = rng.gen_range(a..lambda + 1.0);
        if v.v_far(b, lambda).unwrap() > v.v_far(a, lambda).unwrap() {
            violations += 1;
        }
    }
    Check::new("v_far monotone", violations == 0, format!("{violations} violations in {samples} pairs"))
}

/// `1/(1+e^l) + 1/(1+e^{2ρ(l)}) = 1/2`.
pub fn rho_short_identity(samples: usize) -> Check {
    let mut worst = 0.0f64;
    for i in 0..samples {
        let l = 1e-3 * (5000.0f64).powf(i as f64 / (samples - 1) as f64);
        let r = rho_short(l).unwrap();
        let s = 1.0 / (1.0 + l.exp()) + 1.0 / (1.0 + (2.0 * r).exp());
        worst = worst.max((s - 0.5).abs());
    }
    Check::new("rho_short identity", worst < 1e-12, format!("max residual {worst:.3e} on l in [1e-3, 5]"))
}

/// `B(h3(R)) ≥ B(R)/d(R)` on log-spaced radii.
pub fn boroczky_frigate(samples: usize) -> Check {
    let mut worst = f64::INFINITY;
    for i in 0..samples {
        let r = 0.05 * (40.0f64).powf(i as f64 / (samples - 1) as f64);
        let p = boroczky_profile(r, &tol()).unwrap();
        let lhs = ball_volume(p.h3).unwrap();
        let rhs = p.ball_over_density().unwrap();
        worst = worst.min(lhs / rhs - 1.0);
    }
    Check::new("B(h3) >= B/d", worst >= 0.0, format!("min relative margin {worst:.3e} on R in [0.05, 2]"))
}

/// `V*_N(l, y)` decreasing in `l` and increasing in `y` on
/// `[0.003, δ0] × [0, 0.5]`, the monotonicity the rectangle bound rests on.
pub fn v_n_star_monotone(nl: usize, ny: usize) -> Check {
    let v = vb();
    let (l0, l1) = (0.003, v.constants.delta0);
    let l_at = |i: usize| l0 + (l1 - l0) * i as f64 / nl as f64;
    let y_at = |j: usize| 0.5 * j as f64 / ny as f64;
    let mut violations = 0;
    for j in 0..=ny {
        let mut prev = v.v_n_star(l_at(0), y_at(j)).unwrap();
        for i in 1..=nl {
            let cur = v.v_n_star(l_at(i), y_at(j)).unwrap();
            if cur > prev {
                violations += 1;
            }
            prev = cur;
        }
    }
    for i in 0..=nl {
        let mut prev = v.v_n_star(l_at(i), 0.0).unwrap();
        for j in 1..=ny {
            let cur = v.v_n_star(l_at(i), y_at(j)).unwrap();
            if cur < prev {
                violations += 1;
            }
            prev = cur;
        }
    }
    Check::new(
        "V*_N monotone",
        violations == 0,
        format!("{violations} violations on a {nl} x {ny} grid"),
    )
}

fn pick<T: Copy>(rng: &mut ChaCha8Rng, items: &[T], count: usize) -> Vec<T> {
    let mut idx: Vec<usize> = (0..items.len()).collect();
    for i in 0..count.min(idx.len()) {
        let j = rng.gen_range(i..idx.len());
        idx.swap(i, j);
    }
    idx[..count.min(items.len())].iter().map(|&i| items[i]).collect()
}

/// Interval and rectangle bounds against the pointwise functions they bound,
/// at `per_cell` uniform interior samples on `cells` random cells of each
/// default grid.
pub fn domination(cells: usize, per_cell: usize, seed: u64) -> Vec<Check> {
    let v = vb();
    let lambda0 = v.constants.lambda0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    // Long-geodesic sweep cells: m_near + V_far(b) and m_near alone.
    let intervals = GridSpec::no_short_geodesic().intervals().unwrap();
    let mut sum_worst = f64::INFINITY;
    let mut near_worst = f64::INFINITY;
    let picked = pick(&mut rng, &intervals, cells);
    for i in &picked {
        let bound = v.m_near(i, MnearMode::Sound).unwrap();
        let cell = bound + v.v_far(i.hi, lambda0).unwrap();
        for _ in 0..per_cell {
            let d = rng.gen_range(i.lo..i.hi);
            let near = v.v_near(d).unwrap();
            near_worst = near_worst.min(near - bound);
            sum_worst = sum_worst.min(near + v.v_far(d, lambda0).unwrap() - cell);
        }
    }
    let n = picked.len() * per_cell;
    out.push(Check::new("m_near <= v_near", near_worst >= -1e-12, format!("min margin {near_worst:.3e} at {n} samples")));
    out.push(Check::new(
        "interval sum <= pointwise sum",
        sum_worst >= -1e-12,
        format!("min margin {sum_worst:.3e} at {n} samples"),
    ));

    // Short-geodesic sweep cells: W_S, χ_S and V_N^S.
    let rects = GridSpec::short_geodesic().rectangles().unwrap();
    let (mut w_worst, mut chi_worst, mut vn_worst) = (f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let picked = pick(&mut rng, &rects, cells);
    for s in &picked {
        let b = v.rect_bounds(s).unwrap();
        for _ in 0..per_cell {
            let l = rng.gen_range(s.l_lo..s.l_hi);
            let y = rng.gen_range(s.y_lo..s.y_hi);
            w_worst = w_worst.min(v.w_star(l, y).unwrap() - b.w_s);
            chi_worst = chi_worst.min(v.chi(l, y).unwrap() - b.chi_s);
            vn_worst = vn_worst.min(v.v_n_star(l, y).unwrap() - b.v_n_s);
        }
    }
    let n = picked.len() * per_cell;
    out.push(Check::new("W_S <= W*", w_worst >= -1e-12, format!("min margin {w_worst:.3e} at {n} samples")));
    out.push(Check::new("chi_S <= chi", chi_worst >= -1e-12, format!("min margin {chi_worst:.3e} at {n} samples")));
    out.push(Check::new("V_N^S <= V*_N", vn_worst >= -1e-12, format!("min margin {vn_worst:.3e} at {n} samples")));

    // Three-fold gap: Δ(a, b) bounds the pointwise gap from above.
    let mut gap_worst = f64::INFINITY;
    for &(a, b) in &EVIL_STAR_INTERVALS {
        let i = HalfOpenInterval::new(a, b).unwrap();
        let delta = v.delta_ab(i.lo, i.hi).unwrap();
        for _ in 0..per_cell {
            let d = rng.gen_range(a..b);
            let gap = v.grand_duke_gap(d, v.t_n(3, d).unwrap(), lambda0).unwrap();
            gap_worst = gap_worst.min(delta - gap);
        }
    }
    out.push(Check::new(
        "gap <= Δ(a, b)",
        gap_worst >= -1e-12,
        format!("min margin {gap_worst:.3e} at {} samples", EVIL_STAR_INTERVALS.len() * per_cell),
    ));
    out
}
