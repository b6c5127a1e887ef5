//! Seeded Monte-Carlo volume estimates in the upper half-space model.
//!
//! Points `(x, y, t)` are sampled in a Euclidean box against the hyperbolic
//! volume density `1/t³`. Membership is decided in the
//! hyperboloid model: the ball of radius `R` about `e0` is `p0 ≤ cosh R`, and
//! the half-space beyond the plane at distance `w` in unit direction `u` is
//! `<p, sinh w e0 + cosh w u> ≥ 0`. Every such half-space with its normal
//! pointing downwards is the inside of a Euclidean ball, which gives a tight
//! sampling box.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: f64,
    pub std_error: f64,
}

impl Estimate {
    pub fn relative_std(&self) -> f64 {
        self.std_error / self.value.abs()
    }
}

/// Half-space `<p, n> ≥ 0` with Minkowski normal `n`.
#[derive(Debug, Clone, Copy)]
pub struct HalfSpace {
    n: [f64; 4],
}

impl HalfSpace {
    /// Plane at distance `w` from `e0` perpendicular to the spatial unit
    /// vector `u`, keeping the side away from `e0`.
    pub fn new(w: f64, u: [f64; 3]) -> Self {
        let (s, c) = (w.sinh(), w.cosh());
        HalfSpace {
            n: [s, c * u[0], c * u[1], c * u[2]],
        }
    }

    fn contains(&self, p: &[f64; 4]) -> bool {
        -p[0] * self.n[0] + p[1] * self.n[1] + p[2] * self.n[2] + p[3] * self.n[3] >= 0.0
    }

    /// Bounding box in upper half-space coordinates, when the half-space is
    /// a Euclidean ball.
    fn bbox(&self) -> Option<BBox> {
        let [n0, n1, n2, n3] = self.n;
        let a = n3 - n0;
        if a >= 0.0 {
            return None;
        }
        let cx = -n1 / a;
        let cy = -n2 / a;
        let r2 = (n1 * n1 + n2 * n2) / (a * a) + (n0 + n3) / a;
        let r = r2.max(0.0).sqrt();
        Some(BBox {
            lo: [cx - r, cy - r, 0.0],
            hi: [cx + r, cy + r, r],
        })
    }
}

/// Direction in the `x`-`t` plane at angle `beta` from straight down.
pub fn direction(beta: f64) -> [f64; 3] {
    [beta.sin(), 0.0, -beta.cos()]
}

#[derive(Debug, Clone, Copy)]
struct BBox {
    lo: [f64; 3],
    hi: [f64; 3],
}

impl BBox {
    fn ball(r: f64) -> Self {
        let (s, c) = (r.sinh(), r.cosh());
        BBox {
            lo: [-s, -s, c - s],
            hi: [s, s, c + s],
        }
    }

    fn intersect(&self, o: &BBox) -> BBox {
        let mut b = *self;
        for i in 0..3 {
            b.lo[i] = b.lo[i].max(o.lo[i]);
            b.hi[i] = b.hi[i].min(o.hi[i]);
        }
        b
    }

    fn hull(&self, o: &BBox) -> BBox {
        let mut b = *self;
        for i in 0..3 {
            b.lo[i] = b.lo[i].min(o.lo[i]);
            b.hi[i] = b.hi[i].max(o.hi[i]);
        }
        b
    }

    fn volume(&self) -> f64 {
        (0..3).map(|i| (self.hi[i] - self.lo[i]).max(0.0)).product()
    }
}

/// Region: the ball of radius `R` intersected with all of `all`, and with at
/// least one of `any` when `any` is non-empty.
pub struct Region {
    pub radius: f64,
    pub all: Vec<HalfSpace>,
    pub any: Vec<HalfSpace>,
}

impl Region {
    fn bbox(&self) -> BBox {
        let mut b = BBox::ball(self.radius);
        for h in &self.all {
            if let Some(hb) = h.bbox() {
                b = b.intersect(&hb);
            }
        }
        if !self.any.is_empty() {
            let boxes: Option<Vec<BBox>> = self.any.iter().map(|h| h.bbox()).collect();
            if let Some(boxes) = boxes {
                let hull = boxes[1..].iter().fold(boxes[0], |acc, x| acc.hull(x));
                b = b.intersect(&hull);
            }
        }
        b
    }

    fn contains(&self, p: &[f64; 4]) -> bool {
        p[0] <= self.radius.cosh()
            && self.all.iter().all(|h| h.contains(p))
            && (self.any.is_empty() || self.any.iter().any(|h| h.contains(p)))
    }
}

fn hyperboloid(x: f64, y: f64, t: f64) -> [f64; 4] {
    let s = x * x + y * y + t * t;
    [(1.0 + s) / (2.0 * t), x / t, y / t, (s - 1.0) / (2.0 * t)]
}

const CHUNK: usize = 1 << 16;

/// Estimates the hyperbolic volume of `region` from `samples` points drawn
/// with the given seed. Deterministic for a fixed seed and sample count.
///
/// `x` and `y` are uniform in the box and `t` has density proportional to
/// `t⁻³`, so every hit carries the same weight and the estimate is a scaled
/// binomial proportion.
pub fn volume(region: &Region, samples: usize, seed: u64) -> Estimate {
    let b = region.bbox();
    let t_lo = b.lo[2].max(0.0);
    let t_hi = b.hi[2];
    if b.volume() == 0.0 || !(t_hi > t_lo) || t_lo <= 0.0 {
        return Estimate {
            value: 0.0,
            std_error: 0.0,
        };
    }
    let (i_lo, i_hi) = (t_lo.powi(-2), t_hi.powi(-2));
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let n = CHUNK.min(samples - k * CHUNK);
            let mut h = 0u64;
            for _ in 0..n {
                let x = rng.gen_range(b.lo[0]..b.hi[0]);
                let y = rng.gen_range(b.lo[1]..b.hi[1]);
                let u: f64 = rng.gen();
                let t = (i_lo - u * (i_lo - i_hi)).sqrt().recip();
                if region.contains(&hyperboloid(x, y, t)) {
                    h += 1;
                }
            }
            h
        })
        .sum();
    let scale = (b.hi[0] - b.lo[0]) * (b.hi[1] - b.lo[1]) * 0.5 * (i_lo - i_hi);
    let n = samples as f64;
    let p = hits as f64 / n;
    Estimate {
        value: scale * p,
        std_error: scale * (p * (1.0 - p) / n).sqrt(),
    }
}

/// Cap `K(R, w)` pointing straight down.
pub fn cap(r: f64, w: f64) -> Region {
    Region {
        radius: r,
        all: vec![HalfSpace::new(w, direction(0.0))],
        any: vec![],
    }
}

/// Two caps whose directions make angle `alpha`, placed symmetrically about
/// the downward vertical.
pub fn cap_pair(w1: f64, w2: f64, alpha: f64) -> [HalfSpace; 2] {
    [
        HalfSpace::new(w1, direction(alpha / 2.0)),
        HalfSpace::new(w2, direction(-alpha / 2.0)),
    ]
}

pub fn cap_intersection(r: f64, w1: f64, w2: f64, alpha: f64) -> Region {
    Region {
        radius: r,
        all: cap_pair(w1, w2, alpha).to_vec(),
        any: vec![],
    }
}

pub fn cap_union(r: f64, w1: f64, w2: f64, alpha: f64) -> Region {
    Region {
        radius: r,
        all: vec![],
        any: cap_pair(w1, w2, alpha).to_vec(),
    }
}

pub fn ball(r: f64) -> Region {
    Region {
        radius: r,
        all: vec![],
        any: vec![],
    }
}
