//! Randomized cap instances compared against the Monte-Carlo oracle.
//!
//! Instances are drawn from a seeded generator and kept only when the
//! oracle can resolve them: an instance whose estimate has relative standard
//! error above `max_rel_std` is redrawn. Instances the library classifies as
//! empty must come back from the oracle with no hits at all.

#![allow(dead_code)]

use std::fmt;

use hypvol_core::caps::{iota_general, kappa, sigma_union};
use hypvol_core::hyptrig::cap_angle_theta;
use hypvol_core::Tolerances64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::{self, Estimate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Kappa,
    Iota,
    Sigma,
}

/// Which branch of the two-cap intersection formula an instance exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IotaPath {
    /// Both planes through the centre.
    Lune,
    /// One plane through the centre, obtuse angle.
    Obtuse,
    /// One plane through the centre, acute angle.
    Acute,
    Nested,
    Disjoint,
    Split,
}

pub const IOTA_PATHS: [IotaPath; 6] = [
    IotaPath::Lune,
    IotaPath::Obtuse,
    IotaPath::Acute,
    IotaPath::Nested,
    IotaPath::Disjoint,
    IotaPath::Split,
];

#[derive(Debug, Clone, Copy)]
pub struct Instance {
    pub quantity: Quantity,
    pub r: f64,
    pub w1: f64,
    pub w2: f64,
    pub alpha: f64,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.quantity {
            Quantity::Kappa => write!(f, "kappa(R={:.4}, w={:.4})", self.r, self.w1),
            Quantity::Iota | Quantity::Sigma => write!(
                f,
                "{}(R={:.4}, w1={:.4}, w2={:.4}, α={:.4})",
                if self.quantity == Quantity::Iota { "iota" } else { "sigma" },
                self.r,
                self.w1,
                self.w2,
                self.alpha
            ),
        }
    }
}

fn tol() -> Tolerances64 {
    Tolerances64::default()
}

/// Classifies `(w1, w2, α)` the way the intersection formula dispatches.
pub fn classify(r: f64, w1: f64, w2: f64, alpha: f64) -> IotaPath {
    let (w1, w2) = (w1.min(w2), w1.max(w2));
    if w1 == 0.0 {
        return if w2 == 0.0 {
            IotaPath::Lune
        } else if alpha > std::f64::consts::FRAC_PI_2 {
            IotaPath::Obtuse
        } else {
            IotaPath::Acute
        };
    }
    let p1 = cap_angle_theta(w1, r, &tol()).unwrap();
    let p2 = cap_angle_theta(w2, r, &tol()).unwrap();
    if alpha <= p1 - p2 {
        IotaPath::Nested
    } else if alpha > p1 + p2 {
        IotaPath::Disjoint
    } else {
        IotaPath::Split
    }
}

fn draw_iota(rng: &mut ChaCha8Rng, path: IotaPath) -> Option<(f64, f64, f64, f64)> {
    use std::f64::consts::{FRAC_PI_2, PI};
    let r: f64 = rng.gen_range(0.4..1.3);
    let w = |rng: &mut ChaCha8Rng| -> f64 { r * rng.gen_range(0.05..0.7) };
    let (w1, w2, alpha) = match path {
        IotaPath::Lune => (0.0, 0.0, rng.gen_range(0.2..2.9)),
        IotaPath::Obtuse => (0.0, w(rng), rng.gen_range(FRAC_PI_2 + 0.05..2.6)),
        IotaPath::Acute => (0.0, w(rng), rng.gen_range(0.1..FRAC_PI_2 - 0.05)),
        _ => {
            let (a, b) = (w(rng), w(rng));
            let (w1, w2) = (a.min(b), a.max(b));
            let p1 = cap_angle_theta(w1, r, &tol()).unwrap();
            let p2 = cap_angle_theta(w2, r, &tol()).unwrap();
            let alpha = match path {
                IotaPath::Nested => rng.gen_range(0.0..1.0) * (p1 - p2),
                IotaPath::Disjoint if p1 + p2 < PI - 0.02 => rng.gen_range(p1 + p2 + 0.01..PI),
                IotaPath::Disjoint => return None,
                _ => rng.gen_range(p1 - p2 + 1e-3..p1 + p2),
            };
            // Either order of the plane distances.
            if rng.gen_bool(0.5) {
                (w1, w2, alpha)
            } else {
                (w2, w1, alpha)
            }
        }
    };
    (classify(r, w1, w2, alpha) == path).then_some((r, w1, w2, alpha))
}

fn draw(rng: &mut ChaCha8Rng, quantity: Quantity, path: Option<IotaPath>) -> Instance {
    loop {
        let candidate = match quantity {
            Quantity::Kappa => {
                let r = rng.gen_range(0.3..1.4);
                Some((r, r * rng.gen_range(0.0..0.8), 0.0, 0.0))
            }
            _ => {
                let p = path.unwrap_or_else(|| IOTA_PATHS[rng.gen_range(0..IOTA_PATHS.len())]);
                draw_iota(rng, p)
            }
        };
        if let Some((r, w1, w2, alpha)) = candidate {
            return Instance {
                quantity,
                r,
                w1,
                w2,
                alpha,
            };
        }
    }
}

impl Instance {
    pub fn library(&self) -> f64 {
        let t = tol();
        match self.quantity {
            Quantity::Kappa => kappa(self.r, self.w1).unwrap(),
            Quantity::Iota => iota_general(self.r, self.w1, self.w2, self.alpha, &t).unwrap(),
            Quantity::Sigma => sigma_union(self.r, self.w1, self.w2, self.alpha, &t).unwrap(),
        }
    }

    pub fn oracle(&self, samples: usize, seed: u64) -> Estimate {
        let region = match self.quantity {
            Quantity::Kappa => oracle::cap(self.r, self.w1),
            Quantity::Iota => oracle::cap_intersection(self.r, self.w1, self.w2, self.alpha),
            Quantity::Sigma => oracle::cap_union(self.r, self.w1, self.w2, self.alpha),
        };
        oracle::volume(&region, samples, seed)
    }
}

#[derive(Debug, Clone)]
pub struct Comparison {
    pub instance: Instance,
    pub path: Option<IotaPath>,
    pub library: f64,
    pub oracle: Estimate,
    /// `|library - oracle| / |library|`, or 0 when both are exactly zero.
    pub rel_err: f64,
}

impl Comparison {
    pub fn is_empty(&self) -> bool {
        self.library == 0.0
    }
}

/// Draws instances until `count` resolvable ones have been compared.
///
/// With `path` set, iota and sigma instances are drawn from that branch
/// only; otherwise branches are chosen at random. Returns the comparisons
/// and the number of redrawn instances.
pub fn run(
    quantity: Quantity,
    path: Option<IotaPath>,
    count: usize,
    samples: usize,
    max_rel_std: f64,
    seed: u64,
) -> (Vec<Comparison>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut redrawn = 0;
    let mut k = 0u64;
    while out.len() < count {
        let instance = draw(&mut rng, quantity, path);
        let library = instance.library();
        let estimate = instance.oracle(samples, seed.wrapping_mul(1_000_003).wrapping_add(k));
        k += 1;
        let rel_err = if library == 0.0 && estimate.value == 0.0 {
            0.0
        } else if library == 0.0 {
            f64::INFINITY
        } else {
            if estimate.relative_std() > max_rel_std {
                redrawn += 1;
                continue;
            }
            ((library - estimate.value) / library).abs()
        };
        let path = (quantity != Quantity::Kappa)
            .then(|| classify(instance.r, instance.w1, instance.w2, instance.alpha));
        out.push(Comparison {
            instance,
            path,
            library,
            oracle: estimate,
            rel_err,
        });
    }
    (out, redrawn)
}
