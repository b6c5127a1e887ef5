use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::Tolerances;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub error_estimate: T,
    pub subdivisions: usize,
}

// 21-point Kronrod extension of the 10-point Gauss rule on [-1, 1].
// Odd indices of XGK are the Gauss abscissae.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

impl<T: Real> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: Real> Eq for Panel<T> {}
impl<T: Real> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Panel<T> {
    // Max-heap on the error estimate; ties broken by position so that the
    // refinement order is reproducible.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

fn eval<T, F>(f: &mut F, x: T) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let y = f(x)?;
    if y.is_nan() {
        return Err(Error::domain(
            "integrate_adaptive",
            format!("integrand returned NaN at {x}"),
        ));
    }
    if y.is_infinite() {
        return Err(Error::domain(
            "integrate_adaptive",
            format!("integrand is not finite at {x}"),
        ));
    }
    Ok(y)
}

/// One Gauss-Kronrod 10/21 panel with the QUADPACK error heuristic.
fn gk21<T, F>(f: &mut F, a: T, b: T) -> Result<Panel<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let half = T::lit(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);
    let abs_half = half_len.abs();

    let fc = eval(f, center)?;
    let mut res_k = fc * T::lit(WGK[10]);
    let mut res_g = T::zero();
    let mut res_abs = res_k.abs();
    let mut samples = [(T::zero(), T::zero()); 10];

    for j in 0..10 {
        let dx = half_len * T::lit(XGK[j]);
        let f1 = eval(f, center - dx)?;
        let f2 = eval(f, center + dx)?;
        samples[j] = (f1, f2);
        let wk = T::lit(WGK[j]);
        res_k = res_k + wk * (f1 + f2);
        res_abs = res_abs + wk * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g = res_g + T::lit(WG[j / 2]) * (f1 + f2);
        }
    }

    let mean = res_k * half;
    let mut res_asc = T::lit(WGK[10]) * (fc - mean).abs();
    for (j, &(f1, f2)) in samples.iter().enumerate() {
        res_asc = res_asc + T::lit(WGK[j]) * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let value = res_k * half_len;
    res_abs = res_abs * abs_half;
    res_asc = res_asc * abs_half;
    let mut error = ((res_k - res_g) * half_len).abs();
    if res_asc != T::zero() && error != T::zero() {
        let scale = (T::lit(200.0) * error / res_asc).powf(T::lit(1.5));
        error = res_asc * scale.min(T::one());
    }
    let floor = T::lit(50.0) * T::epsilon() * res_abs;
    if floor > error {
        error = floor;
    }
    Ok(Panel { a, b, value, error })
}

/// Integrates a fallible integrand over `[a, b]` by adaptive bisection of
/// Gauss-Kronrod panels.
///
/// Converges when the summed error estimate is at most
/// `max(quad_abs, quad_rel * |value|)`; otherwise reports
/// [`Error::Convergence`] once `max_panels` is exhausted or a panel can no
/// longer be split in the working precision.
pub fn try_integrate_adaptive<T, F>(
    mut f: F,
    a: T,
    b: T,
    tol: &Tolerances<T>,
) -> Result<QuadratureResult<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    if !(a <= b) {
        return Err(Error::domain(
            "integrate_adaptive",
            format!("expected a <= b, got [{a}, {b}]"),
        ));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: T::zero(),
            error_estimate: T::zero(),
            subdivisions: 1,
        });
    }

    let first = gk21(&mut f, a, b)?;
    let mut total = first.value;
    let mut total_err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut panels = 1usize;

    let target = |v: T| tol.quad_abs.max(tol.quad_rel * v.abs());

    while total_err > target(total) {
        let worst = heap.pop().expect("heap is never empty");
        let mid = T::lit(0.5) * (worst.a + worst.b);
        let stalled = !(mid > worst.a && mid < worst.b);
        if panels >= tol.max_panels || stalled {
            return Err(Error::Convergence {
                a: a.as_f64(),
                b: b.as_f64(),
                value: total.as_f64(),
                error_estimate: total_err.as_f64(),
                subdivisions: panels,
            });
        }
        let left = gk21(&mut f, worst.a, mid)?;
        let right = gk21(&mut f, mid, worst.b)?;
        total = total - worst.value + left.value + right.value;
        total_err = total_err - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
        panels += 1;

        // Re-sum occasionally so the running totals do not drift.
        if panels.is_multiple_of(64) {
            total = heap.iter().fold(T::zero(), |s, p| s + p.value);
            total_err = heap.iter().fold(T::zero(), |s, p| s + p.error);
        }
    }

    let value = heap.iter().fold(T::zero(), |s, p| s + p.value);
    let error_estimate = heap.iter().fold(T::zero(), |s, p| s + p.error);
    Ok(QuadratureResult {
        value,
        error_estimate,
        subdivisions: panels,
    })
}

/// Infallible-integrand form of [`try_integrate_adaptive`].
pub fn integrate_adaptive<T, F>(
    mut f: F,
    a: T,
    b: T,
    tol: &Tolerances<T>,
) -> Result<QuadratureResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    try_integrate_adaptive(|x| Ok(f(x)), a, b, tol)
}
