use super::Tolerances;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_ITER: usize = 400;

/// Finds the root of a continuous monotone function on `[lo, hi]`.
///
/// Illinois false position with a bisection step whenever an iteration fails
/// to halve the bracket. Stops when the bracket is narrower than `root_tol`
/// (plus a few ulps of the endpoints) or an exact zero is hit; the returned
/// point always lies in `[lo, hi]`.
pub fn solve_bracketed<T, G>(mut g: G, lo: T, hi: T, tol: &Tolerances<T>) -> Result<T>
where
    T: Real,
    G: FnMut(T) -> T,
{
    if !(lo <= hi) {
        return Err(Error::domain(
            "solve_bracketed",
            format!("expected lo <= hi, got [{lo}, {hi}]"),
        ));
    }
    let (mut a, mut b) = (lo, hi);
    let mut fa = g(a);
    let mut fb = g(b);
    if fa.is_nan() || fb.is_nan() {
        return Err(Error::domain("solve_bracketed", "function is NaN at an endpoint"));
    }
    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket {
            lo: lo.as_f64(),
            hi: hi.as_f64(),
            g_lo: fa.as_f64(),
            g_hi: fb.as_f64(),
        });
    }

    let four_eps = T::lit(4.0) * T::epsilon();
    let mut bisect = false;
    // which end was retained on the previous step: -1 for a, +1 for b
    let mut retained = 0i8;
    for _ in 0..MAX_ITER {
        let width = b - a;
        if width <= tol.root_tol + four_eps * a.abs().max(b.abs()) {
            break;
        }
        let mut x = (a * fb - b * fa) / (fb - fa);
        if bisect || !(x > a && x < b) {
            x = a + width * T::lit(0.5);
        }
        let fx = g(x);
        if fx.is_nan() {
            return Err(Error::domain("solve_bracketed", format!("function is NaN at {x}")));
        }
        if fx == T::zero() {
            return Ok(x);
        }
        if fx.signum() == fb.signum() {
            b = x;
            fb = fx;
            if retained == -1 {
                fa = fa * T::lit(0.5);
            }
            retained = -1;
        } else {
            a = x;
            fa = fx;
            if retained == 1 {
                fb = fb * T::lit(0.5);
            }
            retained = 1;
        }
        bisect = b - a > width * T::lit(0.5);
    }
    // Illinois halving rescales fa/fb, so compare the true residuals.
    let (ga, gb) = (g(a).abs(), g(b).abs());
    Ok(if ga <= gb { a } else { b })
}
