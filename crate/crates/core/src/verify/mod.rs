//! Grid sweeps that certify the volume bounds.
//!
//! Each driver evaluates a bound on every cell of a grid, in parallel, and
//! reduces to a [`VerificationReport`]. The reduction runs over cells in
//! sweep order, so the report does not depend on the thread count.

mod grid;
mod report;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::{HalfOpenInterval, MnearMode, VolumeBounds};
use crate::error::{Error, Result};

pub use grid::{grid_point, Cell, GridSpec, Region};
pub use report::{canonical_json, CellResult, LemmaId, Sense, VerificationReport};

/// The five intervals on which the three-fold displacement gap is checked.
pub const EVIL_STAR_INTERVALS: [(f64, f64); 5] =
    [(0.58, 0.63), (0.63, 0.67), (0.67, 0.68), (0.68, 0.69), (0.69, 0.7)];

/// Evaluates `f` on every cell in parallel and returns results in input
/// order. The first failing cell by index is reported, wrapped in
/// [`Error::Cell`].
fn sweep<C, F>(cells: &[C], describe: impl Fn(&C) -> Cell + Sync, f: F) -> Result<Vec<CellResult>>
where
    C: Sync,
    F: Fn(&C) -> Result<(f64, String, BTreeMap<String, f64>)> + Sync,
{
    let results: Vec<Result<CellResult>> = cells
        .par_iter()
        .enumerate()
        .map(|(index, c)| {
            let cell = describe(c);
            match f(c) {
                Ok((value, branch, aux)) => Ok(CellResult {
                    index,
                    cell,
                    value,
                    branch,
                    aux,
                }),
                Err(e) => Err(Error::Cell {
                    index,
                    cell: cell.to_string(),
                    source: Box::new(e),
                }),
            }
        })
        .collect();
    results.into_iter().collect()
}

/// Checks that the interval gap `Δ(a, b)` is negative on the five intervals
/// covering `[0.58, 0.7)`.
pub fn verify_evil_star(vb: &VolumeBounds<f64>) -> Result<VerificationReport> {
    let start = Instant::now();
    let intervals = EVIL_STAR_INTERVALS
        .iter()
        .map(|&(a, b)| HalfOpenInterval::new(a, b))
        .collect::<Result<Vec<_>>>()?;
    let cells = sweep(&intervals, Cell::interval, |i| {
        Ok((vb.delta_ab(i.lo, i.hi)?, "delta".to_string(), BTreeMap::new()))
    })?;
    let mut r = VerificationReport::from_cells(
        LemmaId::EvilStar,
        None,
        0.0,
        Sense::Below,
        cells,
        None,
        BTreeMap::new(),
    )?;
    r.timing_seconds = start.elapsed().as_secs_f64();
    Ok(r)
}

/// Bounds the volume when the shortest geodesic is long: on each interval
/// `[a, b)` the cell value is `m_near([a, b)) + V_far(b, λ0)`.
///
/// `V_far` is decreasing in the displacement, so the right endpoint gives a
/// lower bound on the whole cell. The left-endpoint sum is recorded in the
/// cell's `aux` as `bound_left`, and its minimum in the report's `aux`.
pub fn verify_no_short_geodesic(
    vb: &VolumeBounds<f64>,
    grid: &GridSpec,
    mode: MnearMode,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let lambda0 = vb.constants.lambda0;
    let intervals = grid.intervals()?;
    let cells = sweep(&intervals, Cell::interval, |i| {
        let m = vb.m_near(i, mode)?;
        let right = vb.v_far(i.hi, lambda0)?;
        let left = vb.v_far(i.lo, lambda0)?;
        let branch = if vb.near_uses_t3(i.lo) { "t3" } else { "t2" };
        let aux = BTreeMap::from([
            ("m_near".to_string(), m),
            ("v_far_right".to_string(), right),
            ("v_far_left".to_string(), left),
            ("bound_left".to_string(), m + left),
        ]);
        Ok((m + right, branch.to_string(), aux))
    })?;
    let min_left = cells
        .iter()
        .map(|c| c.aux["bound_left"])
        .fold(f64::INFINITY, f64::min);
    let aux = BTreeMap::from([("min_bound_left".to_string(), min_left)]);
    let mut r = VerificationReport::from_cells(
        LemmaId::NoShortGeodesic,
        Some(mode),
        vb.constants.vol_threshold,
        Sense::Above,
        cells,
        None,
        aux,
    )?;
    r.timing_seconds = start.elapsed().as_secs_f64();
    Ok(r)
}

/// Bounds the volume when a short geodesic exists: the cell value on each
/// rectangle is `W_S`. The closure value `V*_N(δ0, 0.5)` covers offsets
/// beyond the grid and must also exceed the threshold.
pub fn verify_short_geodesic(vb: &VolumeBounds<f64>, grid: &GridSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    let rects = grid.rectangles()?;
    let cells = sweep(&rects, Cell::rectangle, |s| {
        let b = vb.rect_bounds(s)?;
        let mut aux = BTreeMap::from([
            ("chi_s".to_string(), b.chi_s),
            ("v_minus".to_string(), b.v_minus),
            ("v_n_s".to_string(), b.v_n_s),
        ]);
        if let Some(p) = b.v_plus {
            aux.insert("v_plus".to_string(), p);
        }
        let branch = if b.used_plus { "v_plus" } else { "v_minus" };
        Ok((b.w_s, branch.to_string(), aux))
    })?;
    let plus = cells.iter().filter(|c| c.branch == "v_plus").count();
    let aux = BTreeMap::from([
        ("cells_v_plus".to_string(), plus as f64),
        ("cells_v_minus".to_string(), (cells.len() - plus) as f64),
    ]);
    let closure = vb.v_n_star(vb.constants.delta0, 0.5)?;
    let mut r = VerificationReport::from_cells(
        LemmaId::ShortGeodesic,
        None,
        vb.constants.vol_threshold,
        Sense::Above,
        cells,
        Some(closure),
        aux,
    )?;
    r.timing_seconds = start.elapsed().as_secs_f64();
    Ok(r)
}
