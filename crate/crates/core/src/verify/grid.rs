use serde::{Deserialize, Serialize};

use crate::bounds::{HalfOpenInterval, ParamRectangle};
use crate::error::{Error, Result};

/// The `i`-th of `n + 1` equally spaced points on `[lo, hi]`.
///
/// Every cell endpoint in a sweep comes from this one formula, so adjacent
/// cells share endpoints bit for bit and the outer endpoints are exact.
pub fn grid_point(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if i == 0 {
        lo
    } else if i == n {
        hi
    } else {
        lo + (hi - lo) * (i as f64) / (n as f64)
    }
}

/// A base region of a sweep together with its subdivision counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Interval { lo: f64, hi: f64, count: usize },
    Rectangle {
        l_lo: f64,
        l_hi: f64,
        y_lo: f64,
        y_hi: f64,
        nl: usize,
        ny: usize,
    },
}

/// One cell of a sweep. Interval cells leave the `y` bounds unset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub lo: f64,
    pub hi: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_lo: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_hi: Option<f64>,
}

impl Cell {
    pub fn interval(i: &HalfOpenInterval<f64>) -> Self {
        Cell {
            lo: i.lo,
            hi: i.hi,
            y_lo: None,
            y_hi: None,
        }
    }

    pub fn rectangle(s: &ParamRectangle<f64>) -> Self {
        Cell {
            lo: s.l_lo,
            hi: s.l_hi,
            y_lo: Some(s.y_lo),
            y_hi: Some(s.y_hi),
        }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.y_lo, self.y_hi) {
            (Some(a), Some(b)) => write!(f, "[{}, {}] x [{}, {}]", self.lo, self.hi, a, b),
            _ => write!(f, "[{}, {})", self.lo, self.hi),
        }
    }
}

/// Base regions, their subdivision counts and a uniform refinement factor.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub regions: Vec<Region>,
    pub refinement: usize,
}

impl GridSpec {
    pub fn new(regions: Vec<Region>, refinement: usize) -> Result<Self> {
        let g = GridSpec { regions, refinement };
        g.validate()?;
        Ok(g)
    }

    /// Five displacement intervals covering `[0.58, log 7)`, twenty cells each.
    pub fn no_short_geodesic() -> Self {
        let edges = [0.58, 0.598, 0.608, 0.618, 0.7, 7f64.ln()];
        let regions = edges
            .windows(2)
            .map(|w| Region::Interval {
                lo: w[0],
                hi: w[1],
                count: 20,
            })
            .collect();
        GridSpec {
            regions,
            refinement: 1,
        }
    }

    /// Three rectangles covering `[0.003, 0.58] × [0, 0.5]`, 17 000 cells.
    pub fn short_geodesic() -> Self {
        let rect = |l_lo, l_hi, nl| Region::Rectangle {
            l_lo,
            l_hi,
            y_lo: 0.0,
            y_hi: 0.5,
            nl,
            ny: 100,
        };
        GridSpec {
            regions: vec![rect(0.003, 0.103, 40), rect(0.1, 0.5, 50), rect(0.5, 0.58, 80)],
            refinement: 1,
        }
    }

    pub fn with_refinement(mut self, refinement: usize) -> Result<Self> {
        self.refinement = refinement;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.refinement == 0 {
            return Err(Error::domain("grid", "refinement factor must be at least 1"));
        }
        for r in &self.regions {
            let ok = match *r {
                Region::Interval { lo, hi, count } => lo < hi && count > 0,
                Region::Rectangle {
                    l_lo,
                    l_hi,
                    y_lo,
                    y_hi,
                    nl,
                    ny,
                } => l_lo < l_hi && y_lo < y_hi && nl > 0 && ny > 0,
            };
            if !ok {
                return Err(Error::domain("grid", format!("degenerate region {r:?}")));
            }
        }
        Ok(())
    }

    /// Number of cells after refinement.
    pub fn cell_count(&self) -> usize {
        let k = self.refinement;
        self.regions
            .iter()
            .map(|r| match *r {
                Region::Interval { count, .. } => count * k,
                Region::Rectangle { nl, ny, .. } => nl * ny * k * k,
            })
            .sum()
    }

    /// The interval cells of every interval region, in declaration order.
    pub fn intervals(&self) -> Result<Vec<HalfOpenInterval<f64>>> {
        self.validate()?;
        let mut out = Vec::new();
        for r in &self.regions {
            match *r {
                Region::Interval { lo, hi, count } => {
                    let n = count * self.refinement;
                    for i in 0..n {
                        out.push(HalfOpenInterval::new(
                            grid_point(lo, hi, i, n),
                            grid_point(lo, hi, i + 1, n),
                        )?);
                    }
                }
                Region::Rectangle { .. } => {
                    return Err(Error::domain("grid", "expected interval regions, found a rectangle"))
                }
            }
        }
        Ok(out)
    }

    /// The rectangle cells of every rectangle region: row-major (length
    /// outer, offset inner) within a region, regions in declaration order.
    pub fn rectangles(&self) -> Result<Vec<ParamRectangle<f64>>> {
        self.validate()?;
        let mut out = Vec::new();
        for r in &self.regions {
            match *r {
                Region::Rectangle {
                    l_lo,
                    l_hi,
                    y_lo,
                    y_hi,
                    nl,
                    ny,
                } => {
                    let (nl, ny) = (nl * self.refinement, ny * self.refinement);
                    for i in 0..nl {
                        let (a, b) = (grid_point(l_lo, l_hi, i, nl), grid_point(l_lo, l_hi, i + 1, nl));
                        for j in 0..ny {
                            out.push(ParamRectangle::new(
                                a,
                                b,
                                grid_point(y_lo, y_hi, j, ny),
                                grid_point(y_lo, y_hi, j + 1, ny),
                            )?);
                        }
                    }
                }
                Region::Interval { .. } => {
                    return Err(Error::domain("grid", "expected rectangle regions, found an interval"))
                }
            }
        }
        Ok(out)
    }
}
