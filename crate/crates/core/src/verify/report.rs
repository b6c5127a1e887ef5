use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bounds::MnearMode;
use crate::error::{Error, Result};

use super::grid::Cell;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    EvilStar,
    NoShortGeodesic,
    ShortGeodesic,
}

impl LemmaId {
    pub const ALL: [LemmaId; 3] = [LemmaId::EvilStar, LemmaId::NoShortGeodesic, LemmaId::ShortGeodesic];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::EvilStar => "evil_star",
            LemmaId::NoShortGeodesic => "no_short_geodesic",
            LemmaId::ShortGeodesic => "short_geodesic",
        }
    }
}

/// Which side of the threshold every cell must fall on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    Above,
    Below,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub index: usize,
    pub cell: Cell,
    pub value: f64,
    pub branch: String,
    #[serde(default)]
    pub aux: BTreeMap<String, f64>,
}

/// Outcome of one sweep.
///
/// `passed` holds when every cell value is strictly above the threshold
/// (`Sense::Above`, decided by `min_value`) or strictly below it
/// (`Sense::Below`, decided by `max_value`), and any closure value is above.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma_id: LemmaId,
    pub mode: Option<MnearMode>,
    pub threshold: f64,
    pub sense: Sense,
    pub min_value: f64,
    pub min_cell: Cell,
    pub min_index: usize,
    pub max_value: f64,
    pub max_cell: Cell,
    pub max_index: usize,
    pub passed: bool,
    pub cell_count: usize,
    pub timing_seconds: f64,
    pub closure_value: Option<f64>,
    #[serde(default)]
    pub aux: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<CellResult>,
}

impl VerificationReport {
    /// Assembles a report from per-cell results in sweep order. Ties in the
    /// extremes go to the first cell.
    pub(crate) fn from_cells(
        lemma_id: LemmaId,
        mode: Option<MnearMode>,
        threshold: f64,
        sense: Sense,
        cells: Vec<CellResult>,
        closure_value: Option<f64>,
        aux: BTreeMap<String, f64>,
    ) -> Result<Self> {
        let first = cells
            .first()
            .ok_or_else(|| Error::Consistency("sweep produced no cells".into()))?;
        let (mut lo, mut hi) = (first, first);
        for c in &cells {
            if !c.value.is_finite() {
                return Err(Error::Consistency(format!(
                    "cell {} {} has non-finite bound {}",
                    c.index, c.cell, c.value
                )));
            }
            if c.value < lo.value {
                lo = c;
            }
            if c.value > hi.value {
                hi = c;
            }
        }
        let cells_pass = match sense {
            Sense::Above => lo.value > threshold,
            Sense::Below => hi.value < threshold,
        };
        let closure_pass = closure_value.is_none_or(|v| v > threshold);
        Ok(VerificationReport {
            lemma_id,
            mode,
            threshold,
            sense,
            min_value: lo.value,
            min_cell: lo.cell,
            min_index: lo.index,
            max_value: hi.value,
            max_cell: hi.cell,
            max_index: hi.index,
            passed: cells_pass && closure_pass,
            cell_count: cells.len(),
            timing_seconds: 0.0,
            closure_value,
            aux,
            cells,
        })
    }

    /// The value that decides the verdict.
    pub fn critical_value(&self) -> f64 {
        match self.sense {
            Sense::Above => self.min_value,
            Sense::Below => self.max_value,
        }
    }

    pub fn critical_cell(&self) -> Cell {
        match self.sense {
            Sense::Above => self.min_cell,
            Sense::Below => self.max_cell,
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: {} min_value={:.10} min_cell={} max_value={:.10} threshold={} cells={}",
            self.lemma_id.as_str(),
            if self.passed { "PASS" } else { "FAIL" },
            self.min_value,
            self.min_cell,
            self.max_value,
            self.threshold,
            self.cell_count,
        );
        if let Some(m) = self.mode {
            let _ = write!(s, " mode={}", m.as_str());
        }
        if let Some(c) = self.closure_value {
            let _ = write!(s, " closure={c:.10}");
        }
        s
    }

    /// Canonical JSON: sorted keys, floats with 17 significant digits, no
    /// insignificant whitespace. Per-cell results are included only when
    /// `with_cells` is set.
    pub fn to_canonical_json(&self, with_cells: bool) -> String {
        let mut v = serde_json::to_value(self).expect("report is always representable as JSON");
        if !with_cells {
            if let Value::Object(m) = &mut v {
                m.remove("cells");
            }
        }
        canonical_json(&v)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Consistency(format!("malformed report: {e}")))
    }
}

/// Serializes a JSON value with sorted object keys and every non-integer
/// number printed as `d.dddddddddddddddde±x`.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v);
    out
}

fn write_value(out: &mut String, v: &Value) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                let _ = write!(out, "{:.16e}", n.as_f64().unwrap_or(f64::NAN));
            } else {
                let _ = write!(out, "{n}");
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(out, x);
            }
            out.push(']');
        }
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            out.push('{');
            for (i, k) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                write_value(out, &m[k]);
            }
            out.push('}');
        }
    }
}
