//! The `eval`, `verify`, `table` and `list` subcommands.

use std::fmt::Write as _;

use hypvol_core::bounds::{Constants, VolumeBounds};
use hypvol_core::verify::{
    canonical_json, verify_evil_star, verify_no_short_geodesic, verify_short_geodesic, GridSpec, LemmaId,
    VerificationReport,
};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::registry::{self, Context};
use crate::{expr, Failure};

/// What a command produced: the data for stdout or `--output`, a human
/// summary, and whether every threshold held.
pub struct Outcome {
    pub data: String,
    pub summary: Option<String>,
    pub passed: bool,
}

fn bounds(cfg: &RunConfig) -> Result<VolumeBounds<f64>, Failure> {
    Ok(VolumeBounds::new(Constants::standard(&cfg.tol)?, cfg.tol)?)
}

fn parse_args(raw: &[String]) -> Result<Vec<f64>, Failure> {
    raw.iter()
        .map(|a| expr::eval(a).map_err(|e| Failure::Usage(e.to_string())))
        .collect()
}

pub fn list() -> Outcome {
    let mut data = String::new();
    for e in registry::ENTRIES {
        let _ = writeln!(data, "{:<36} {}", e.signature(), e.formula);
    }
    Outcome {
        data,
        summary: None,
        passed: true,
    }
}

pub fn eval(cfg: &RunConfig, name: &str, raw: &[String]) -> Result<Outcome, Failure> {
    let entry = registry::lookup(name).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown function {name:?}; available: {}",
            registry::names().join(", ")
        ))
    })?;
    if raw.len() != entry.params.len() {
        return Err(Failure::Usage(format!(
            "{} takes {} argument(s), got {}",
            entry.signature(),
            entry.params.len(),
            raw.len()
        )));
    }
    let args = parse_args(raw)?;
    let ctx = Context {
        bounds: bounds(cfg)?,
        tol: cfg.tol,
        mode: cfg.mode,
    };
    let value = entry.call(&ctx, &args)?;
    let data = match cfg.format {
        Format::Json => {
            let v = json!({
                "target": entry.name,
                "args": args,
                "value": value,
                "formula": entry.formula,
            });
            format!("{}\n", canonical_json(&v))
        }
        Format::Csv => {
            let mut s = format!("target,{},value\n{}", entry.params.join(","), entry.name);
            for a in &args {
                let _ = write!(s, ",{a}");
            }
            let _ = writeln!(s, ",{value}");
            s
        }
        Format::Text => format!("{value}\n"),
    };
    let summary = (cfg.format == Format::Text).then(|| {
        let shown: Vec<String> = args.iter().map(|a| a.to_string()).collect();
        format!("{}({}) : {}", entry.name, shown.join(", "), entry.formula)
    });
    Ok(Outcome {
        data,
        summary,
        passed: true,
    })
}

fn lemmas(target: &str) -> Result<Vec<LemmaId>, Failure> {
    Ok(match target.replace('_', "-").as_str() {
        "evil-star" => vec![LemmaId::EvilStar],
        "no-short-geodesic" => vec![LemmaId::NoShortGeodesic],
        "short-geodesic" => vec![LemmaId::ShortGeodesic],
        "all" => LemmaId::ALL.to_vec(),
        _ => {
            return Err(Failure::Usage(format!(
                "unknown lemma {target:?}; expected evil-star, no-short-geodesic, short-geodesic or all"
            )))
        }
    })
}

fn run_lemma(cfg: &RunConfig, vb: &VolumeBounds<f64>, id: LemmaId) -> Result<VerificationReport, Failure> {
    Ok(match id {
        LemmaId::EvilStar => verify_evil_star(vb)?,
        LemmaId::NoShortGeodesic => {
            let grid = GridSpec::no_short_geodesic().with_refinement(cfg.refinement)?;
            verify_no_short_geodesic(vb, &grid, cfg.mode)?
        }
        LemmaId::ShortGeodesic => {
            let grid = GridSpec::short_geodesic().with_refinement(cfg.refinement)?;
            verify_short_geodesic(vb, &grid)?
        }
    })
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut s = String::from("lemma,index,lo,hi,y_lo,y_hi,value,branch\n");
    for r in reports {
        for c in &r.cells {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{}",
                r.lemma_id.as_str(),
                c.index,
                c.cell.lo,
                c.cell.hi,
                opt(c.cell.y_lo),
                opt(c.cell.y_hi),
                c.value,
                c.branch
            );
        }
    }
    s
}

pub fn verify(cfg: &RunConfig, target: &str) -> Result<Outcome, Failure> {
    let ids = lemmas(target)?;
    let vb = bounds(cfg)?;
    let reports = ids
        .iter()
        .map(|&id| run_lemma(cfg, &vb, id))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let summaries: Vec<String> = reports.iter().map(VerificationReport::summary).collect();
    let summary = summaries.join("\n");
    let data = match cfg.format {
        Format::Text => format!("{summary}\n"),
        Format::Json => {
            let body = if reports.len() == 1 {
                reports[0].to_canonical_json(cfg.full)
            } else {
                let parts: Vec<String> = reports.iter().map(|r| r.to_canonical_json(cfg.full)).collect();
                format!("[{}]", parts.join(","))
            };
            format!("{body}\n")
        }
        Format::Csv => reports_csv(&reports),
    };
    Ok(Outcome {
        data,
        summary: (cfg.format != Format::Text).then_some(summary),
        passed,
    })
}

fn decimals(x: f64) -> usize {
    let s = format!("{x:e}");
    let (mantissa, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let digits = mantissa.split_once('.').map_or(0, |(_, f)| f.len()) as i64;
    (digits - exp.parse::<i64>().unwrap_or(0)).clamp(0, 17) as usize
}

/// The points `start + i·step` up to `stop` inclusive, allowing for
/// round-off in the last step. Points are rounded to the decimal places of
/// `start` and `step`, so `0.58 + 10·0.01` prints as `0.68`.
pub fn range(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(step > 0.0) || !(stop >= start) || !start.is_finite() || !stop.is_finite() {
        return Err(Failure::Usage(format!(
            "empty range: start {start}, stop {stop}, step {step}"
        )));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    let places = decimals(start).max(decimals(step));
    Ok((0..=n)
        .map(|i| {
            let x = start + i as f64 * step;
            format!("{x:.places$}").parse().unwrap_or(x)
        })
        .collect())
}

/// Which case of the far bound applies, from `Z - h` and `h`.
fn far_branch(chi: f64, h: f64) -> &'static str {
    if chi > 0.0 {
        "bor"
    } else if chi + h > 0.0 {
        "ball"
    } else {
        "zero"
    }
}

struct Table {
    columns: Vec<&'static str>,
    rows: Vec<(Vec<f64>, &'static str)>,
}

impl Table {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|(vals, branch)| {
                        let mut m = serde_json::Map::new();
                        for (k, v) in self.columns.iter().zip(vals) {
                            m.insert((*k).to_string(), json!(v));
                        }
                        m.insert("branch".into(), json!(branch));
                        Value::Object(m)
                    })
                    .collect();
                format!("{}\n", canonical_json(&Value::Array(rows)))
            }
            Format::Csv | Format::Text => {
                let mut s = format!("{},branch\n", self.columns.join(","));
                for (vals, branch) in &self.rows {
                    for v in vals {
                        let _ = write!(s, "{v},");
                    }
                    let _ = writeln!(s, "{branch}");
                }
                s
            }
        }
    }
}

fn arity(name: &str, raw: &[String], n: usize, usage: &str) -> Result<(), Failure> {
    if raw.len() == n {
        Ok(())
    } else {
        Err(Failure::Usage(format!("table {name} expects {usage}, got {} argument(s)", raw.len())))
    }
}

pub fn table(cfg: &RunConfig, name: &str, raw: &[String]) -> Result<Outcome, Failure> {
    let vb = bounds(cfg)?;
    let c = vb.constants;
    let lambda0 = c.lambda0;
    let mut t = Table {
        columns: Vec::new(),
        rows: Vec::new(),
    };
    let mut threshold_ok = true;
    match name {
        "vnear" | "vfar" | "bound-sum" | "bound_sum" => {
            arity(name, raw, 3, "start stop step")?;
            let a = parse_args(raw)?;
            for d in range(a[0], a[1], a[2])? {
                match name {
                    "vnear" => {
                        let branch = if vb.near_uses_t3(d) { "t3" } else { "t2" };
                        t.rows.push((vec![d, vb.v_near(d)?], branch));
                    }
                    "vfar" => {
                        let z = vb.z_gap(d, lambda0)?;
                        t.rows.push((vec![d, vb.v_far(d, lambda0)?], far_branch(z - c.h, c.h)));
                    }
                    _ => {
                        let sum = vb.v_near(d)? + vb.v_far(d, lambda0)?;
                        threshold_ok &= sum > c.vol_threshold;
                        let branch = if vb.near_uses_t3(d) { "t3" } else { "t2" };
                        t.rows.push((vec![d, sum], branch));
                    }
                }
            }
            t.columns = match name {
                "vnear" => vec!["D", "v_near"],
                "vfar" => vec!["D", "v_far"],
                _ => vec!["D", "bound_sum"],
            };
        }
        "wstar" => {
            arity(name, raw, 6, "l_start l_stop l_step y_start y_stop y_step")?;
            let a = parse_args(raw)?;
            let ys = range(a[3], a[4], a[5])?;
            for l in range(a[0], a[1], a[2])? {
                for &y in &ys {
                    let chi = vb.chi(l, y)?;
                    t.rows.push((vec![l, y, vb.w_star(l, y)?], far_branch(chi, c.h)));
                }
            }
            t.columns = vec!["l", "y", "w_star"];
        }
        _ => {
            return Err(Failure::Usage(format!(
                "unknown table {name:?}; expected vnear, vfar, wstar or bound-sum"
            )))
        }
    }
    let summary = (name.starts_with("bound")).then(|| {
        let min = t.rows.iter().map(|r| r.0[1]).fold(f64::INFINITY, f64::min);
        format!(
            "bound-sum: {} min_value={min:.10} threshold={} rows={}",
            if threshold_ok { "PASS" } else { "FAIL" },
            c.vol_threshold,
            t.rows.len()
        )
    });
    Ok(Outcome {
        data: t.render(cfg.format),
        summary,
        passed: threshold_ok,
    })
}
