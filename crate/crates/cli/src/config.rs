//! Command-line grammar and the resolved run configuration.
//!
//! Settings come from flags, then an optional `key = value` file given by
//! `--config`, then defaults. The only environment variable consulted is
//! `HYPVOL_THREADS`, for the default thread count.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hypvol_core::bounds::MnearMode;
use hypvol_core::Tolerances64;

use crate::Failure;

pub const THREADS_ENV: &str = "HYPVOL_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Sound,
    #[value(name = "paper_text", alias = "paper-text")]
    PaperText,
}

impl From<Mode> for MnearMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sound => MnearMode::Sound,
            Mode::PaperText => MnearMode::PaperText,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hypvol", version, about = "Hyperbolic ball and cap volumes, volume bounds and their grid verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to a file instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Interval near-volume bound used by the long-geodesic sweep.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,

    /// Multiply every grid subdivision count by N.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub refinement: Option<u64>,

    /// Worker threads for sweeps (default: HYPVOL_THREADS, else all cores).
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,

    /// Include per-cell results in verification reports.
    #[arg(long, global = true)]
    pub full: bool,

    /// Flat `key = value` configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Absolute quadrature tolerance.
    #[arg(long, global = true, value_name = "X")]
    pub quad_abs: Option<f64>,

    /// Relative quadrature tolerance.
    #[arg(long, global = true, value_name = "X")]
    pub quad_rel: Option<f64>,

    /// Root-finding tolerance.
    #[arg(long, global = true, value_name = "X")]
    pub root_tol: Option<f64>,

    /// Slack allowed when clamping arguments of inverse functions.
    #[arg(long, global = true, value_name = "X")]
    pub domain_clamp: Option<f64>,

    /// Panel budget for adaptive quadrature.
    #[arg(long, global = true, value_name = "N")]
    pub max_panels: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one library function. Arguments may be expressions such as
    /// "(log 7)/2"; wrap an expression that starts with '-' in parentheses.
    Eval {
        function: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Run a verification sweep: evil-star, no-short-geodesic,
    /// short-geodesic or all.
    Verify { lemma: String },
    /// Tabulate vnear, vfar or bound-sum over `start stop step`, or wstar
    /// over `l0 l1 dl y0 y1 dy`.
    Table {
        function: String,
        #[arg(allow_negative_numbers = true)]
        range: Vec<String>,
    },
    /// List the functions available to `eval`.
    List,
}

/// Fully resolved settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub output: Option<PathBuf>,
    pub mode: MnearMode,
    pub refinement: usize,
    pub threads: Option<usize>,
    pub full: bool,
    pub tol: Tolerances64,
}

fn read_file(path: &Path) -> Result<BTreeMap<String, String>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
    parse_file(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_file(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
        let key = k.trim().replace('-', "_");
        if !KEYS.contains(&key.as_str()) {
            return Err(format!("line {}: unknown key {key:?}", n + 1));
        }
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

const KEYS: &[&str] = &[
    "format",
    "output",
    "mode",
    "refinement",
    "threads",
    "full",
    "quad_abs",
    "quad_rel",
    "root_tol",
    "domain_clamp",
    "max_panels",
];

fn parse_value<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, Failure> {
    v.parse()
        .map_err(|_| Failure::Usage(format!("config: invalid value {v:?} for {key}")))
}

fn parse_enum<T: ValueEnum>(key: &str, v: &str) -> Result<T, Failure> {
    T::from_str(v, true).map_err(|_| Failure::Usage(format!("config: invalid value {v:?} for {key}")))
}

impl RunConfig {
    pub fn resolve(cli: &Cli) -> Result<Self, Failure> {
        let file = match &cli.config {
            Some(p) => read_file(p)?,
            None => BTreeMap::new(),
        };
        let get = |k: &str| file.get(k).map(String::as_str);

        let format = match (cli.format, get("format")) {
            (Some(f), _) => f,
            (None, Some(v)) => parse_enum("format", v)?,
            (None, None) => Format::Text,
        };
        let mode = match (cli.mode, get("mode")) {
            (Some(m), _) => m,
            (None, Some(v)) => parse_enum("mode", v)?,
            (None, None) => Mode::Sound,
        };
        let refinement = match (cli.refinement, get("refinement")) {
            (Some(r), _) => r as usize,
            (None, Some(v)) => parse_value::<usize>("refinement", v)?,
            (None, None) => 1,
        };
        if refinement == 0 {
            return Err(Failure::Usage("refinement must be at least 1".into()));
        }
        let threads = match (cli.threads, get("threads")) {
            (Some(t), _) => Some(t as usize),
            (None, Some(v)) => Some(parse_value::<usize>("threads", v)?),
            (None, None) => match std::env::var(THREADS_ENV) {
                Ok(v) => Some(
                    v.trim()
                        .parse::<usize>()
                        .map_err(|_| Failure::Usage(format!("{THREADS_ENV}: invalid thread count {v:?}")))?,
                ),
                Err(_) => None,
            },
        };
        if threads == Some(0) {
            return Err(Failure::Usage("thread count must be at least 1".into()));
        }
        let full = cli.full || get("full").map(|v| parse_value::<bool>("full", v)).transpose()?.unwrap_or(false);
        let output = cli.output.clone().or_else(|| get("output").map(PathBuf::from));

        let mut tol = Tolerances64::default();
        let pick = |flag: Option<f64>, key: &str| -> Result<Option<f64>, Failure> {
            match (flag, get(key)) {
                (Some(x), _) => Ok(Some(x)),
                (None, Some(v)) => parse_value(key, v).map(Some),
                (None, None) => Ok(None),
            }
        };
        if let Some(x) = pick(cli.quad_abs, "quad_abs")? {
            tol.quad_abs = x;
        }
        if let Some(x) = pick(cli.quad_rel, "quad_rel")? {
            tol.quad_rel = x;
        }
        if let Some(x) = pick(cli.root_tol, "root_tol")? {
            tol.root_tol = x;
        }
        if let Some(x) = pick(cli.domain_clamp, "domain_clamp")? {
            tol.domain_clamp = x;
        }
        match (cli.max_panels, get("max_panels")) {
            (Some(n), _) => tol.max_panels = n,
            (None, Some(v)) => tol.max_panels = parse_value("max_panels", v)?,
            (None, None) => {}
        }
        tol.validate().map_err(|e| Failure::Usage(format!("tolerances: {e}")))?;

        Ok(RunConfig {
            format,
            output,
            mode: mode.into(),
            refinement,
            threads,
            full,
            tol,
        })
    }
}
