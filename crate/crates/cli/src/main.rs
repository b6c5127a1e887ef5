//! `hypvol`: evaluate volume functions, run the verification sweeps and
//! print tables.
//!
//! Exit codes: 0 success, 1 a completed run missed its threshold, 2 usage or
//! I/O error, 3 domain error, 4 convergence, bracketing or consistency
//! failure.

mod commands;
mod config;
mod expr;
mod registry;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hypvol_core::Error;

use config::{Cli, Command, RunConfig};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Library(e) => match e.root_cause() {
                Error::Domain { .. } => 3,
                _ => 4,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Library(e) => match e.root_cause() {
                Error::Domain { .. } => format!("domain error: {e}"),
                _ => format!("numerical failure: {e}"),
            },
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = RunConfig::resolve(&cli)?;
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {n} threads: {e}")))?;
    }
    let out = match &cli.command {
        Command::Eval { function, args } => commands::eval(&cfg, function, args)?,
        Command::Verify { lemma } => commands::verify(&cfg, lemma)?,
        Command::Table { function, range } => commands::table(&cfg, function, range)?,
        Command::List => commands::list(),
    };
    match &cfg.output {
        Some(path) => {
            fs::write(path, &out.data)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            if let Some(s) = &out.summary {
                println!("{s}");
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(out.data.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                r => r.map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?,
            }
            if let Some(s) = &out.summary {
                eprintln!("{s}");
            }
        }
    }
    Ok(out.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("hypvol: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
