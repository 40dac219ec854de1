//! Command-line driver: read a run configuration, run the requested tasks
//! under each requested convention, and write a JSON report, a text
//! summary and CSV files.
//!
//! Exit codes: 0 when every identity is exactly zero and every numeric
//! check is within its bound, 1 otherwise, 2 for configuration and I/O
//! errors.

mod config;
mod report;
mod tasks;

pub use config::{default_solutions, RunConfig, Task};
pub use report::{formula_table, row_of, Comparison, ConventionBlock, ConventionPass, NumericCheck, Report, TableRow};
pub use tasks::convention_dir;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::Parser;
use rayon::prelude::*;
use thiserror::Error;

use crate::minkowski::Signature;
use crate::noether::Mutation;
use crate::numeric::NumericError;

/// Environment variable holding the worker count; unset means one worker
/// per core.
pub const WORKERS_ENV: &str = "ZILCH_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

#[derive(Debug, Parser)]
#[command(name = "zilch", version, about = "Verify the zilch conservation law of Maxwell theory, exactly and numerically")]
pub struct Args {
    /// TOML run configuration; every key has a default
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// task to run, repeatable; replaces the configured list
    #[arg(long = "task", value_name = "NAME")]
    pub tasks: Vec<Task>,
    /// output directory
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    pub seed: Option<u64>,
    /// metric signature, `+---` or `-+++`, repeatable; replaces the configured list
    #[arg(long = "signature", value_name = "SIG", allow_hyphen_values = true)]
    pub signatures: Vec<Signature>,
    /// debug: run with one documented coefficient deliberately wrong
    #[arg(long, value_name = "NAME")]
    pub mutate: Option<Mutation>,
    /// do not print the summary
    #[arg(long)]
    pub quiet: bool,
}

impl Args {
    /// The configuration after applying command-line overrides.
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        if !self.tasks.is_empty() {
            cfg.tasks = self.tasks.clone();
        }
        if !self.signatures.is_empty() {
            cfg.signatures = self.signatures.clone();
        }
        if let Some(out) = &self.out {
            cfg.out = out.clone();
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if self.mutate.is_some() {
            cfg.mutate = self.mutate;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn workers() -> Result<Option<usize>, CliError> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Config(format!("{WORKERS_ENV} must be a positive integer, got `{v}`"))),
        },
    }
}

fn write_file(root: &Path, rel: &str, bytes: &[u8]) -> Result<(), CliError> {
    let path = root.join(rel);
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(&path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Run every task under every convention and write the artifacts. The
/// report is assembled in configuration order, so the same configuration
/// and seed give byte-identical files whatever the worker count.
pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let mut tasks: Vec<Task> = Vec::new();
    for t in &cfg.tasks {
        if !tasks.contains(t) {
            tasks.push(*t);
        }
    }
    let mut passes = Vec::new();
    let mut files: Vec<(String, Vec<u8>)> = Vec::new();
    for conv in cfg.conventions()? {
        let ctx = tasks::Context { cfg, conv };
        let outputs: Vec<report::TaskOutput> = tasks.par_iter().map(|&t| ctx.run(t)).collect::<Result<_, _>>()?;
        let mut pass = ConventionPass {
            convention: ConventionBlock::from(&conv),
            identities: Vec::new(),
            formula_table: Vec::new(),
            form_status: Vec::new(),
            numeric: Vec::new(),
            witness_files: Vec::new(),
            pass: true,
        };
        for o in outputs {
            pass.identities.extend(o.identities);
            pass.formula_table.extend(o.formula_table);
            pass.form_status.extend(o.form_status);
            pass.numeric.extend(o.numeric);
            files.extend(o.files);
        }
        for r in pass.identities.iter().filter(|r| !r.residual_zero) {
            let rel = format!("witness/{}/{}.txt", convention_dir(&conv), r.name);
            let w = r.witness.as_ref();
            let text = format!(
                "identity: {}\nformula: {}\nconvention: {}\nindices: {:?}\nterms: {}\n\n{}\n",
                r.name,
                r.anchor,
                r.convention,
                w.map(|w| w.indices.clone()).unwrap_or_default(),
                w.map(|w| w.terms).unwrap_or(0),
                w.map(|w| w.polynomial.as_str()).unwrap_or("")
            );
            files.push((rel.clone(), text.into_bytes()));
            pass.witness_files.push(rel);
        }
        pass.pass = pass.identities.iter().all(|r| r.residual_zero) && pass.numeric.iter().all(|c| c.pass);
        passes.push(pass);
    }
    let mut artifacts: Vec<String> = files.iter().map(|(p, _)| p.clone()).collect();
    artifacts.extend(["report.json".to_string(), "summary.txt".to_string()]);
    artifacts.sort();
    let report = Report {
        tool: "zilch",
        version: env!("CARGO_PKG_VERSION"),
        seed: cfg.seed,
        tasks,
        mutation: cfg.mutate,
        pass: passes.iter().all(|p| p.pass),
        passes,
        artifacts,
    };
    for (rel, bytes) in &files {
        write_file(&cfg.out, rel, bytes)?;
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| CliError::Io(e.to_string()))?;
    write_file(&cfg.out, "report.json", format!("{json}\n").as_bytes())?;
    write_file(&cfg.out, "summary.txt", report.summary().as_bytes())?;
    Ok(report)
}

/// Parse arguments, run, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = workers().and_then(|n| {
        let cfg = args.resolve()?;
        let mut pool = rayon::ThreadPoolBuilder::new();
        if let Some(n) = n {
            pool = pool.num_threads(n);
        }
        let pool = pool.build().map_err(|e| CliError::Config(e.to_string()))?;
        pool.install(|| run(&cfg))
    });
    match outcome {
        Ok(report) => {
            if !args.quiet {
                print!("{}", report.summary());
            }
            for p in &report.passes {
                for w in &p.witness_files {
                    eprintln!("identity failed; witness written to {w}");
                }
            }
            if report.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("zilch: {e}");
            2
        }
    }
}
