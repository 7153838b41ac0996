//! Command line and config file handling.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use superyangian::AlgebraContext;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("reading config {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("parsing config {path}: {source}")]
    Parse { path: PathBuf, source: toml::de::Error },
    #[error("{0}")]
    Engine(#[from] superyangian::Error),
    #[error("unknown suite or identity: {0}")]
    UnknownSuite(String),
    #[error("{0}")]
    Other(String),
}

#[derive(Parser, Debug)]
#[command(name = "superyangian", version, about = "Exact computations in super Yangians over F_p")]
pub struct Cli {
    /// TOML file whose keys mirror the flags; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Series truncation order N.
    #[arg(long, global = true)]
    pub trunc: Option<usize>,
    /// Suite or identity id; repeatable.
    #[arg(long, global = true)]
    pub suite: Vec<String>,
    /// Overrides every suite's default bound.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Report path; stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Omit timings so reports compare byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Run the mutated fixtures instead of the real checks.
    #[arg(long, global = true)]
    pub mutate: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Gauss decomposition series.
    Gauss {
        /// Emit only this series, e.g. `d_1` or `e_{1,2}`.
        #[arg(long)]
        name: Option<String>,
    },
    /// Coefficients of the quantum Berezinian.
    Berezinian,
    /// Central series.
    Center {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
    },
    /// Homomorphism and image checks for a named map.
    Maps {
        #[arg(long)]
        check: String,
    },
    /// Run suites: names from `--suite`, plus positional ones; `all` runs everything.
    Verify { targets: Vec<String> },
    /// Top graded component of a central coefficient.
    Gr { family: String, r: usize },
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub p: Option<u32>,
    pub trunc: Option<usize>,
    pub suite: Option<Vec<String>>,
    pub bound: Option<usize>,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub seed: Option<u64>,
    pub no_timing: Option<bool>,
    pub mutate: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ctx: AlgebraContext,
    pub suites: Vec<String>,
    pub bound: Option<usize>,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub timing: bool,
    pub mutate: bool,
}

impl RunConfig {
    pub fn resolve(cli: &Cli) -> Result<Self, ConfigError> {
        let file = match &cli.config {
            None => FileConfig::default(),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read { path: path.clone(), source })?;
                toml::from_str(&text).map_err(|source| ConfigError::Parse { path: path.clone(), source })?
            }
        };
        let m = cli.m.or(file.m).unwrap_or(1);
        let n = cli.n.or(file.n).unwrap_or(1);
        let p = cli.p.or(file.p).unwrap_or(3);
        let trunc = cli.trunc.or(file.trunc).unwrap_or(4);
        let ctx = AlgebraContext::new(m, n, p, trunc)?;
        let mut suites = cli.suite.clone();
        if suites.is_empty() {
            suites = file.suite.unwrap_or_default();
        }
        if let Command::Verify { targets } = &cli.command {
            suites.extend(targets.iter().cloned());
        }
        let jobs = cli.jobs.or(file.jobs).unwrap_or(0);
        if cli.bound.or(file.bound) == Some(0) {
            return Err(ConfigError::Other("bound must be positive".into()));
        }
        Ok(RunConfig {
            ctx,
            suites,
            bound: cli.bound.or(file.bound),
            jobs,
            cache_dir: cli.cache_dir.clone().or(file.cache_dir),
            output: cli.output.clone().or(file.output),
            seed: cli.seed.or(file.seed).unwrap_or(0),
            timing: !(cli.no_timing || file.no_timing.unwrap_or(false)),
            mutate: cli.mutate || file.mutate.unwrap_or(false),
        })
    }
}
