// Input checks are written `!(x > 0.0)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Toy early-universe cosmology calculators.
///
/// Every run echoes its effective configuration (TOML) to stderr. Tables go to
/// `--out` or stdout; failures print a JSON error object to stderr and exit
/// with 1 (computation) or 2 (usage or configuration).
#[derive(Debug, Parser)]
#[command(name = "cosmotoy", version)]
pub struct Cli {
    /// TOML configuration; every key is optional.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Table format. Report-style commands always write JSON.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Physical constants and Planck units, with identity checks.
    Constants,
    /// Vacuum parameters and Hartle-Hawking amplitude over temperatures (K).
    Lambda {
        #[arg(long, num_args = 1..)]
        temp: Vec<f64>,
        #[arg(long)]
        post_burst: bool,
    },
    /// Hartle-Hawking amplitude for one vacuum parameter (natural units).
    Hh {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
    },
    /// Wormhole bridge terms at a temperature (K), time (s) and radius (m).
    Wormhole {
        #[arg(long, default_value_t = 1e32)]
        temp: f64,
        #[arg(long)]
        time: Option<f64>,
        #[arg(long)]
        radius: Option<f64>,
    },
    /// Four-link equivalence chain at a maximum temperature (K).
    Theorem1 {
        #[arg(long, default_value_t = 1e32)]
        tmax: f64,
    },
    /// Causal-discontinuity flag over a log-spaced vacuum-parameter sweep.
    CausalScan {
        #[arg(long)]
        lambda_min: Option<f64>,
        #[arg(long)]
        lambda_max: Option<f64>,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long)]
        dt: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        /// Report the bisected threshold instead of the sweep.
        #[arg(long)]
        star: bool,
    },
    /// Positive roots of the scale-factor polynomial at time t (natural units).
    Roots {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Operation-count bounds for a density (kg/m^3) and ages (yr).
    Lloyd {
        #[arg(long, default_value_t = 1e-27)]
        rho: f64,
        #[arg(long, num_args = 1.., default_values_t = [1e10])]
        age: Vec<f64>,
    },
    /// Entropy profile and operation counts at times (s).
    Entropy {
        #[arg(long, num_args = 1..)]
        t: Vec<f64>,
    },
    /// Graviton burst table.
    BurstTable {
        /// Override the base temperature (K).
        #[arg(long)]
        tstar: Option<f64>,
    },
    /// Axion mass, wall amplitude and strength over a temperature sweep (K).
    Axion {
        #[arg(long, num_args = 3, value_names = ["LO", "HI", "POINTS"])]
        temp_sweep: Option<Vec<f64>>,
    },
    /// Radion potential scan, or its minimum when no scan is given.
    RsPotential {
        #[arg(long, num_args = 2, value_names = ["R_MIN", "R_MAX"])]
        scan: Option<Vec<f64>>,
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
    /// Roots, regime and a trajectory for one of the four temperature cases.
    Quintessence {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        case: u8,
    },
    /// Characteristic roots over a log-spaced temperature grid (natural units).
    Bifurcation {
        #[arg(long, default_value_t = 1e-3)]
        t_min: f64,
        #[arg(long, default_value_t = 1.0)]
        t_max: f64,
        #[arg(long, default_value_t = 61)]
        points: usize,
    },
    /// Minisuperspace wavefunction psi(a).
    Wdw {
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        #[arg(long)]
        a_max: Option<f64>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] cosmotoy::Error),
    #[error("{message}")]
    Failed {
        kind: &'static str,
        message: String,
        detail: serde_json::Value,
    },
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let kind = match self {
            CliError::Config(_) => "config",
            CliError::Usage(_) => "usage",
            CliError::Compute(_) => "computation",
            CliError::Failed { kind, .. } => kind,
            CliError::Io(_) => "io",
        };
        let mut v = serde_json::json!({ "error": kind, "message": self.to_string() });
        if let CliError::Failed { detail, .. } = self {
            v["detail"] = detail.clone();
        }
        v
    }
}

/// What a command produced.
pub enum Artifact {
    Table(table::Table),
    Report(serde_json::Value),
}

fn write_artifact(a: &Artifact, format: Format, out: Option<&PathBuf>) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(sink);
    match a {
        Artifact::Table(t) => table::emit_table(t, format, &mut w)?,
        Artifact::Report(v) => {
            serde_json::to_writer_pretty(&mut w, v).map_err(io::Error::from)?;
            w.write_all(b"\n")?;
        }
    }
    w.flush()?;
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = config::load_config(cli.config.as_deref())?;
    eprint!("# effective configuration\n{}", cfg.echo());
    let (artifact, failure) = commands::dispatch(&cli.command, &cfg)?;
    write_artifact(&artifact, cli.format, cli.out.as_ref())?;
    failure.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
