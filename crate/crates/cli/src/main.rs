use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tensile_domain_cli::{
    cmd_boundary, cmd_classify, cmd_critical, cmd_scenario, cmd_sweep, CliError, Report, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "tensile-domain",
    version,
    about = "Tensile domain of voltage-activated membranes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML configuration file.
    #[arg(short, long)]
    config: Option<PathBuf>,
    /// Override a configuration value, e.g. `--set material.c2=0.5`.
    #[arg(long = "set", value_name = "SECTION.KEY=VALUE")]
    overrides: Vec<String>,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one stretch state and report raw and relaxed stresses.
    Classify(Common),
    /// Sample the boundary of the tensile domain for each activation.
    Boundary {
        #[command(flatten)]
        common: Common,
        /// Write one CSV per activation into this directory.
        #[arg(long, value_name = "DIR", conflicts_with = "output")]
        split: Option<PathBuf>,
    },
    /// Pull-in activation and optimal prestretch.
    Critical(Common),
    /// Classify every point of a stretch/activation/moduli grid.
    Sweep(Common),
    /// Free or prestretched actuation equilibria.
    Scenario(Common),
}

fn write_report(
    report: &Report,
    output: Option<&Path>,
    split: Option<&Path>,
) -> Result<(), CliError> {
    if let Some(dir) = split {
        std::fs::create_dir_all(dir)?;
        for (name, bytes) in &report.files {
            std::fs::write(dir.join(name), bytes)?;
        }
        return Ok(());
    }
    match output {
        Some(path) => std::fs::write(path, &report.body)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&report.body)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Vec<String>, CliError> {
    let (common, split) = match &cli.command {
        Command::Classify(c) | Command::Critical(c) | Command::Sweep(c) | Command::Scenario(c) => {
            (c, None)
        }
        Command::Boundary { common, split } => (common, split.as_deref()),
    };
    let cfg = RunConfig::load(common.config.as_deref(), &common.overrides)?;
    let report = match &cli.command {
        Command::Classify(_) => cmd_classify(&cfg)?,
        Command::Boundary { .. } => cmd_boundary(&cfg, split.is_some())?,
        Command::Critical(_) => cmd_critical(&cfg)?,
        Command::Sweep(_) => cmd_sweep(&cfg)?,
        Command::Scenario(_) => cmd_scenario(&cfg)?,
    };
    write_report(&report, common.output.as_deref(), split)?;
    Ok(report.warnings)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(warnings) => {
            for w in warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
