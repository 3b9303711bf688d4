//! Command-line front end for `tensile_domain`: configuration parsing, the
//! five subcommands and the CSV/JSON records they emit.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use commands::{cmd_boundary, cmd_classify, cmd_critical, cmd_scenario, cmd_sweep, Report};
pub use config::RunConfig;
pub use error::CliError;
pub use output::{read_boundary_csv, read_json, read_sweep_csv, BoundaryRow, RowKind, SweepRecord};
