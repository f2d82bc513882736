//! Command-line front end and experiment harness for the `strgraph` crate.
//!
//! Exit codes: 0 when every hard check passes, 1 when a certificate fails
//! its re-check, 2 for unreadable or invalid input.

pub mod commands;
pub mod error;
pub mod experiment;
pub mod instance;
pub mod params;
pub mod report;
pub mod verify;

pub use commands::{execute, Cli};
pub use error::{CliError, CliResult};
pub use experiment::{run_experiment, ExperimentConfig, ExperimentReport, ReportRow};
pub use verify::{verify_bounds, Verification};
