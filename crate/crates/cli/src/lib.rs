//! Library side of the `nilmult` command: group-spec parsing, output
//! records and subcommand dispatch.

pub mod commands;
pub mod output;
pub mod spec;

pub use commands::{enum_cap, run, Cli, CliError, Command, Status, CAP_ENV};
pub use output::{Format, Method, OutputRecord};
pub use spec::{GroupSpec, SpecError};
