//! Command-line front end for the `qresample` library.
//!
//! Signals are read from two-column CSV files (one axis) or square PGM
//! images (two axes). Every run writes a JSON metadata record next to its
//! output.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;

pub use error::{CliError, CliResult};

use config::{Cli, Command, RunConfig};
use qresample::Direction;

/// Executes a parsed command line.
pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Down(args) => {
            commands::cmd_resample(&RunConfig::from_args(Direction::Down, &args)?)?;
        }
        Command::Up(args) => {
            commands::cmd_resample(&RunConfig::from_args(Direction::Up, &args)?)?;
        }
        Command::DemoSinc(args) => {
            commands::cmd_demo_sinc(&args.output, args.seed)?;
        }
        Command::Advantage(args) => {
            commands::cmd_advantage(&args)?;
        }
    }
    Ok(())
}
