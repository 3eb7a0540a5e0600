use std::process::ExitCode;

use clap::Parser;
use qresample_cli::config::Cli;

fn main() -> ExitCode {
    match qresample_cli::run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qresample: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
