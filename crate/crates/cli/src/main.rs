//! `switch-thermo`: batch front end for switch-assisted qubit thermometry.
//!
//! Every command writes CSV or JSON to `--out` (or standard output) and exits
//! 0 on success, 2 on a usage error, 3 on a numerical failure and 1 on an I/O
//! failure. Failures print one JSON line `{"error": kind, "message": …}` on
//! standard error.

mod args;
mod error;
mod output;
mod reports;
mod reproduce;
mod sweep;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use error::{CliError, CliResult};
use output::{emit, to_json};

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Sweep(a) => {
            let record = sweep::SweepConfig::from_args(&a)?.record()?;
            let text = match a.format {
                Format::Csv => record.table.to_csv(),
                Format::Json => to_json(&record),
            };
            emit(a.out.as_deref(), &text)
        }
        Command::Optimize(a) => emit(a.out.as_deref(), &to_json(&reports::optimize(&a)?)),
        Command::Threshold(a) => emit(a.out.as_deref(), &to_json(&reports::threshold(&a)?)),
        Command::Tur(a) => emit(a.out.as_deref(), &to_json(&reports::tur(&a)?)),
        Command::Reproduce(a) => emit(None, &to_json(&reproduce::reproduce(&a)?)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let err = CliError::Usage(rendered.trim_start_matches("error: ").to_string());
            eprintln!("{}", err.to_json_line());
            return err.exit_code();
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", err.to_json_line());
            err.exit_code()
        }
    }
}
