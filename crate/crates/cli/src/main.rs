mod cli;
mod commands;
mod error;
mod format;
mod input;
mod report;

use std::process::ExitCode;

use clap::Parser;

use crate::cli::{Cli, Command, MeasureCommand, VerifyCommand};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reduce(args) => commands::reduce::run(&args),
        Command::Measure(MeasureCommand::Approx(args)) => commands::measure::approx(&args),
        Command::Measure(MeasureCommand::Exact(args)) => commands::measure::exact(&args),
        Command::Verify(VerifyCommand::Convergence(args)) => commands::verify::convergence(&args),
        Command::Verify(VerifyCommand::Representation(args)) => {
            commands::verify::representation(&args)
        }
        Command::Verify(VerifyCommand::Convexity(args)) => commands::verify::convexity(&args),
        Command::Sample(args) => commands::sample::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("trexp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
