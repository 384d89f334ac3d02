mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Measures(input) => commands::measures(&cli.global, input),
        Command::Spectrum(args) => commands::spectrum(&cli.global, args),
        Command::Regularize(args) => commands::regularize(&cli.global, args),
        Command::Check(args) => commands::check(&cli.global, args),
        Command::Corpus(args) => commands::corpus(&cli.global, args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("irreg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
