use std::io;
use std::process::ExitCode;

use clap::Parser;
use semigroup_lengths_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli, &mut io::stderr()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sglen: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
