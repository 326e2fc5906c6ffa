// SPDX-License-Identifier: Apache-2.0

use std::io::{self, Write};
use std::process::ExitCode;

use biquad_cli::args::Cli;
use biquad_cli::{execute, CliError, Outcome};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = execute(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(Outcome::Match) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(CliError::Io(err)) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("biquad: {err}");
            ExitCode::from(2)
        }
    }
}
