//! Exit codes: 0 success, 2 validation failure (off-lattice inputs, bad
//! coordinates, malformed parameters — also clap's own code for argument
//! errors), 1 internal failure or failed verification.

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use lbit_cli::cli::Cli;
use lbit_cli::render;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match lbit_cli::run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match render::render(&output.report, cli.format.into()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("render error: {e}");
            return ExitCode::from(1);
        }
    };
    let write_result = match &cli.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = write_result {
        eprintln!("write error: {e}");
        return ExitCode::from(1);
    }
    if output.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
