use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = ramsey_cli::Cli::parse();
    match ramsey_cli::run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(ramsey_cli::EXIT_USAGE as u8)
        }
    }
}
