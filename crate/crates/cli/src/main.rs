use std::process::ExitCode;

use clap::Parser;
use superyangian_cli::config::Cli;
use superyangian_cli::run::execute;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
