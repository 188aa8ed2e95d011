use std::process::ExitCode;

use clap::Parser;
use pialg::cli::{run, Cli, ERROR_EXIT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    match run(&cli, argv) {
        Ok(outcome) => {
            let out = outcome.render(cli.format);
            print!("{out}");
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &out) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(ERROR_EXIT as u8);
                }
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ERROR_EXIT as u8)
        }
    }
}
