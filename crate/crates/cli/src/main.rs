use std::process::ExitCode;

use clap::Parser;
use dendri_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = execute(&cli);
    if let Some(report) = &outcome.report {
        print!("{}", report.to_json());
    }
    if let Some(error) = &outcome.error {
        eprintln!("error: {error}");
    }
    ExitCode::from(outcome.exit_code as u8)
}
