//! Front end of the `dendri` command: load structure files, run checks,
//! compute cohomology tables and emit deterministic JSON reports.
//!
//! Exit codes: 0 when every verdict holds, 1 when an identity is violated,
//! 2 for unreadable or malformed input.

pub mod args;
mod commands;
pub mod report;

use clap::Parser;

pub use args::Cli;
pub use report::{RunReport, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Load { path: String, source: dendri_core::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] dendri_core::Error),
}

/// Result of one invocation: the report (absent on input errors) and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Option<RunReport>,
    pub error: Option<String>,
}

fn command_name(cli: &Cli) -> String {
    use args::{Command, DeformCommand, HomotopyCommand, RboCommand};
    let name = match &cli.command {
        Command::Check { .. } => "check",
        Command::Cohomology { .. } => "cohomology",
        Command::Rbo { action } => match action {
            RboCommand::Check { .. } => "rbo check",
            RboCommand::Induce { .. } => "rbo induce",
            RboCommand::Cohomology { .. } => "rbo cohomology",
        },
        Command::Deform { action } => match action {
            DeformCommand::Check { .. } => "deform check",
            DeformCommand::Infinitesimal { .. } => "deform infinitesimal",
            DeformCommand::Obstruct { .. } => "deform obstruct",
            DeformCommand::Extend { .. } => "deform extend",
        },
        Command::Homotopy { action } => match action {
            HomotopyCommand::CheckAinf { .. } => "homotopy check-ainf",
            HomotopyCommand::CheckDendinf { .. } => "homotopy check-dendinf",
            HomotopyCommand::Split { .. } => "homotopy split",
            HomotopyCommand::Induce { .. } => "homotopy induce",
            HomotopyCommand::Diass { .. } => "homotopy diass",
        },
        Command::Dual { .. } => "dual",
    };
    name.to_string()
}

pub fn execute(cli: &Cli) -> Outcome {
    let mut report = RunReport::new(command_name(cli), cli.seed);
    let result = commands::run(cli, &mut report);
    match result {
        Ok(()) => {}
        Err(CliError::Core(e)) if commands::is_violation(&e) => {
            report.push(e.to_string(), false);
        }
        Err(e) => return Outcome { exit_code: 2, report: None, error: Some(e.to_string()) },
    }
    report.finish();
    let exit_code = if report.passed() { 0 } else { 1 };
    Outcome { exit_code, report: Some(report), error: None }
}

/// Parses `args` (including the program name) and executes them.
pub fn execute_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => Outcome { exit_code: 2, report: None, error: Some(e.to_string()) },
    }
}
