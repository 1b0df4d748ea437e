mod args;
mod commands;
mod range;

use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Report};
use range::parse_range;

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let usage = CliError::Usage;
    match &cli.command {
        Command::Verify { d, batch, output } => {
            commands::verify(parse_range(d, batch.max_d).map_err(usage)?, batch.jobs, output.format)
        }
        Command::Present { d, batch, output } => {
            commands::present(parse_range(d, batch.max_d).map_err(usage)?, batch.jobs, output.format)
        }
        Command::Table {
            from,
            to,
            d,
            batch,
            output,
        } => {
            let range = match (d, from, to) {
                (Some(d), _, _) => parse_range(d, batch.max_d).map_err(usage)?,
                (None, Some(a), Some(b)) => parse_range(&format!("{a}..{b}"), batch.max_d).map_err(usage)?,
                (None, Some(a), None) => parse_range(&a.to_string(), batch.max_d).map_err(usage)?,
                _ => return Err(CliError::Usage("table needs --from [--to] or --d".into())),
            };
            commands::table(range, batch.jobs, output.format)
        }
        Command::Lambda { d, output } => commands::lambda(*d, output.format),
        Command::Eval { expr, d, output, .. } => commands::eval(expr, d.as_deref(), output.format),
    }
}

fn output_path(cli: &Cli) -> Option<&std::path::Path> {
    let out = match &cli.command {
        Command::Verify { output, .. }
        | Command::Present { output, .. }
        | Command::Table { output, .. }
        | Command::Lambda { output, .. }
        | Command::Eval { output, .. } => output,
    };
    out.out.as_deref()
}

fn emit(cli: &Cli, body: &str) -> anyhow::Result<()> {
    match output_path(cli) {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report.body) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            ExitCode::from(if report.pass { 0 } else { 1 })
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
