mod cli;
mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::cli::Cli;
use crate::commands::Ctx;
use crate::config::FileConfig;
use crate::error::CliResult;

fn run(cli: Cli) -> CliResult<bool> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let out = cli.out.clone().or_else(|| file.output.out.clone());
    let format = cli.format.or(file.output.format).unwrap_or_default();
    let ctx = Ctx {
        file,
        out,
        format,
        n_max: cli.n_max,
    };
    let report = commands::run(&ctx, &cli.command)?;
    report.table.emit(ctx.format, ctx.out.as_deref())?;
    Ok(report.failed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
