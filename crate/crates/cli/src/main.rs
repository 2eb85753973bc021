mod args;
mod commands;
mod error;
mod manifest;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::commands::{Outcome, Status};
use crate::error::{CliError, CliResult};

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::new()
        .filter_level(if cli.verbose { log::LevelFilter::Info } else { log::LevelFilter::Warn })
        .format_timestamp(None)
        .init();

    match run(&cli) {
        Ok(status) => ExitCode::from(status.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Status> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
    }

    let start = Instant::now();
    let timing = || cli.timing.then(|| start.elapsed().as_secs_f64());
    let outcome = match &cli.command {
        Command::Gen(a) => commands::gen::run(a, timing)?,
        Command::Solve(a) => commands::solve::run(a, timing)?,
        Command::Reduce(a) => commands::reduce::run(a, timing)?,
        Command::Samba(a) => commands::samba::run(a, timing)?,
        Command::Mdlh(a) => commands::mdlh::run(a, timing)?,
        Command::Verify(a) => commands::reduce::verify(a, "verify", timing)?,
    };
    emit(&outcome)?;
    Ok(outcome.status)
}

fn emit(outcome: &Outcome) -> CliResult<()> {
    match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.text)
            .map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(outcome.text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
