mod args;
mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use commands::{Status, TableArgs, Unreadable};
use mpoly_topo::Error;

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;
const EX_IOERR: u8 = 74;

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Unreadable>().is_some() {
        return EX_NOINPUT;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::RouteDisagreement(_)) => 2,
        Some(Error::Domain { .. } | Error::Infeasible { .. } | Error::DivergentIntegral { .. }) => 3,
        Some(Error::UnknownFamily(_) | Error::BadParams(_) | Error::InvalidRange(_)) => EX_USAGE,
        Some(
            Error::Format { .. }
            | Error::Parse { .. }
            | Error::InvalidEdge { .. }
            | Error::DegenerateDegree { .. }
            | Error::Json(_)
            | Error::InvalidRadicand(_),
        ) => EX_DATAERR,
        None if err.downcast_ref::<io::Error>().is_some() => EX_IOERR,
        None => 1,
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let pick = |default| cli.format.unwrap_or(default);
    let status = match &cli.command {
        Command::Compute { source, fail_on_mismatch } => {
            commands::compute(&mut out, source, pick(Format::Text), *fail_on_mismatch)?
        }
        Command::Table { family, range, cross, published, fail_on_mismatch } => {
            let args = TableArgs {
                family: family.as_deref(),
                range,
                cross: *cross,
                published: *published,
                fail_on_mismatch: *fail_on_mismatch,
            };
            commands::table(&mut out, args, pick(Format::Csv))?
        }
        Command::Grid { source, x, y, steps } => {
            commands::grid(&mut out, source, x, y, *steps, pick(Format::Csv))?
        }
        Command::Families => commands::families(&mut out, pick(Format::Text))?,
        Command::Mpoly { source, partition, trace } => {
            commands::mpoly(&mut out, source, *partition, *trace, pick(Format::Text))?
        }
    };
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EX_USAGE);
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::TableMismatch) => ExitCode::from(1),
        Ok(Status::Disagreement) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
