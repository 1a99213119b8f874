mod commands;
mod config;
mod error;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use config::{Cli, Command, EpsSamples};
use error::CliError;
use render::Report;

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Some(n) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
    }
    let samples = EpsSamples::parse(&cli.global.eps_samples)?;
    match &cli.command {
        Command::Table { dim } => commands::cmd_table(*dim, &samples),
        Command::Verify { select, published } => commands::cmd_verify(select, *published, &samples),
        Command::Invariants { select } => commands::cmd_invariants(select, &samples),
        Command::Identities {
            seed,
            random_checks,
        } => commands::cmd_identities(*seed, *random_checks),
        Command::CheckFile { path } => commands::cmd_check_file(path),
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let mut out: Box<dyn Write> = match &cli.global.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|source| {
            CliError::Read {
                path: path.clone(),
                source,
            }
        })?)),
        None => Box::new(io::stdout().lock()),
    };
    report.render(cli.global.format, &mut out)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli).and_then(|report| emit(&cli, &report).map(|()| report.failed)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(EXIT_FAILURE),
        Err(CliError::Write(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
