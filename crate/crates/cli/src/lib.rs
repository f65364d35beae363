//! Front end for `amf-core`: subcommands, database records and fixture verification.

pub mod args;
pub mod commands;
pub mod fixtures;
pub mod record;

use std::process::ExitCode;

use amf_core::Error;
use clap::Parser;

use args::{Cli, Command, Format};
use commands::{Report, UsageError};

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

fn is_usage(e: &anyhow::Error) -> bool {
    if e.downcast_ref::<UsageError>().is_some() {
        return true;
    }
    matches!(
        e.downcast_ref::<Error>(),
        Some(Error::BadParameter(_) | Error::Parse(_) | Error::NotPrime(_))
    )
}

fn dispatch(cmd: &Command) -> anyhow::Result<(Report, Format, Option<std::path::PathBuf>)> {
    Ok(match cmd {
        Command::Basis(a) => (commands::cmd_basis(a)?, a.out.format, a.out.output.clone()),
        Command::Dims(a) => (commands::cmd_dims(a)?, a.out.format, a.out.output.clone()),
        Command::Hecke(a) => (commands::cmd_hecke(a)?, a.out.format, a.out.output.clone()),
        Command::Congruence(a) => (commands::cmd_congruence(a)?, a.out.format, a.out.output.clone()),
        Command::CmPoints(a) => (commands::cmd_cm_points(a)?, a.out.format, a.out.output.clone()),
        Command::Divide(a) => (commands::cmd_divide(a)?, a.out.format, a.out.output.clone()),
        Command::Verify(a) => (commands::cmd_verify(a)?, a.out.format, a.out.output.clone()),
        Command::ExportDb(a) => (commands::cmd_export_db(a)?, Format::Text, None),
    })
}

/// Parses `args`, runs the subcommand, and maps the outcome to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(n) = cli.workers {
        if n == 0 {
            eprintln!("error: worker count must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(&cli.command) {
        Ok((report, format, output)) => {
            let body = report.render(format);
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, body) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::from(EXIT_FAILURE);
                    }
                }
                None => print!("{body}"),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage(&e) { EXIT_USAGE } else { EXIT_FAILURE })
        }
    }
}
