//! `scp`: build, verify and export sparse complementary pairs.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 for bad
//! input (unreadable files, malformed JSON, invalid parameters).
//! Log verbosity comes from `SCP_LOG` (e.g. `SCP_LOG=debug`).

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Output;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SCP_LOG", "warn")).init();
    let cli = Cli::parse();
    let out = Output {
        path: cli.out.as_deref(),
        format: cli.format,
    };
    let result = match &cli.command {
        Command::Construct(a) => commands::construct(a, &out),
        Command::Mate(a) => commands::mate(a, &out),
        Command::Verify(a) => commands::verify(a, &out),
        Command::Correlate(a) => commands::correlate(a, &out),
        Command::Table1 => commands::table1(&out),
        Command::Sweep(a) => commands::sweep(a, cli.seed, &out),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
