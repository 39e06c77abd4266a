mod commands;
mod config;
mod output;
mod verify;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use config::{Flags, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "snt", version, about = "Bounds for moments of the argument of the zeta function")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Best constants, Wakasa's constants and their ratio for 2 ≤ n ≤ n-max
    Table1,
    /// Run the verification suites
    Verify,
    /// S_n(t) from the integral and from the zero sum, against the envelope
    Snt,
    /// Evaluate an extremal function g on the real line
    ExtremalEval,
    /// Balance the explicit formula for an extremal test function
    GwAudit,
    /// Bound constants and δ_n
    Constants,
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = RunConfig::resolve(&cli.flags, std::env::var("SNT_ZEROS").ok())?;
    let passed = match cli.command {
        Command::Table1 => {
            let out = commands::table1(&cfg)?;
            out.table.emit(cfg.format)?;
            out.passed
        }
        Command::Verify => {
            let zeros = cfg.zero_table()?;
            let (table, ok) = verify::run(cfg.suite.as_deref(), &cfg.quadrature, zeros.as_ref())?;
            table.emit(cfg.format)?;
            ok
        }
        Command::Snt => {
            commands::snt(&cfg)?.emit(cfg.format)?;
            true
        }
        Command::ExtremalEval => {
            commands::extremal_eval(&cfg)?.emit(cfg.format)?;
            true
        }
        Command::GwAudit => {
            let out = commands::gw(&cfg)?;
            out.table.emit(cfg.format)?;
            out.passed
        }
        Command::Constants => {
            commands::constants(&cfg)?.emit(cfg.format)?;
            true
        }
    };
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
