use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use skewsep_cli::{commands, CliError, Problem};

/// Decide separability and weak separability of R/fR for skew polynomial rings R = B[X; rho, D].
#[derive(Parser)]
#[command(name = "skewsep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the ring axioms and the laws of rho and D.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Test whether f lies in R(0), i.e. fR = Rf.
    CheckR0 {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide separability and weak separability of A = R/fR.
    Decide {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Include a separability witness or an outer derivation seed.
        #[arg(long)]
        witness: bool,
    },
    /// Compute Der_B(A) and compare it with the inner derivations.
    Oracle {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify every admissible monic f up to the given degree over the file's ring.
    Sweep {
        path: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
        /// Also run the derivation oracle on each instance.
        #[arg(long)]
        oracle: bool,
    },
}

fn emit<T: Serialize + std::fmt::Display>(report: &T, json: bool) -> Result<(), CliError> {
    if json {
        let text = serde_json::to_string_pretty(report).map_err(|e| CliError::Invariant(e.to_string()))?;
        println!("{text}");
    } else {
        print!("{report}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { path, json } => emit(&commands::validate(&Problem::load(&path)?), json),
        Command::CheckR0 { path, json } => emit(&commands::check_r0(&Problem::load(&path)?)?, json),
        Command::Decide { path, json, witness } => emit(&commands::decide(&Problem::load(&path)?, witness)?, json),
        Command::Oracle { path, json } => emit(&commands::oracle(&Problem::load(&path)?)?, json),
        Command::Sweep {
            path,
            max_degree,
            json,
            oracle,
        } => emit(&commands::sweep(&Problem::load(&path)?, max_degree, oracle)?, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
