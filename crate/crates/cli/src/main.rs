//! `rps`: negation experiments on random permutation sets.

mod commands;
mod error;
mod model;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rps_core::{DEFAULT_CONVERGENCE_EPS, DEFAULT_ITERATIONS, DEFAULT_MAX_FRAME_SIZE};

use commands::{Format, Method, Options};
use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "rps",
    version,
    about = "Negation, entropy and distance for random permutation sets"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Largest frame whose permutation event space may be enumerated.
    #[arg(long, default_value_t = DEFAULT_MAX_FRAME_SIZE, global = true)]
    max_frame_size: usize,

    /// Rescale input masses to sum to 1 instead of rejecting them.
    #[arg(long, global = true)]
    renormalize: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Iterate the PM negation and print PM_0..PM_k.
    Negate {
        model: PathBuf,
        #[arg(long, short = 'k', default_value_t = DEFAULT_ITERATIONS)]
        iterations: usize,
    },
    /// Print the entropy and consecutive-distance series of iterated negation.
    Trace {
        model: PathBuf,
        #[arg(long, short = 'k', default_value_t = DEFAULT_ITERATIONS as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        iterations: u64,
        /// Sup-norm tolerance for reporting convergence to the fixed point.
        #[arg(long, default_value_t = DEFAULT_CONVERGENCE_EPS)]
        eps: f64,
    },
    /// Apply one step of a baseline negation (Yager for probabilities, Yin for BPAs).
    Baseline {
        model: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let opts = Options {
        format: cli.format,
        max_frame_size: cli.max_frame_size,
        renormalize: cli.renormalize,
    };
    let stdout = std::io::stdout().lock();
    match cli.command {
        Command::Negate { model, iterations } => {
            commands::negate(&model, iterations, &opts, stdout)
        }
        Command::Trace {
            model,
            iterations,
            eps,
        } => {
            if eps.is_nan() || eps <= 0.0 {
                return Err(CliError::Parse(format!(
                    "--eps must be positive, got {eps}"
                )));
            }
            match commands::trace(&model, iterations as usize, eps, &opts, stdout)? {
                Some(i) => eprintln!("converged to the fixed point at iteration {i} (eps {eps:e})"),
                None => eprintln!("not converged within {iterations} iterations (eps {eps:e})"),
            }
            Ok(())
        }
        Command::Baseline { model, method } => commands::baseline(&model, method, &opts, stdout),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
