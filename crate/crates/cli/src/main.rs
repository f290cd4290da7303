use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use nmode_squeeze_cli::config::{parse_tolerance, Command, Format, GridAxis, PointSpec, RunConfig};
use nmode_squeeze_cli::{execute, EXIT_USAGE};

/// Cyclic n-mode squeezing: matrices, states, variances, Wigner grids and
/// the verification suite.
#[derive(Parser)]
#[command(name = "nmode-squeeze", version, allow_negative_numbers = true)]
struct Cli {
    #[arg(value_enum)]
    command: Command,

    /// Number of modes.
    #[arg(long)]
    n: Option<usize>,

    /// Squeezing parameter.
    #[arg(long)]
    lambda: Option<f64>,

    /// Per-mode photon cutoff for Fock amplitudes (`state`).
    #[arg(long)]
    cutoff: Option<usize>,

    /// Grid axis `AXIS=lo:hi:steps` with AXIS in q1..qn, p1..pn; at most two.
    #[arg(long, value_name = "AXIS=lo:hi:steps", allow_hyphen_values = true)]
    grid: Vec<GridAxis>,

    /// Phase point `q1,...,qn:p1,...,pn`; repeatable.
    #[arg(long, value_name = "q...:p...", allow_hyphen_values = true)]
    point: Vec<PointSpec>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Seed for the random points drawn by `verify`.
    #[arg(long)]
    seed: Option<u64>,

    /// Tolerance override `NAME=VAL`; repeatable.
    #[arg(long, value_name = "NAME=VAL", value_parser = parse_tolerance)]
    tolerance: Vec<(String, f64)>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        command: cli.command,
        n: cli.n,
        lambda: cli.lambda,
        cutoff: cli.cutoff,
        grid: cli.grid,
        points: cli.point,
        format: cli.format,
        tolerance: cli.tolerance.into_iter().collect::<BTreeMap<_, _>>(),
        seed: cli.seed,
    };
    let (text, code) = match execute(&cfg) {
        Ok(done) => done,
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(code as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(code as u8)
}
