use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod literal;

/// Discrete chaotic iterations: hashing, avalanche statistics, orbits and
/// chaos witnesses.
#[derive(Parser, Debug)]
#[command(name = "chaos-iter", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the 256-bit digest of a file or string.
    Hash(HashArgs),
    /// Flip one random bit in random messages and report digest changes.
    Avalanche(AvalancheArgs),
    /// Print every state along the orbit of G_{f0}.
    Orbit(OrbitArgs),
    /// Build and check a periodic point near the given point.
    Periodic(PeriodicArgs),
    /// Build and check a point in ball A whose orbit reaches ball B.
    Transit(TransitArgs),
    /// Build and check a nearby point whose orbit separates.
    Sensitivity(SensitivityArgs),
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum ModeArg {
    /// 7-bit ASCII input.
    Paper,
    /// Arbitrary bytes.
    #[default]
    Bytes,
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// File to hash.
    #[arg(long = "in", value_name = "FILE", group = "source")]
    input: Option<PathBuf>,
    /// Literal text to hash.
    #[arg(long, value_name = "STRING", group = "source")]
    text: Option<String>,
}

#[derive(Args, Debug)]
struct HashArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t)]
    mode: ModeArg,
}

#[derive(Args, Debug)]
struct AvalancheArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Message length in bytes.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    length: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    mode: ModeArg,
}

#[derive(Args, Debug)]
struct PointArgs {
    /// Number of cells N.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    width: u64,
    /// State as N binary digits or N/4 hex digits (0b/0x prefixes allowed).
    #[arg(long)]
    state: String,
    /// Comma-separated 1-based cell indices.
    #[arg(long, allow_hyphen_values = true)]
    strategy: String,
}

#[derive(Args, Debug)]
struct OrbitArgs {
    #[command(flatten)]
    point: PointArgs,
    #[arg(long)]
    steps: usize,
}

#[derive(Args, Debug)]
struct PeriodicArgs {
    #[command(flatten)]
    point: PointArgs,
    #[arg(long, allow_hyphen_values = true)]
    epsilon: f64,
}

#[derive(Args, Debug)]
struct TransitArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    width: u64,
    #[arg(long)]
    state_a: String,
    #[arg(long)]
    strategy_a: String,
    #[arg(long, allow_hyphen_values = true)]
    radius_a: f64,
    #[arg(long)]
    state_b: String,
    #[arg(long)]
    strategy_b: String,
    #[arg(long, allow_hyphen_values = true)]
    radius_b: f64,
}

#[derive(Args, Debug)]
struct SensitivityArgs {
    #[command(flatten)]
    point: PointArgs,
    #[arg(long, allow_hyphen_values = true)]
    radius: f64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = commands::run(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
