//! `grover-sim`: sweeps, side-by-side comparisons, and pseudo-spin reductions
//! on the command line.
//!
//! Data goes to stdout (or `--output`), diagnostics to stderr, exit code 0
//! only on success. CSV probabilities are printed with exactly 12 decimals so
//! tolerance claims can be checked from the text alone.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grover_core::grover::Variant;

#[derive(Parser)]
#[command(name = "grover-sim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one sequence variant and tabulate it against the closed form.
    Grover(SweepArgs),
    /// Run the corrected and original sequences side by side.
    Compare(CompareArgs),
    /// Reduce (U, gamma, tau) to the 2x2 pseudo-spin rotation.
    Reduce(ReduceArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Number of qubits (1..=12).
    #[arg(long)]
    n: usize,
    /// Marked basis state as a bitstring.
    ///
    /// Bitstrings are read left to right as qubits 0..n-1, with qubit 0 the
    /// most significant bit of the basis index: --marked 011 on three qubits
    /// is basis state 3.
    #[arg(long)]
    marked: String,
    /// Prepared basis state as a bitstring; defaults to all zeros.
    #[arg(long)]
    prepared: Option<String>,
    /// Which gate sequence to run.
    #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
    variant: VariantArg,
    /// Largest iteration count; defaults to two periods, 2*ceil(pi/(4*theta)).
    #[arg(long = "s-max")]
    s_max: Option<usize>,
    /// JSON unitary file ({"dim": d, "entries": [[re, im], ...]} row-major),
    /// required for --variant general.
    #[arg(long = "unitary-file")]
    unitary_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write data to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include the full state vector of every step (JSON format only).
    #[arg(long = "emit-state")]
    emit_state: bool,
}

#[derive(Args)]
struct CompareArgs {
    /// Number of qubits (1..=12).
    #[arg(long)]
    n: usize,
    /// Marked basis state as a bitstring.
    ///
    /// Bitstrings are read left to right as qubits 0..n-1, with qubit 0 the
    /// most significant bit of the basis index.
    #[arg(long)]
    marked: String,
    /// Prepared basis state as a bitstring; defaults to all zeros.
    #[arg(long)]
    prepared: Option<String>,
    /// Largest iteration count; defaults to two periods, 2*ceil(pi/(4*theta)).
    #[arg(long = "s-max")]
    s_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write data to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// JSON unitary file ({"dim": d, "entries": [[re, im], ...]} row-major).
    #[arg(
        long = "unitary-file",
        conflicts_with = "w",
        required_unless_present = "w"
    )]
    unitary_file: Option<PathBuf>,
    /// Use the built-in W_n layer on this many qubits instead of a file.
    #[arg(long)]
    w: Option<usize>,
    /// Prepared basis state as a bitstring.
    ///
    /// Bitstrings are read left to right as qubits 0..n-1, with qubit 0 the
    /// most significant bit of the basis index.
    #[arg(long)]
    gamma: String,
    /// Marked basis state as a bitstring.
    #[arg(long)]
    tau: String,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// Q = -P_gamma U' P_tau U with U' the adjoint of U (exact search).
    Corrected,
    /// The original sequence: U in place of the adjoint (diffusion W P W).
    Feng,
    /// Corrected form with U taken from --unitary-file.
    General,
}

impl From<VariantArg> for Variant {
    fn from(arg: VariantArg) -> Self {
        match arg {
            VariantArg::Corrected => Variant::Corrected,
            VariantArg::Feng => Variant::FengOriginal,
            VariantArg::General => Variant::GeneralU,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Grover(args) => report::cmd_grover(&args),
        Command::Compare(args) => report::cmd_compare(&args),
        Command::Reduce(args) => report::cmd_reduce(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(report::CliError::Reduction { kind, message }) => {
            // Structured error JSON for the degenerate reduction cases.
            eprintln!("{{\"error\": \"{kind}\", \"message\": \"{message}\"}}");
            ExitCode::FAILURE
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
