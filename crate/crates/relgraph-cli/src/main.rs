//! `relgraph`: solve hard graph problems on certified nearby instances,
//! curate labeled datasets, generate edit-robust instance families, verify
//! dataset records, and query the exact oracles.
//!
//! Exit codes: 0 success, 1 verification failure or negative oracle,
//! 2 usage, 3 oracle-cutoff refusal, 4 I/O.

use clap::{Parser, Subcommand};

use relgraph_cli::{
    cmd_curate, cmd_generate, cmd_oracle, cmd_solve, cmd_verify, CurateArgs, GenerateArgs,
    OracleArgs, SolveArgs, VerifyArgs,
};

#[derive(Parser)]
#[command(name = "relgraph", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance, emitting a dataset record.
    Solve(SolveArgs),
    /// Solve a directory of instances into a JSON-lines dataset.
    Curate(CurateArgs),
    /// Generate an edit-robust instance with its layout sidecar.
    Generate(GenerateArgs),
    /// Re-verify dataset records against their original graphs.
    Verify(VerifyArgs),
    /// Query an exact oracle (refuses instances over the cutoff).
    Oracle(OracleArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Curate(args) => cmd_curate(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    if let Err(e) = result {
        if !e.message().is_empty() {
            eprintln!("error: {}", e.message());
        }
        std::process::exit(e.exit_code());
    }
}
