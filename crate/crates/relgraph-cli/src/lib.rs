//! Library half of the `relgraph` binary: the record schema and the
//! subcommand implementations, kept callable in-process for tests.

pub mod commands;
pub mod record;

pub use commands::{
    cmd_curate, cmd_generate, cmd_oracle, cmd_solve, cmd_verify, CliError, CurateArgs,
    GenerateArgs, OracleArgs, SolveArgs, VerifyArgs,
};
pub use record::{CertificateRecord, HintRecord, RelRecord};
