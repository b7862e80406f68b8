//! Library side of the `seedwave` command-line tool.

pub mod args;
pub mod commands;
pub mod error;
pub mod files;
pub mod manifest;
pub mod report;

pub use args::{Cli, Command, Job};
pub use error::{CliError, Result};
pub use manifest::RunManifest;

/// Runs one parsed command line.
pub fn run(cli: Cli) -> Result<()> {
    let job = match cli.command {
        Command::Gen(a) => Job::Gen(a),
        Command::Verify(a) => Job::Verify(a),
        Command::Construct(a) => Job::Construct(a),
        Command::Decompose(a) => Job::Decompose(a),
        Command::Cwt(a) => Job::Cwt(a),
        Command::Replay(a) => return commands::replay(&a),
    };
    commands::run_job(&job)
}
