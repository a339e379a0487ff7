//! Command-line front end: every run is described by an [`ExperimentManifest`].

mod commands;
mod manifest;

pub use commands::{run, Runtime};
pub use manifest::{Command, ExperimentManifest, Format, Params};

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] betadix::Error),
    #[error("missing --{0}")]
    Missing(&'static str),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("checkpoint was written for a different experiment")]
    CheckpointMismatch,
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Missing(_) => "E_MISSING_ARGUMENT",
            CliError::Io { .. } => "E_IO",
            CliError::Json(_) => "E_JSON",
            CliError::CheckpointMismatch => "E_CHECKPOINT_MISMATCH",
        }
    }

    /// 2 when the inputs fall outside the theorem's hypotheses, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_hypothesis_rejection() => 2,
            _ => 1,
        }
    }

    pub const CODES: &'static [(&'static str, &'static str)] = &[
        ("E_MISSING_ARGUMENT", "a flag required by the command is absent"),
        ("E_IO", "file could not be read or written"),
        ("E_JSON", "malformed manifest or checkpoint"),
        ("E_CHECKPOINT_MISMATCH", "resume file belongs to another experiment"),
        ("E_USAGE", "command line could not be parsed"),
    ];
}

pub fn error_code_help() -> String {
    let mut out = String::from("Error codes (printed as JSON on stderr):\n");
    for (code, what) in betadix::Error::CODES.iter().chain(CliError::CODES) {
        out.push_str(&format!("  {code:<24} {what}\n"));
    }
    out.push_str("\nExit status: 0 success, 2 hypothesis rejected (ramified, inertia degree > 1,\nnot coprime, root of unity), 1 any other error.");
    out
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
