//! IO companion for the exact covolume geometry core: JSON input documents,
//! deterministic human/JSON/CSV rendering, witness files, and a threaded
//! fuzz driver whose output is independent of the thread count.

pub mod document;
pub mod parallel;
pub mod render;
pub mod witness;

use std::fmt;

/// Errors surfaced by the CLI layer. Domain errors from the core keep their
/// own variant so callers can tell bad input apart from bad files.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(covgeo_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<covgeo_core::Error> for CliError {
    fn from(e: covgeo_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
