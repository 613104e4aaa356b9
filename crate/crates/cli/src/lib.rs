//! File formats, reports and command implementations behind the `areg`
//! binary.

pub mod commands;
pub mod descriptor;
pub mod report;

use thiserror::Error;

pub use commands::{Outcome, EXIT_DISAGREEMENT, EXIT_ERROR, EXIT_NO, EXIT_YES};
pub use descriptor::PairDescriptorFile;
pub use report::VerdictReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] areg_core::Error),

    #[error("cannot serialize report: {0}")]
    Serialize(#[from] serde_json::Error),
}
