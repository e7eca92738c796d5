use std::path::PathBuf;

use crate::record_store::{Diagnostic, Severity};

/// Unified error type for the library and the CLI.
///
/// The CLI derives its exit codes from the variant class: content problems
/// (parse failures, lint errors, dangling record references) count as
/// validation failures, OS-level failures as I/O failures, and bad
/// parameter values as configuration errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("validation failed with {} error diagnostic(s)",
            .0.iter().filter(|d| d.severity == Severity::Error).count())]
    Validation(Vec<Diagnostic>),

    #[error("dataset: {0}")]
    Dataset(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("reach search left the exactly representable integer range; \
             epsilon_out is implausibly small")]
    ReachOverflow,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
