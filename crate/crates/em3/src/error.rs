use thiserror::Error;

/// Failures surfaced by the command-line layer. All of them map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] em3_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("could not start the worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("could not encode JSON: {0}")]
    Json(#[from] serde_json::Error),
}
