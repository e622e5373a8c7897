use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] conifold_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid dataset: {0}")]
    Dataset(String),

    #[error("not a rational number: `{0}`")]
    BadRational(String),

    #[error("missing required flag {flag} for `{command}`")]
    MissingFlag { command: &'static str, flag: &'static str },
}
