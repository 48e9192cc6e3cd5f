use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, EcdError>;

#[derive(Debug, Error)]
pub enum EcdError {
    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A classical orbit left the map's domain box.
    #[error("orbit escaped the domain at iterate {index}")]
    Divergence { index: usize },

    #[error("unknown map `{0}`")]
    UnknownMap(String),

    #[error("config error in `{field}`: {message}")]
    Config { field: String, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl EcdError {
    pub(crate) fn config(field: &str, message: impl Into<String>) -> Self {
        EcdError::Config {
            field: field.to_string(),
            message: message.into(),
        }
    }
}
