use std::io;
use std::path::PathBuf;

use dualkripke_core::{Error as CoreError, SignatureError};
use thiserror::Error;

/// Process exit status. Each outcome class has exactly one code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// A formula is false, a check disagreed, or a model is invalid.
    Failed = 1,
    /// Bad arguments, unreadable or unparseable input.
    Usage = 2,
    /// A size cap was exceeded.
    Cap = 3,
    /// The argument model admits no ultrafilter.
    Trivial = 4,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{}: {source}", path.display())]
    Toml {
        path: PathBuf,
        source: Box<toml::de::Error>,
    },
    #[error("{0}")]
    Usage(String),
    #[error("invalid signature: {0}")]
    Signature(#[from] SignatureError),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit(&self) -> Exit {
        match self {
            CliError::Read { .. } | CliError::Write { .. } | CliError::Json { .. } | CliError::Toml { .. } => {
                Exit::Usage
            }
            CliError::Usage(_) | CliError::Io(_) => Exit::Usage,
            CliError::Signature(_) => Exit::Failed,
            CliError::Core(e) => match e {
                CoreError::InvalidModel(_) => Exit::Failed,
                CoreError::SizeCap { .. } => Exit::Cap,
                CoreError::Trivial => Exit::Trivial,
                CoreError::UnknownPoint(_) | CoreError::NotNormalized(_) | CoreError::Bind(_) => Exit::Usage,
            },
        }
    }
}
