use std::fmt;
use std::io;
use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug)]
pub enum Error {
    /// An asset or config file could not be read.
    Io { path: PathBuf, source: io::Error },
    /// A required asset file is absent from the asset directory.
    MissingAsset { file: String },
    /// A JSON document failed to parse.
    Json { what: String, source: serde_json::Error },
    /// A config value has the wrong type or an unparseable value.
    InvalidFlag { key: String, reason: String },
    UnknownKey { key: String, source_name: &'static str },
    /// A dictionary entry violates a bundle invariant.
    InvalidAsset {
        file: String,
        entry: String,
        reason: String,
    },
    InputTooLarge { graphemes: usize, limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            Error::MissingAsset { file } => write!(f, "missing asset file {file}"),
            Error::Json { what, source } => write!(f, "malformed JSON in {what}: {source}"),
            Error::InvalidFlag { key, reason } => write!(f, "invalid value for `{key}`: {reason}"),
            Error::UnknownKey { key, source_name } => {
                write!(f, "unknown config key `{key}` in {source_name}")
            }
            Error::InvalidAsset {
                file,
                entry,
                reason,
            } => write!(f, "{file}: entry `{entry}` {reason}"),
            Error::InputTooLarge { graphemes, limit } => write!(
                f,
                "input has {graphemes} graphemes, more than the limit of {limit}"
            ),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            Error::Json { source, .. } => Some(source),
            _ => None,
        }
    }
}
